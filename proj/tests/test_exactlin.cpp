#include <doctest.h>

#include "paradoxkit/errors.hpp"
#include "paradoxkit/exactlin.hpp"

using namespace paradoxkit;
using namespace paradoxkit::exactlin;
using words::Letter;
using words::ReducedWord;

TEST_CASE("generator matrices, digit for digit")
{
    const auto A = Mat3Q::from_integers({6, 2, 3, 2, 3, -6, -3, 6, 2}, 7);
    const auto B = Mat3Q::from_integers({2, -6, 3, 6, 3, 2, -3, 2, 6}, 7);
    CHECK(generator_matrix(Letter::a) == A);
    CHECK(generator_matrix(Letter::b) == B);
    CHECK(GeneratorPair::standard().matrix(Letter::a_inv) == A.transpose());
    CHECK(GeneratorPair::standard().matrix(Letter::b_inv) == B.transpose());
    CHECK(GeneratorPair::standard().orthogonal());
}

TEST_CASE("generators are rotations")
{
    for (auto x : words::kAlphabet) {
        const auto& m = GeneratorPair::standard().matrix(x);
        CHECK(is_special_orthogonal(m));
        CHECK(m.determinant() == 1);
        CHECK(m * m.inverse() == Mat3Q::identity());
    }
    CHECK_FALSE(is_special_orthogonal(Mat3Q::diagonal(1, 1, -1)));
    CHECK_FALSE(is_special_orthogonal(Mat3Q::diagonal(2, 1, Rational(1, 2))));
}

TEST_CASE("axes of A and B")
{
    const auto& g = GeneratorPair::standard();
    CHECK(axis(g.matrix(Letter::a)) == ProjectiveDirection(2, 1, 0));
    CHECK(axis(g.matrix(Letter::b)) == ProjectiveDirection(0, 1, 2));
    CHECK(axis(g.matrix(Letter::a_inv)) == ProjectiveDirection(2, 1, 0));
    const Vec3Q u(2, 1, 0), v(0, 1, 2);
    CHECK(g.matrix(Letter::a) * u == u);
    CHECK(g.matrix(Letter::b) * v == v);
    CHECK_THROWS_AS(axis(Mat3Q::identity()), DegenerateInputError);
}

TEST_CASE("rank")
{
    CHECK(rank(Mat3Q::identity()) == 3);
    CHECK(rank(Mat3Q::identity() - Mat3Q::identity()) == 0);
    CHECK(rank(Mat3Q::diagonal(1, 2, 0)) == 2);
    CHECK(rank(Mat3Q::from_integers({1, 2, 3, 2, 4, 6, 3, 6, 9})) == 1);
    CHECK(rank(generator_matrix(Letter::a) - Mat3Q::identity()) == 2);
}

TEST_CASE("projective directions are canonical")
{
    CHECK(ProjectiveDirection(-4, -2, 0) == ProjectiveDirection(2, 1, 0));
    CHECK(ProjectiveDirection(0, -3, 6) == ProjectiveDirection(0, 1, -2));
    CHECK(ProjectiveDirection::of(Vec3Q(Rational(1, 2), Rational(1, 3), 0)) == ProjectiveDirection(3, 2, 0));
    CHECK(ProjectiveDirection(2, 1, 0).to_string() == "[2:1:0]");
    CHECK_THROWS_AS(ProjectiveDirection(0, 0, 0), DegenerateInputError);
}

TEST_CASE("rationals")
{
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("4") == 4);
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK(ratio(0, 5) == 0);
    CHECK(ratio(4, -6) == Rational(-2, 3));
}

TEST_CASE("singular inverse")
{
    CHECK_THROWS_AS(Mat3Q::diagonal(1, 0, 1).inverse(), DomainError);
}

TEST_CASE("scaled evaluation agrees with rational evaluation")
{
    const ScaledGenerators sg(GeneratorPair::standard());
    CHECK(sg.denominator() == 7);
    for (const auto& w : words::ball(4)) {
        const auto m = eval_word(w);
        const auto s = eval_word_scaled(w, sg);
        Integer scale = 1;
        for (std::size_t i = 0; i < w.length(); ++i)
            scale *= 7;
        for (int k = 0; k < 9; ++k)
            CHECK(Rational(s[static_cast<std::size_t>(k)]) == m(k / 3, k % 3) * scale);
    }
}

TEST_CASE("eval_word is a homomorphism on a few words")
{
    const auto u = ReducedWord::parse("abA"), v = ReducedWord::parse("aBB");
    CHECK(eval_word(words::concat(u, v)) == eval_word(u) * eval_word(v));
    CHECK(eval_word(ReducedWord{}) == Mat3Q::identity());
}
