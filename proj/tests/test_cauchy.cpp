#include <doctest.h>

#include "paradoxkit/cauchy.hpp"
#include "paradoxkit/errors.hpp"

using namespace paradoxkit;
using namespace paradoxkit::cauchy;
using exactlin::ratio;

TEST_CASE("evaluation is linear in the coordinates")
{
    const HamelModel f({"1", "sqrt2"}, {Rational(0), Rational(1)});
    CHECK(eval(f, {Rational(3), Rational(2)}) == 2);
    CHECK(eval(f, {Rational(0), Rational(0)}) == 0);
    CHECK(eval(f, {ratio(1, 2), ratio(-5, 3)}) == ratio(-5, 3));
    CHECK_THROWS_AS(eval(f, {Rational(1)}), DomainError);
    CHECK_THROWS_AS(HamelModel({"1"}, {}), DomainError);
    CHECK_THROWS_AS(HamelModel({}, {}), DomainError);
}

TEST_CASE("additivity and homogeneity")
{
    const auto f = demo_model(4);
    const auto r = verify_cauchy(f, 200, 3);
    CHECK(r.passed());
    CHECK(r.trials == 200);
    CHECK_THROWS_AS(verify_cauchy(f, 0), DomainError);
}

TEST_CASE("a nonlinear evaluator is caught")
{
    const auto f = demo_model(2);
    const Evaluator squared = [](const HamelModel& m, const Coords& x) {
        const Rational v = eval(m, x);
        return v * v;
    };
    const auto r = verify_cauchy(f, 50, 0, squared);
    CHECK_FALSE(r.passed());
}

TEST_CASE("nonproportionality witnesses")
{
    const auto w = nonproportionality_witness(HamelModel({"1", "sqrt2"}, {Rational(0), Rational(1)}));
    REQUIRE(w);
    CHECK(w->x == Coords{Rational(1), Rational(0)});
    CHECK(w->y == Coords{Rational(0), Rational(1)});
    // f(x) y - f(y) x = 0 * y - 1 * x
    CHECK(w->cross == Coords{Rational(-1), Rational(0)});

    CHECK(nonproportionality_witness(HamelModel({"1", "sqrt2"}, {Rational(2), Rational(2)})));
    CHECK_FALSE(nonproportionality_witness(HamelModel({"1"}, {Rational(5)})));
    CHECK_FALSE(nonproportionality_witness(HamelModel({"1", "pi"}, {Rational(0), Rational(0)})));
}

TEST_CASE("demo model")
{
    const auto f = demo_model(5);
    CHECK(f.labels() == std::vector<std::string>{"1", "sqrt2", "sqrt3", "pi", "e"});
    CHECK(f.images()[4] == 4);
    CHECK(f.basis_vector(2) == Coords{Rational(0), Rational(0), Rational(1), Rational(0), Rational(0)});
}
