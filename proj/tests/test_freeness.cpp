#include <doctest.h>

#include "paradoxkit/errors.hpp"
#include "paradoxkit/freeness.hpp"

using namespace paradoxkit;
using namespace paradoxkit::freeness;
using exactlin::GeneratorPair;
using exactlin::Mat3Q;
using exactlin::Vec3Q;
using words::Letter;

namespace {

GeneratorPair order4()
{
    return GeneratorPair(Mat3Q::from_integers({1, 0, 0, 0, 0, -1, 0, 1, 0}),
                         Mat3Q::from_integers({0, 0, 1, 0, 1, 0, -1, 0, 0}));
}

FreenessCertificate built(const Vec3Q& v)
{
    auto r = build_certificate(v);
    REQUIRE(std::holds_alternative<FreenessCertificate>(r));
    return std::get<FreenessCertificate>(r);
}

} // namespace

TEST_CASE("exhaustive check certifies the rotation generators")
{
    const auto v = exhaustive_check(6);
    CHECK(v.certified);
    CHECK_FALSE(v.counterexample);
    CHECK(v.words_evaluated == words::ball_size(6) - 1);
}

TEST_CASE("parallel and serial exhaustive checks agree")
{
    for (int n = 1; n <= 5; ++n) {
        const auto fast = exhaustive_check(n), slow = reference::exhaustive_check(n);
        CHECK(fast.certified == slow.certified);
        CHECK(fast.words_evaluated == slow.words_evaluated);
    }
    const auto fast = exhaustive_check(5, order4()), slow = reference::exhaustive_check(5, order4());
    REQUIRE(fast.counterexample);
    REQUIRE(slow.counterexample);
    CHECK(*fast.counterexample == *slow.counterexample);
}

TEST_CASE("order-4 rotations have the relation a^4")
{
    CHECK(exhaustive_check(3, order4()).certified);
    const auto v = exhaustive_check(4, order4());
    CHECK_FALSE(v.certified);
    REQUIRE(v.counterexample);
    CHECK(v.counterexample->to_string() == "aaaa");
}

TEST_CASE("a generator paired with itself gives a B = e")
{
    const auto& a = GeneratorPair::standard().matrix(Letter::a);
    const auto v = exhaustive_check(3, GeneratorPair(a, a));
    REQUIRE(v.counterexample);
    CHECK(v.counterexample->to_string() == "aB");
}

TEST_CASE("exhaustive check bounds")
{
    CHECK_THROWS_AS(exhaustive_check(-1), DomainError);
    CHECK_THROWS_AS(exhaustive_check(words::kDefaultBallCap + 1), ResourceError);
}

TEST_CASE("residue certificate from (0, 1, 0)")
{
    const auto c = built(Vec3Q(0, 1, 0));
    CHECK(c.mode == ResidueMode::vector);
    CHECK(c.states.size() == 24);
    CHECK(c.transitions.size() == 3 * c.states.size());
    CHECK(verify_certificate(c));
    for (const auto& s : c.states)
        CHECK_FALSE(s.is_zero());
}

TEST_CASE("every candidate base vector certifies")
{
    for (const auto& v : candidate_base_vectors())
        CHECK(verify_certificate(built(v)));
}

TEST_CASE("matrix-residue certificate")
{
    auto r = build_matrix_certificate();
    REQUIRE(std::holds_alternative<FreenessCertificate>(r));
    const auto& c = std::get<FreenessCertificate>(r);
    CHECK(c.mode == ResidueMode::matrix);
    CHECK(verify_certificate(c));
}

TEST_CASE("corrupted certificates are rejected")
{
    const auto good = built(Vec3Q(0, 1, 0));

    auto retarget = good;
    retarget.transitions[0].to = (retarget.transitions[0].to + 1) % retarget.states.size();
    CHECK_FALSE(verify_certificate(retarget));

    auto residue = good;
    residue.states[3].residue[0] = (residue.states[3].residue[0] + 1) % kModulus;
    CHECK_FALSE(verify_certificate(residue));

    auto dropped = good;
    dropped.transitions.pop_back();
    CHECK_FALSE(verify_certificate(dropped));

    auto forbidden = good;
    auto t = forbidden.transitions[0];
    t.prepended = words::inverse(forbidden.states[t.from].first);
    forbidden.transitions.push_back(t);
    CHECK_FALSE(verify_certificate(forbidden));

    auto initial = good;
    std::swap(initial.initial[0], initial.initial[1]);
    CHECK_FALSE(verify_certificate(initial));

    auto base = good;
    base.base = {1, 1, 1};
    CHECK_FALSE(verify_certificate(base));
}

TEST_CASE("certificate preconditions")
{
    CHECK_THROWS_AS(build_certificate(Vec3Q(0, 0, 0)), DomainError);
    CHECK_THROWS_AS(build_certificate(Vec3Q(exactlin::Rational(1, 2), 0, 0)), DomainError);
}

TEST_CASE("certify picks the first candidate")
{
    const auto outcome = certify();
    REQUIRE(outcome.certificate);
    CHECK_FALSE(outcome.used_matrix_fallback);
    CHECK(outcome.rejected.empty());
    CHECK(outcome.certificate->base[1] == 1);
}
