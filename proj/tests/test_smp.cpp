#include <doctest.h>

#include <cmath>

#include "paradoxkit/errors.hpp"
#include "paradoxkit/smp.hpp"

using namespace paradoxkit;
using namespace paradoxkit::paradox;
using interval::Complex;
using interval::Interval;

namespace {

NNPoly P(std::vector<std::uint64_t> c) { return NNPoly(std::move(c)); }

Complex point(double re, double im, double eps = 1e-14)
{
    auto q = [](double x) { return exactlin::Rational(x); };
    return {Interval::hull(q(re - eps), q(re + eps), 64), Interval::hull(q(im - eps), q(im + eps), 64)};
}

} // namespace

TEST_CASE("polynomials are normalized")
{
    CHECK(P({1, 2, 0, 0}).degree() == 1);
    CHECK(P({0, 0}).is_zero());
    CHECK(P({}).degree() == -1);
    CHECK(P({3, 0, 5}).max_coefficient() == 5);
}

TEST_CASE("partition and the two maps")
{
    CHECK(smp_classify(P({})) == SmpPart::a);
    CHECK(smp_classify(P({0, 1})) == SmpPart::a);
    CHECK(smp_classify(P({2, 1})) == SmpPart::b);

    // x + x^2 -> 1 + x; 2 + x -> 1 + x
    CHECK(smp_g(P({0, 1, 1})) == P({1, 1}));
    CHECK(smp_h(P({2, 1})) == P({1, 1}));
    CHECK(smp_g(P({})).is_zero());
    CHECK_THROWS_AS(smp_g(P({1})), DomainError);
    CHECK_THROWS_AS(smp_h(P({0, 1})), DomainError);

    for (const auto& p : enumerate_polys(3, 2)) {
        CHECK(smp_g(times_x(p)) == p);
        CHECK(smp_h(plus_one(p)) == p);
    }
}

TEST_CASE("enumeration in mixed-radix order")
{
    const auto ps = enumerate_polys(1, 2);
    REQUIRE(ps.size() == 9);
    CHECK(ps[0].is_zero());
    CHECK(ps[1] == P({1}));
    CHECK(ps[3] == P({0, 1}));
    CHECK(ps[8] == P({2, 2}));
    CHECK_THROWS_AS(enumerate_polys(30, 3), ResourceError);
}

TEST_CASE("embedding of x is e^i")
{
    const EmbeddingBasis basis(4, 128);
    const auto z = basis.embed(P({0, 1}));
    CHECK(z.re.lower() <= std::cos(1.0) + 1e-15);
    CHECK(z.re.upper() >= std::cos(1.0) - 1e-15);
    CHECK(std::abs(z.im.lower() - 0.8414709848078965) < 1e-15);
    const auto one = basis.embed(P({1}));
    CHECK(one.re.lower() == 1);
    CHECK(one.im.upper() == 0);
    // t * t^{-1} = 1
    const auto u = z * basis.t_inverse();
    CHECK(u.re.lower() <= 1);
    CHECK(u.re.upper() >= 1);
}

TEST_CASE("separation sweep matches all pairs")
{
    std::vector<Complex> pts;
    for (int i = 0; i < 40; ++i)
        pts.push_back(point(std::cos(i * 0.7) * (1 + i % 5), std::sin(i * 1.3) * (1 + i % 3)));
    auto fast = check_separation(pts, 1e-12);
    auto slow = reference::check_separation(pts, 1e-12);
    CHECK(fast.separated);
    CHECK(slow.separated);
    CHECK(slow.pairs_examined == 40 * 39 / 2);
    CHECK(fast.pairs_examined <= slow.pairs_examined);

    pts.push_back(pts[7]);
    fast = check_separation(pts, 1e-12);
    slow = reference::check_separation(pts, 1e-12);
    CHECK_FALSE(fast.separated);
    CHECK_FALSE(slow.separated);
    REQUIRE(fast.offending);
    CHECK(fast.offending->first == 7);
    CHECK(fast.offending->second == 40);
}

TEST_CASE("small smp verification")
{
    const auto r = smp_verify(3, 2, 128);
    CHECK(r.outcome == Outcome::pass);
    CHECK(r.checks.all_passed());
    CHECK(r.polynomials == 81);
    CHECK(r.count_a + r.count_b == r.polynomials);
    CHECK(r.count_a == 27);
    CHECK_THROWS_AS(smp_verify(22, 1, 128), ResourceError);
}
