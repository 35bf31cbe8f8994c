#include <doctest.h>

#include <cmath>

#include "paradoxkit/errors.hpp"
#include "paradoxkit/interval.hpp"

using namespace paradoxkit;
using interval::Interval;

TEST_CASE("rational enclosures contain the value")
{
    const Interval third(exactlin::Rational(1, 3), 128);
    CHECK(third.lower() <= 1.0 / 3.0);
    CHECK(third.upper() >= 1.0 / 3.0);
    CHECK(third.width() < 1e-30);
    CHECK(Interval(7L, 64).width() == 0);
}

TEST_CASE("pi, sin and cos")
{
    const Interval pi = Interval::pi(128);
    CHECK(pi.lower() <= 3.141592653589794);
    CHECK(pi.upper() >= 3.141592653589793);
    const Interval one(1L, 128);
    const Interval s = sin(one), c = cos(one);
    CHECK(s.lower() <= std::sin(1.0) + 1e-15);
    CHECK(s.upper() >= std::sin(1.0) - 1e-15);
    CHECK(c.lower() <= std::cos(1.0) + 1e-15);
    const Interval unit = square(s) + square(c);
    CHECK(unit.lower() <= 1);
    CHECK(unit.upper() >= 1);
    CHECK(unit.width() < 1e-30);
}

TEST_CASE("sin of a wide interval stays sound")
{
    const Interval x = Interval::hull(exactlin::Rational(0), exactlin::Rational(4), 64);
    const Interval s = sin(x);
    CHECK(s.lower() <= -0.75); // sin 4 = -0.7568
    CHECK(s.upper() >= 1.0);
}

TEST_CASE("arithmetic")
{
    const Interval a = Interval::hull(-1, 2, 64), b = Interval::hull(3, 4, 64);
    const Interval p = a * b;
    CHECK(p.lower() == -4);
    CHECK(p.upper() == 8);
    CHECK((a - b).lower() == -5);
    CHECK((a - b).upper() == -1);
    CHECK(square(a).lower() == 0);
    CHECK(square(a).upper() == 4);
    CHECK(abs(a).lower() == 0);
    CHECK(abs(a).upper() == 2);
    CHECK(abs(-b).lower() == 3);
    CHECK_THROWS_AS(b / a, DomainError);
    CHECK((a / b).upper() <= 2.0 / 3.0 + 1e-15);
    CHECK(sqrt(Interval(4L, 64)).lower() == 2);
    CHECK_THROWS_AS(sqrt(Interval(-1L, 64)), DomainError);
    CHECK(overlaps(a, b) == false);
    CHECK(overlaps(a, Interval::hull(2, 3, 64)));
}

TEST_CASE("more precision means narrower enclosures")
{
    const Interval lo = sin(Interval(3L, 128)), hi = sin(Interval(3L, 256));
    CHECK(hi.width() < lo.width());
    CHECK(overlaps(lo, hi));
}

TEST_CASE("decimal strings round outward")
{
    const Interval third(exactlin::Rational(1, 3), 128);
    CHECK(third.lower_string(5) == "3.3333e-01");
    CHECK(third.upper_string(5) == "3.3334e-01");
}
