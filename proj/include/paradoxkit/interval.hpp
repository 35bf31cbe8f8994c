#pragma once

// Closed intervals with MPFR endpoints. Every operation rounds the lower
// endpoint down and the upper endpoint up, so the true real result is always
// enclosed.

#include <mpfr.h>

#include <string>

#include "paradoxkit/exactlin.hpp"

namespace paradoxkit::interval {

class Interval {
public:
    explicit Interval(mpfr_prec_t precision = 128);
    Interval(long value, mpfr_prec_t precision);
    Interval(const exactlin::Integer& value, mpfr_prec_t precision);
    Interval(const exactlin::Rational& value, mpfr_prec_t precision);
    static Interval pi(mpfr_prec_t precision);
    // [lo, hi] from two rationals, lo <= hi.
    static Interval hull(const exactlin::Rational& lo, const exactlin::Rational& hi, mpfr_prec_t precision);

    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(const Interval& other);
    Interval& operator=(Interval&& other) noexcept;
    ~Interval();

    mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

    // Outward-rounded doubles.
    double lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    // Upper bound on hi - lo.
    double width() const;

    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
    bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
    bool certainly_less_than(double bound) const { return mpfr_cmp_d(hi_, bound) < 0; }
    bool certainly_greater_than(double bound) const { return mpfr_cmp_d(lo_, bound) > 0; }
    // True iff the two enclosures share a point.
    friend bool overlaps(const Interval& l, const Interval& r);

    // Lower endpoint rounded down to `digits` significant digits.
    std::string lower_string(int digits = 17) const;
    std::string upper_string(int digits = 17) const;

    friend Interval operator+(const Interval& l, const Interval& r);
    friend Interval operator-(const Interval& l, const Interval& r);
    friend Interval operator-(const Interval& x);
    friend Interval operator*(const Interval& l, const Interval& r);
    // Requires 0 not in r; throws DomainError otherwise.
    friend Interval operator/(const Interval& l, const Interval& r);
    friend Interval square(const Interval& x);
    friend Interval abs(const Interval& x);
    // Clamps the negative part of x to 0; throws DomainError if hi < 0.
    friend Interval sqrt(const Interval& x);
    friend Interval sin(const Interval& x);
    friend Interval cos(const Interval& x);
    // Convex hull of the two enclosures.
    friend Interval join(const Interval& l, const Interval& r);

private:
    mpfr_t lo_;
    mpfr_t hi_;
};

struct Complex {
    Interval re;
    Interval im;
};

Complex operator+(const Complex& l, const Complex& r);
Complex operator-(const Complex& l, const Complex& r);
Complex operator*(const Complex& l, const Complex& r);
// Enclosure of |z|^2.
Interval norm2(const Complex& z);

} // namespace paradoxkit::interval
