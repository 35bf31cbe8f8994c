#include "paradoxkit/interval.hpp"

#include <algorithm>
#include <vector>

#include "paradoxkit/errors.hpp"

namespace paradoxkit::interval {

Interval::Interval(mpfr_prec_t precision)
{
    mpfr_init2(lo_, precision);
    mpfr_init2(hi_, precision);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(long value, mpfr_prec_t precision) : Interval(precision)
{
    mpfr_set_si(lo_, value, MPFR_RNDD);
    mpfr_set_si(hi_, value, MPFR_RNDU);
}

Interval::Interval(const exactlin::Integer& value, mpfr_prec_t precision) : Interval(precision)
{
    mpfr_set_z(lo_, value.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi_, value.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const exactlin::Rational& value, mpfr_prec_t precision) : Interval(precision)
{
    mpfr_set_q(lo_, value.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, value.get_mpq_t(), MPFR_RNDU);
}

Interval Interval::pi(mpfr_prec_t precision)
{
    Interval out(precision);
    mpfr_const_pi(out.lo_, MPFR_RNDD);
    mpfr_const_pi(out.hi_, MPFR_RNDU);
    return out;
}

Interval Interval::hull(const exactlin::Rational& lo, const exactlin::Rational& hi, mpfr_prec_t precision)
{
    if (hi < lo)
        throw DomainError("interval hull needs lo <= hi");
    Interval out(precision);
    mpfr_set_q(out.lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(out.hi_, hi.get_mpq_t(), MPFR_RNDU);
    return out;
}

Interval::Interval(const Interval& other)
{
    mpfr_init2(lo_, other.precision());
    mpfr_init2(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.precision())
{
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other)
{
    if (this != &other) {
        mpfr_set_prec(lo_, other.precision());
        mpfr_set_prec(hi_, other.precision());
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept
{
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
}

Interval::~Interval()
{
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

double Interval::width() const
{
    mpfr_t w;
    mpfr_init2(w, precision());
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    const double out = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return out;
}

bool overlaps(const Interval& l, const Interval& r)
{
    return mpfr_lessequal_p(l.lo_, r.hi_) && mpfr_lessequal_p(r.lo_, l.hi_);
}

namespace {

std::string format(mpfr_srcptr x, int digits, mpfr_rnd_t rnd)
{
    std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
    const char* fmt = rnd == MPFR_RNDD ? "%.*RDe" : "%.*RUe";
    mpfr_snprintf(buf.data(), buf.size(), fmt, digits - 1, x);
    return std::string(buf.data());
}

mpfr_prec_t joint(const Interval& l, const Interval& r) { return std::max(l.precision(), r.precision()); }

} // namespace

std::string Interval::lower_string(int digits) const { return format(lo_, digits, MPFR_RNDD); }
std::string Interval::upper_string(int digits) const { return format(hi_, digits, MPFR_RNDU); }

Interval operator+(const Interval& l, const Interval& r)
{
    Interval out(joint(l, r));
    mpfr_add(out.lo_, l.lo_, r.lo_, MPFR_RNDD);
    mpfr_add(out.hi_, l.hi_, r.hi_, MPFR_RNDU);
    return out;
}

Interval operator-(const Interval& l, const Interval& r)
{
    Interval out(joint(l, r));
    mpfr_sub(out.lo_, l.lo_, r.hi_, MPFR_RNDD);
    mpfr_sub(out.hi_, l.hi_, r.lo_, MPFR_RNDU);
    return out;
}

Interval operator-(const Interval& x)
{
    Interval out(x.precision());
    mpfr_neg(out.lo_, x.hi_, MPFR_RNDD);
    mpfr_neg(out.hi_, x.lo_, MPFR_RNDU);
    return out;
}

Interval operator*(const Interval& l, const Interval& r)
{
    const mpfr_prec_t p = joint(l, r);
    Interval out(p);
    mpfr_t t;
    mpfr_init2(t, p);
    mpfr_srcptr ls[2] = {l.lo_, l.hi_};
    mpfr_srcptr rs[2] = {r.lo_, r.hi_};
    mpfr_set_inf(out.lo_, 1);
    mpfr_set_inf(out.hi_, -1);
    for (auto a : ls)
        for (auto b : rs) {
            mpfr_mul(t, a, b, MPFR_RNDD);
            mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
            mpfr_mul(t, a, b, MPFR_RNDU);
            mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
        }
    mpfr_clear(t);
    return out;
}

Interval operator/(const Interval& l, const Interval& r)
{
    if (r.contains_zero())
        throw DomainError("interval division by an enclosure containing 0");
    const mpfr_prec_t p = joint(l, r);
    Interval out(p);
    mpfr_t t;
    mpfr_init2(t, p);
    mpfr_srcptr ls[2] = {l.lo_, l.hi_};
    mpfr_srcptr rs[2] = {r.lo_, r.hi_};
    mpfr_set_inf(out.lo_, 1);
    mpfr_set_inf(out.hi_, -1);
    for (auto a : ls)
        for (auto b : rs) {
            mpfr_div(t, a, b, MPFR_RNDD);
            mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
            mpfr_div(t, a, b, MPFR_RNDU);
            mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
        }
    mpfr_clear(t);
    return out;
}

Interval square(const Interval& x)
{
    Interval out = x * x;
    if (x.contains_zero())
        mpfr_set_zero(out.lo_, 1);
    else if (mpfr_sgn(out.lo_) < 0)
        mpfr_set_zero(out.lo_, 1);
    return out;
}

Interval abs(const Interval& x)
{
    if (mpfr_sgn(x.lo_) >= 0)
        return x;
    if (mpfr_sgn(x.hi_) <= 0)
        return -x;
    Interval out(x.precision());
    mpfr_neg(out.hi_, x.lo_, MPFR_RNDU);
    mpfr_max(out.hi_, out.hi_, x.hi_, MPFR_RNDU);
    return out;
}

Interval sqrt(const Interval& x)
{
    if (mpfr_sgn(x.hi_) < 0)
        throw DomainError("square root of a negative enclosure");
    Interval out(x.precision());
    if (mpfr_sgn(x.lo_) <= 0)
        mpfr_set_zero(out.lo_, 1);
    else
        mpfr_sqrt(out.lo_, x.lo_, MPFR_RNDD);
    mpfr_sqrt(out.hi_, x.hi_, MPFR_RNDU);
    return out;
}

namespace {

using MpfrFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// f is 1-Lipschitz with |f| <= 1, so f([lo, hi]) lies within
// [f(lo) - (hi - lo), f(lo) + (hi - lo)] clamped to [-1, 1].
void lipschitz_enclosure(mpfr_ptr out_lo, mpfr_ptr out_hi, mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t p, MpfrFn f)
{
    mpfr_t w;
    mpfr_init2(w, p);
    mpfr_sub(w, hi, lo, MPFR_RNDU);
    f(out_lo, lo, MPFR_RNDD);
    mpfr_sub(out_lo, out_lo, w, MPFR_RNDD);
    if (mpfr_cmp_si(out_lo, -1) < 0)
        mpfr_set_si(out_lo, -1, MPFR_RNDD);
    f(out_hi, lo, MPFR_RNDU);
    mpfr_add(out_hi, out_hi, w, MPFR_RNDU);
    if (mpfr_cmp_si(out_hi, 1) > 0)
        mpfr_set_si(out_hi, 1, MPFR_RNDU);
    mpfr_clear(w);
}

} // namespace

Interval sin(const Interval& x)
{
    Interval out(x.precision());
    lipschitz_enclosure(out.lo_, out.hi_, x.lo_, x.hi_, x.precision(), mpfr_sin);
    return out;
}

Interval cos(const Interval& x)
{
    Interval out(x.precision());
    lipschitz_enclosure(out.lo_, out.hi_, x.lo_, x.hi_, x.precision(), mpfr_cos);
    return out;
}

Interval join(const Interval& l, const Interval& r)
{
    Interval out(joint(l, r));
    mpfr_min(out.lo_, l.lo_, r.lo_, MPFR_RNDD);
    mpfr_max(out.hi_, l.hi_, r.hi_, MPFR_RNDU);
    return out;
}

Complex operator+(const Complex& l, const Complex& r) { return {l.re + r.re, l.im + r.im}; }
Complex operator-(const Complex& l, const Complex& r) { return {l.re - r.re, l.im - r.im}; }
Complex operator*(const Complex& l, const Complex& r)
{
    return {l.re * r.re - l.im * r.im, l.re * r.im + l.im * r.re};
}
Interval norm2(const Complex& z) { return square(z.re) + square(z.im); }

} // namespace paradoxkit::interval
