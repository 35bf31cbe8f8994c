#include "paradoxkit/smp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "paradoxkit/errors.hpp"
#include "paradoxkit/paradox.hpp"

namespace paradoxkit::paradox {

using interval::Complex;
using interval::Interval;

NNPoly::NNPoly(std::vector<std::uint64_t> coefficients) : c_(std::move(coefficients))
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

std::uint64_t NNPoly::max_coefficient() const
{
    return c_.empty() ? 0 : *std::max_element(c_.begin(), c_.end());
}

SmpPart smp_classify(const NNPoly& p) { return p.constant() == 0 ? SmpPart::a : SmpPart::b; }

NNPoly smp_g(const NNPoly& p)
{
    if (smp_classify(p) != SmpPart::a)
        throw DomainError("g is defined on A only (constant term must be 0)");
    if (p.is_zero())
        return p;
    return NNPoly(std::vector<std::uint64_t>(p.coefficients().begin() + 1, p.coefficients().end()));
}

NNPoly smp_h(const NNPoly& p)
{
    if (smp_classify(p) != SmpPart::b)
        throw DomainError("h is defined on B only (constant term must be nonzero)");
    auto c = p.coefficients();
    c[0] -= 1;
    return NNPoly(std::move(c));
}

NNPoly times_x(const NNPoly& p)
{
    if (p.is_zero())
        return p;
    std::vector<std::uint64_t> c(p.coefficients().size() + 1, 0);
    std::copy(p.coefficients().begin(), p.coefficients().end(), c.begin() + 1);
    return NNPoly(std::move(c));
}

NNPoly plus_one(const NNPoly& p)
{
    auto c = p.coefficients();
    if (c.empty())
        c.push_back(0);
    c[0] += 1;
    return NNPoly(std::move(c));
}

EmbeddingBasis::EmbeddingBasis(int max_degree, mpfr_prec_t precision)
    : precision_(precision), t_inv_{Interval(precision), Interval(precision)}
{
    for (int k = 0; k <= std::max(max_degree, 1); ++k) {
        const Interval angle(static_cast<long>(k), precision);
        powers_.push_back({cos(angle), sin(angle)});
    }
    t_inv_ = {powers_[1].re, -powers_[1].im};
}

Complex EmbeddingBasis::embed(const NNPoly& p) const
{
    if (p.degree() >= static_cast<int>(powers_.size()))
        throw DomainError("polynomial degree exceeds embedding basis");
    Complex z{Interval(precision_), Interval(precision_)};
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        const Interval c(static_cast<long>(p.coefficients()[k]), precision_);
        z.re = z.re + c * powers_[k].re;
        z.im = z.im + c * powers_[k].im;
    }
    return z;
}

std::vector<NNPoly> enumerate_polys(int max_degree, std::uint64_t max_coefficient)
{
    if (max_degree < 0)
        throw DomainError("max degree must be nonnegative");
    const std::uint64_t radix = max_coefficient + 1;
    double total = std::pow(static_cast<double>(radix), max_degree + 1);
    if (total > static_cast<double>(1u << 22))
        throw ResourceError("polynomial range too large to enumerate");
    std::vector<NNPoly> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(max_degree) + 1, 0);
    for (std::size_t n = 0; n < static_cast<std::size_t>(total); ++n) {
        out.emplace_back(digits);
        for (auto& d : digits) {
            if (++d < radix)
                break;
            d = 0;
        }
    }
    return out;
}

namespace {

enum class PairVerdict { separated, close, undecided };

PairVerdict decide(const Complex& p, const Complex& q, double threshold)
{
    const Interval d2 = interval::norm2(p - q);
    const double t2 = threshold * threshold;
    if (d2.certainly_greater_than(t2))
        return PairVerdict::separated;
    if (d2.certainly_less_than(t2))
        return PairVerdict::close;
    return PairVerdict::undecided;
}

void merge(SeparationResult& into, PairVerdict v, std::size_t i, std::size_t j)
{
    if (v == PairVerdict::separated)
        return;
    if (v == PairVerdict::undecided)
        into.inconclusive = true;
    else
        into.separated = false;
    const std::pair<std::size_t, std::size_t> pair{std::min(i, j), std::max(i, j)};
    if (!into.offending || pair < *into.offending)
        into.offending = pair;
}

} // namespace

SeparationResult check_separation(const std::vector<Complex>& points, double threshold)
{
    const std::size_t n = points.size();
    std::vector<double> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = points[i].re.lower();
        hi[i] = points[i].re.upper();
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lo[a] < lo[b]; });

    // Pairs whose real parts are more than `threshold` apart are separated;
    // the doubled window absorbs double rounding of the keys.
    SeparationResult result;
    std::size_t examined = 0;
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel
    {
        SeparationResult local;
#pragma omp for schedule(dynamic, 256) reduction(+ : examined)
        for (std::int64_t a = 0; a < count; ++a) {
            const std::size_t i = order[static_cast<std::size_t>(a)];
            for (std::size_t b = static_cast<std::size_t>(a) + 1; b < n; ++b) {
                const std::size_t j = order[b];
                if (lo[j] > hi[i] + 2 * threshold)
                    break;
                ++examined;
                merge(local, decide(points[i], points[j], threshold), i, j);
            }
        }
#pragma omp critical
        {
            result.separated = result.separated && local.separated;
            result.inconclusive = result.inconclusive || local.inconclusive;
            if (local.offending && (!result.offending || *local.offending < *result.offending))
                result.offending = local.offending;
        }
    }
    result.pairs_examined = examined;
    return result;
}

namespace reference {

SeparationResult check_separation(const std::vector<Complex>& points, double threshold)
{
    SeparationResult result;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            ++result.pairs_examined;
            merge(result, decide(points[i], points[j], threshold), i, j);
        }
    return result;
}

} // namespace reference

SmpReport smp_verify(int max_degree, std::uint64_t max_coefficient, int precision_bits, std::uint64_t seed)
{
    if (precision_bits < 53)
        throw DomainError("precision must be at least 53 bits");
    const auto polys = enumerate_polys(max_degree, max_coefficient);
    const std::size_t n = polys.size();
    const std::uint64_t radix = max_coefficient + 1;

    SmpReport report;
    report.max_degree = max_degree;
    report.max_coefficient = max_coefficient;
    report.precision_bits = precision_bits;
    report.polynomials = n;
    report.tolerance = std::ldexp(1.0, -precision_bits / 2);

    auto index_of = [&](const NNPoly& p) -> std::optional<PointId> {
        if (p.degree() > max_degree || p.max_coefficient() > max_coefficient)
            return std::nullopt;
        std::uint64_t idx = 0, scale = 1;
        for (auto c : p.coefficients()) {
            idx += c * scale;
            scale *= radix;
        }
        return static_cast<PointId>(idx);
    };

    // (i) A and B partition the range.
    PointSet part_a, part_b;
    for (std::size_t i = 0; i < n; ++i)
        (smp_classify(polys[i]) == SmpPart::a ? part_a : part_b).insert(static_cast<PointId>(i));
    report.count_a = part_a.size();
    report.count_b = part_b.size();
    {
        bool ok = part_a.size() + part_b.size() == n;
        for (PointId x : part_a)
            ok = ok && polys[x].constant() == 0 && !part_b.count(x);
        for (PointId x : part_b)
            ok = ok && polys[x].constant() != 0;
        report.checks.add("partition", ok);
    }

    // (ii) g, h injective with inverses x*() and ()+1.
    {
        std::set<NNPoly> images_g, images_h;
        bool inverse_ok = true;
        for (PointId x : part_a) {
            const auto q = smp_g(polys[x]);
            images_g.insert(q);
            inverse_ok = inverse_ok && times_x(q) == polys[x];
        }
        for (PointId x : part_b) {
            const auto q = smp_h(polys[x]);
            images_h.insert(q);
            inverse_ok = inverse_ok && plus_one(q) == polys[x];
        }
        const bool injective = images_g.size() == part_a.size() && images_h.size() == part_b.size();
        report.checks.add("maps_injective", injective);
        report.checks.add("maps_invertible", inverse_ok);
    }

    // Truncated witness: covering is asserted on deg <= d-1 with constant <= c-1.
    {
        TruncatedWitness w;
        w.point_count = n;
        for (std::size_t i = 0; i < n; ++i) {
            w.e.insert(static_cast<PointId>(i));
            if (polys[i].degree() < max_degree && polys[i].constant() < max_coefficient)
                w.interior.insert(static_cast<PointId>(i));
        }
        TruncatedPiece pa{part_a, "g", {}}, pb{part_b, "h", {}};
        for (PointId x : part_a)
            pa.image[x] = index_of(smp_g(polys[x]));
        for (PointId x : part_b)
            pb.image[x] = index_of(smp_h(polys[x]));
        w.pieces_a = {std::move(pa)};
        w.pieces_b = {std::move(pb)};
        const auto tr = verify_truncated_witness(w);
        const auto* bad = tr.checks.first_failure();
        report.checks.add("truncated_witness", bad == nullptr, bad ? bad->name + ": " + bad->detail : "");
    }

    // (iii) numeric embedding at t = e^i.
    const auto prec = static_cast<mpfr_prec_t>(precision_bits);
    const EmbeddingBasis basis(std::max(max_degree, 1), prec);
    std::vector<Complex> points(n, Complex{Interval(prec), Interval(prec)});
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i)
        points[static_cast<std::size_t>(i)] = basis.embed(polys[static_cast<std::size_t>(i)]);

    const auto sep = check_separation(points, kSeparationThreshold);
    report.candidate_pairs = sep.pairs_examined;
    {
        std::string detail = std::to_string(sep.pairs_examined) + " candidate pairs within the sweep window";
        if (sep.offending)
            detail += "; undecided or close pair (" + std::to_string(sep.offending->first) + ", " +
                      std::to_string(sep.offending->second) + ")";
        report.checks.add("numeric_injectivity", sep.separated && !sep.inconclusive, detail);
    }

    // (iv) g and h act as z -> t^-1 z and z -> z - 1, and t^-1 is an isometry.
    const double tol2 = report.tolerance * report.tolerance;
    const Complex one{Interval(1L, prec), Interval(prec)};
    std::size_t g_bad = 0, h_bad = 0;
#pragma omp parallel for schedule(static) reduction(+ : g_bad, h_bad)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto& p = polys[static_cast<std::size_t>(i)];
        const auto& z = points[static_cast<std::size_t>(i)];
        if (smp_classify(p) == SmpPart::a) {
            const auto diff = basis.embed(smp_g(p)) - basis.t_inverse() * z;
            g_bad += interval::norm2(diff).certainly_less_than(tol2) ? 0 : 1;
        } else {
            const auto diff = basis.embed(smp_h(p)) - (z - one);
            h_bad += interval::norm2(diff).certainly_less_than(tol2) ? 0 : 1;
        }
    }
    report.checks.add("g_is_rotation", g_bad == 0, std::to_string(g_bad) + " mismatches");
    report.checks.add("h_is_translation", h_bad == 0, std::to_string(h_bad) + " mismatches");

    {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::size_t bad = 0, sampled = 0;
        for (int k = 0; k < 1000 && n > 1; ++k) {
            const std::size_t i = pick(rng), j = pick(rng);
            const auto d = points[i] - points[j];
            const auto moved = basis.t_inverse() * points[i] - basis.t_inverse() * points[j];
            const Interval gap = interval::norm2(moved) - interval::norm2(d);
            ++sampled;
            if (!gap.certainly_less_than(report.tolerance) || !gap.certainly_greater_than(-report.tolerance))
                ++bad;
        }
        report.checks.add("isometry", bad == 0,
                          std::to_string(sampled) + " sampled pairs, " + std::to_string(bad) + " violations");
    }

    bool hard_failure = false;
    for (const auto& c : report.checks.checks)
        if (!c.passed && !(c.name == "numeric_injectivity" && sep.separated && sep.inconclusive))
            hard_failure = true;
    report.outcome = hard_failure ? Outcome::fail : (sep.inconclusive ? Outcome::inconclusive : Outcome::pass);
    return report;
}

} // namespace paradoxkit::paradox
