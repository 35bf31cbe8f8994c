#include "paradoxkit/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "paradoxkit/errors.hpp"

namespace paradoxkit::sphere {

using exactlin::Integer;
using exactlin::Mat3Q;
using exactlin::Rational;
using exactlin::Vec3Q;
using interval::Interval;
using words::ReducedWord;

namespace {

FixedDirectionSet collect(int depth, const std::vector<ReducedWord>& ws,
                          const std::vector<std::optional<ProjectiveDirection>>& axes)
{
    FixedDirectionSet out;
    out.depth = depth;
    // ws is length-lex ordered, so the first insertion is the least witness.
    for (std::size_t i = 0; i < ws.size(); ++i)
        if (axes[i])
            out.directions.emplace(*axes[i], ws[i]);
    return out;
}

void require_depth(int depth)
{
    if (depth < 1)
        throw DomainError("depth must be at least 1");
}

} // namespace

FixedDirectionSet fixed_directions(int depth, const exactlin::GeneratorPair& gens, int cap)
{
    require_depth(depth);
    const auto ws = words::ball(depth, cap);
    std::vector<std::optional<ProjectiveDirection>> axes(ws.size());
    std::exception_ptr error;
    const auto n = static_cast<std::int64_t>(ws.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 1; i < n; ++i) {
        const auto& w = ws[static_cast<std::size_t>(i)];
        try {
            axes[static_cast<std::size_t>(i)] = exactlin::axis(exactlin::eval_word(w, gens));
        } catch (const DegenerateInputError&) {
#pragma omp critical
            if (!error)
                error = std::make_exception_ptr(InvariantViolation("word " + w.to_string() + " evaluates to I"));
        } catch (...) {
#pragma omp critical
            if (!error)
                error = std::current_exception();
        }
    }
    if (error)
        std::rethrow_exception(error);
    return collect(depth, ws, axes);
}

namespace reference {

// Kernel of a rank-2 matrix as the cross product of two independent rows.
FixedDirectionSet fixed_directions(int depth, const exactlin::GeneratorPair& gens, int cap)
{
    require_depth(depth);
    const auto ws = words::ball(depth, cap);
    std::vector<std::optional<ProjectiveDirection>> axes(ws.size());
    for (std::size_t i = 1; i < ws.size(); ++i) {
        const Mat3Q k = exactlin::eval_word(ws[i], gens) - Mat3Q::identity();
        std::optional<Vec3Q> kernel;
        for (int r = 0; r < 3 && !kernel; ++r)
            for (int s = r + 1; s < 3 && !kernel; ++s) {
                Vec3Q x(k(r, 1) * k(s, 2) - k(r, 2) * k(s, 1), k(r, 2) * k(s, 0) - k(r, 0) * k(s, 2),
                        k(r, 0) * k(s, 1) - k(r, 1) * k(s, 0));
                if (!x.is_zero())
                    kernel = x;
            }
        if (!kernel || !(k * *kernel).is_zero())
            throw InvariantViolation("word " + ws[i].to_string() + " has no one-dimensional fixed space");
        axes[i] = ProjectiveDirection::of(*kernel);
    }
    return collect(depth, ws, axes);
}

} // namespace reference

RankCensus rank_census(int depth, const exactlin::GeneratorPair& gens)
{
    require_depth(depth);
    const auto ws = words::ball(depth);
    std::vector<int> ranks(ws.size(), 0);
    const auto n = static_cast<std::int64_t>(ws.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 1; i < n; ++i)
        ranks[static_cast<std::size_t>(i)] =
            exactlin::rank(exactlin::eval_word(ws[static_cast<std::size_t>(i)], gens) - Mat3Q::identity());
    RankCensus out;
    for (std::size_t i = 1; i < ws.size(); ++i) {
        ++out.words_checked;
        if (ranks[i] == 2)
            ++out.rank_two;
        else if (!out.first_bad)
            out.first_bad = ws[i];
    }
    return out;
}

bool is_fixed_direct(const Vec3Q& v0, int depth)
{
    const auto ws = words::ball(depth);
    for (std::size_t i = 1; i < ws.size(); ++i)
        if (exactlin::eval_word(ws[i]) * v0 == v0)
            return true;
    return false;
}

bool is_free_at(const Vec3Q& v0, int depth) { return is_free_at(v0, fixed_directions(depth)); }

bool is_free_at(const Vec3Q& v0, const FixedDirectionSet& c)
{
    const bool member = c.contains(ProjectiveDirection::of(v0));
    const bool fixed = is_fixed_direct(v0, c.depth);
    if (member != fixed)
        throw InvariantViolation("fixed-direction membership and direct evaluation disagree");
    return !member;
}

Interval Angle::enclose(mpfr_prec_t precision) const
{
    Interval x(coefficient, precision);
    return times_pi ? x * Interval::pi(precision) : x;
}

std::string Angle::to_string() const
{
    return exactlin::to_string(coefficient) + (times_pi ? "*pi" : "");
}

IVec unit(const ProjectiveDirection& d, mpfr_prec_t precision)
{
    const Integer n2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
    const Interval len = sqrt(Interval(n2, precision));
    return {Interval(d[0], precision) / len, Interval(d[1], precision) / len, Interval(d[2], precision) / len};
}

IVec rotate(const ProjectiveDirection& axis, const Interval& c, const Interval& s, const IVec& v)
{
    const mpfr_prec_t p = c.precision();
    const Interval n[3] = {Interval(axis[0], p), Interval(axis[1], p), Interval(axis[2], p)};
    const Interval n2(Integer(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]), p);
    const Interval len = sqrt(n2);
    const Interval dot = n[0] * v[0] + n[1] * v[1] + n[2] * v[2];
    const Interval cross[3] = {n[1] * v[2] - n[2] * v[1], n[2] * v[0] - n[0] * v[2], n[0] * v[1] - n[1] * v[0]};
    const Interval one_minus_c = Interval(1L, p) - c;
    IVec out{Interval(p), Interval(p), Interval(p)};
    for (int i = 0; i < 3; ++i)
        out[static_cast<std::size_t>(i)] =
            v[static_cast<std::size_t>(i)] * c + cross[i] * s / len + n[i] * dot * one_minus_c / n2;
    return out;
}

IVec rotate(const ProjectiveDirection& axis, const Angle& angle, long k, const IVec& v)
{
    const mpfr_prec_t p = v[0].precision();
    const Interval theta = Angle{angle.coefficient * k, angle.times_pi}.enclose(p);
    return rotate(axis, cos(theta), sin(theta), v);
}

Interval pair_distance2(const IVec& p, const IVec& q)
{
    const Interval dot = p[0] * q[0] + p[1] * q[1] + p[2] * q[2];
    const mpfr_prec_t prec = dot.precision();
    return Interval(2L, prec) - Interval(2L, prec) * abs(dot);
}

std::string AbsorbingRotation::angle_decimal() const
{
    const int digits = std::max(17, static_cast<int>(precision_bits * 0.30103));
    return angle.enclose(precision_bits).lower_string(digits);
}

const std::vector<ProjectiveDirection>& candidate_axes()
{
    static const std::vector<ProjectiveDirection> axes = [] {
        std::vector<ProjectiveDirection> out;
        for (int x = -2; x <= 2; ++x)
            for (int y = -2; y <= 2; ++y)
                for (int z = -2; z <= 2; ++z) {
                    if (x == 0 && y == 0 && z == 0)
                        continue;
                    ProjectiveDirection d(x, y, z);
                    if (d[0] == x && d[1] == y && d[2] == z)
                        out.push_back(d);
                }
        auto norm = [](const ProjectiveDirection& d) { return Integer(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]); };
        std::sort(out.begin(), out.end(), [&](const auto& l, const auto& r) {
            const Integer nl = norm(l), nr = norm(r);
            return nl != nr ? nl < nr : l < r;
        });
        return out;
    }();
    return axes;
}

ProjectiveDirection select_axis(const FixedDirectionSet& c, const std::optional<ProjectiveDirection>& forced)
{
    if (forced) {
        if (c.contains(*forced))
            throw PreconditionError("axis " + forced->to_string() + " lies in the fixed-direction set");
        return *forced;
    }
    for (const auto& d : candidate_axes())
        if (!c.contains(d))
            return d;
    throw PreconditionError("every candidate axis lies in the fixed-direction set");
}

namespace {

std::vector<ProjectiveDirection> directions_of(const FixedDirectionSet& c)
{
    std::vector<ProjectiveDirection> out;
    for (const auto& [d, w] : c.directions)
        out.push_back(d);
    return out;
}

enum class Verdict { positive, coincident, undecided };

Verdict classify(const Interval& d2, int bits)
{
    if (d2.certainly_positive())
        return Verdict::positive;
    if (d2.certainly_less_than(std::ldexp(1.0, -bits / 2)))
        return Verdict::coincident;
    return Verdict::undecided;
}

} // namespace

Attempt try_certify(const FixedDirectionSet& c, const ProjectiveDirection& axis, const Angle& angle, int m, int bits)
{
    if (m < 1)
        throw DomainError("iteration count must be at least 1");
    const auto prec = static_cast<mpfr_prec_t>(bits);
    const auto dirs = directions_of(c);
    const std::size_t k = dirs.size();
    std::vector<IVec> units;
    for (const auto& d : dirs)
        units.push_back(unit(d, prec));

    // Index (i - 1) * k * k + p * k + q.
    const std::size_t total = static_cast<std::size_t>(m) * k * k;
    std::vector<Interval> d2(total, Interval(prec));
    const auto rows = static_cast<std::int64_t>(static_cast<std::size_t>(m) * k);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t r = 0; r < rows; ++r) {
        const long i = static_cast<long>(static_cast<std::size_t>(r) / k) + 1;
        const std::size_t p = static_cast<std::size_t>(r) % k;
        const IVec moved = rotate(axis, angle, i, units[p]);
        for (std::size_t q = 0; q < k; ++q)
            d2[static_cast<std::size_t>(r) * k + q] = pair_distance2(moved, units[q]);
    }

    Attempt out;
    out.outcome = Outcome::pass;
    std::size_t worst = total;
    for (std::size_t idx = 0; idx < total; ++idx) {
        const Verdict v = classify(d2[idx], bits);
        if (v == Verdict::coincident)
            out.outcome = Outcome::fail;
        else if (v == Verdict::undecided && out.outcome == Outcome::pass)
            out.outcome = Outcome::inconclusive;
        if (worst == total || d2[idx].lower() < d2[worst].lower())
            worst = idx;
    }
    if (worst < total) {
        out.min_distance2 = d2[worst];
        const std::size_t i = worst / (k * k) + 1, p = (worst / k) % k, q = worst % k;
        out.offending = "g^" + std::to_string(i) + " " + dirs[p].to_string() + " vs " + dirs[q].to_string();
    }
    return out;
}

AbsorbingRotation find_absorbing_rotation(const FixedDirectionSet& c, int m, int bits,
                                          const std::optional<ProjectiveDirection>& forced_axis)
{
    if (m < 1)
        throw DomainError("iteration count must be at least 1");
    if (bits < 53)
        throw DomainError("precision must be at least 53 bits");
    const ProjectiveDirection axis = select_axis(c, forced_axis);
    for (int k = 1; k <= 32; ++k) {
        const Angle angle{Rational(1, k), false};
        const Attempt a = try_certify(c, axis, angle, m, bits);
        if (a.outcome != Outcome::pass)
            continue;
        AbsorbingRotation g;
        g.axis = axis;
        g.angle = angle;
        g.depth_checked = m;
        g.precision_bits = bits;
        if (a.min_distance2) {
            const Interval margin = sqrt(*a.min_distance2);
            g.margin = margin.lower();
            g.margin_text = margin.lower_string(17);
        } else {
            g.margin = 2;
            g.margin_text = "2";
        }
        return g;
    }
    throw InconclusiveError("no trial angle certified at " + std::to_string(bits) + " bits");
}

AbsorbingRotation certify_rotation(const FixedDirectionSet& c, int m, int bits)
{
    for (int b = bits; b <= kMaxBits; b *= 2) {
        try {
            return find_absorbing_rotation(c, m, b);
        } catch (const InconclusiveError&) {
        }
    }
    throw InconclusiveError("precision exhausted at " + std::to_string(kMaxBits) + " bits");
}

AbsorbReport absorb_demo(const FixedDirectionSet& c, const AbsorbingRotation& g, int m)
{
    if (m < 1)
        throw DomainError("iteration count must be at least 1");
    if (g.depth_checked < m)
        throw PreconditionError("rotation certified to depth " + std::to_string(g.depth_checked) + " < " +
                                std::to_string(m));
    const auto prec = static_cast<mpfr_prec_t>(g.precision_bits);
    const auto dirs = directions_of(c);
    const std::size_t k = dirs.size();

    AbsorbReport out;
    out.layers = m + 1;
    out.directions_per_layer = k;

    // layer[i * k + p] = g^i unit(P), enclosed directly.
    const std::size_t n = static_cast<std::size_t>(m + 1) * k;
    std::vector<IVec> layer(n, IVec{Interval(prec), Interval(prec), Interval(prec)});
    for (std::size_t idx = 0; idx < n; ++idx)
        layer[idx] = rotate(g.axis, g.angle, static_cast<long>(idx / k), unit(dirs[idx % k], prec));

    std::vector<Verdict> worst(n, Verdict::positive);
    std::size_t coincident = 0, undecided = 0;
    std::string first_bad;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            const Verdict v = classify(pair_distance2(layer[x], layer[y]), g.precision_bits);
            if (v == Verdict::positive)
                continue;
            (v == Verdict::coincident ? coincident : undecided) += 1;
            for (std::size_t z : {x, y})
                if (worst[z] != Verdict::coincident)
                    worst[z] = v;
            if (first_bad.empty())
                first_bad = "g^" + std::to_string(x / k) + " " + dirs[x % k].to_string() + " vs g^" +
                            std::to_string(y / k) + " " + dirs[y % k].to_string();
        }
    out.distinct_points = static_cast<std::size_t>(std::count(worst.begin(), worst.end(), Verdict::positive));
    out.checks.add("layers_distinct", coincident == 0 && undecided == 0,
                   std::to_string(out.distinct_points) + " of " + std::to_string(n) + " directions certified distinct" +
                       (first_bad.empty() ? "" : "; first clash " + first_bad));

    const Interval theta = g.angle.enclose(prec);
    const Interval cs = cos(theta), sn = sin(theta);
    bool shift_ok = true;
    for (std::size_t idx = 0; idx + k < n; ++idx) {
        const IVec moved = rotate(g.axis, cs, sn, layer[idx]);
        for (int j = 0; j < 3; ++j)
            shift_ok = shift_ok && overlaps(moved[static_cast<std::size_t>(j)], layer[idx + k][static_cast<std::size_t>(j)]);
    }
    out.checks.add("layer_shift", shift_ok, "g maps layer i onto layer i+1");

    out.outcome = !shift_ok || coincident > 0 ? Outcome::fail : (undecided > 0 ? Outcome::inconclusive : Outcome::pass);
    return out;
}

} // namespace paradoxkit::sphere
