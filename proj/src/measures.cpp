#include "paradoxkit/measures.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "paradoxkit/errors.hpp"

namespace paradoxkit::measures {

namespace {

std::string tuple(std::initializer_list<Element> xs)
{
    std::string out = "(";
    for (auto x : xs)
        out += (out.size() > 1 ? ", " : "") + std::to_string(x);
    return out + ")";
}

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

} // namespace

FiniteBooleanAlgebra::FiniteBooleanAlgebra(std::size_t n, std::vector<Element> join, std::vector<Element> meet,
                                           std::vector<Element> complement, Element zero, Element one)
    : n_(n), join_(std::move(join)), meet_(std::move(meet)), complement_(std::move(complement)), zero_(zero), one_(one)
{
    if (n_ == 0)
        throw ModelError("Boolean algebra needs at least one element");
    if (join_.size() != n_ * n_ || meet_.size() != n_ * n_ || complement_.size() != n_)
        throw ModelError("Boolean algebra tables have the wrong size");
    auto in_range = [&](Element x) { return x < n_; };
    if (!std::all_of(join_.begin(), join_.end(), in_range) || !std::all_of(meet_.begin(), meet_.end(), in_range) ||
        !std::all_of(complement_.begin(), complement_.end(), in_range) || !in_range(zero_) || !in_range(one_))
        throw ModelError("Boolean algebra table entry out of range");
}

FiniteBooleanAlgebra FiniteBooleanAlgebra::power_set(std::size_t points)
{
    if (points > 8)
        throw ResourceError("power-set algebra limited to 8 points");
    const std::size_t n = std::size_t{1} << points;
    std::vector<Element> join(n * n), meet(n * n), comp(n);
    for (std::size_t a = 0; a < n; ++a) {
        comp[a] = (n - 1) & ~a;
        for (std::size_t b = 0; b < n; ++b) {
            join[a * n + b] = a | b;
            meet[a * n + b] = a & b;
        }
    }
    return FiniteBooleanAlgebra(n, std::move(join), std::move(meet), std::move(comp), 0, n - 1);
}

FiniteBooleanAlgebra FiniteBooleanAlgebra::two_element() { return power_set(1); }

void FiniteBooleanAlgebra::set_complement(Element a, Element value)
{
    if (a >= n_ || value >= n_)
        throw ModelError("complement entry out of range");
    complement_[a] = value;
}

CheckList verify_boolean_axioms(const FiniteBooleanAlgebra& ba)
{
    const std::size_t n = ba.size();
    std::optional<std::string> comm, assoc, dist, absorb, compl_, zero_one;
    auto note = [](std::optional<std::string>& slot, std::string s) {
        if (!slot)
            slot = std::move(s);
    };

    for (Element a = 0; a < n; ++a) {
        if (ba.meet(a, ba.complement(a)) != ba.zero() || ba.join(a, ba.complement(a)) != ba.one())
            note(zero_one, "a = " + std::to_string(a));
        for (Element b = 0; b < n; ++b) {
            if (ba.join(a, b) != ba.join(b, a) || ba.meet(a, b) != ba.meet(b, a))
                note(comm, tuple({a, b}));
            if (ba.join(ba.meet(a, b), b) != b || ba.meet(ba.join(a, b), b) != b)
                note(absorb, tuple({a, b}));
            const Element ac = ba.complement(a);
            if (ba.join(ba.meet(a, ac), b) != b || ba.meet(ba.join(a, ac), b) != b)
                note(compl_, tuple({a, b}));
        }
    }

    // Triples dominate the cost; split them over threads and keep the least.
    const auto rows = static_cast<std::int64_t>(n);
    std::vector<std::optional<std::string>> bad_assoc(n), bad_dist(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t ai = 0; ai < rows; ++ai) {
        const auto a = static_cast<Element>(ai);
        for (Element b = 0; b < n && !(bad_assoc[a] && bad_dist[a]); ++b)
            for (Element c = 0; c < n; ++c) {
                if (!bad_assoc[a] && (ba.join(ba.join(a, b), c) != ba.join(a, ba.join(b, c)) ||
                                      ba.meet(ba.meet(a, b), c) != ba.meet(a, ba.meet(b, c))))
                    bad_assoc[a] = tuple({a, b, c});
                if (!bad_dist[a] && (ba.meet(a, ba.join(b, c)) != ba.join(ba.meet(a, b), ba.meet(a, c)) ||
                                     ba.join(a, ba.meet(b, c)) != ba.meet(ba.join(a, b), ba.join(a, c))))
                    bad_dist[a] = tuple({a, b, c});
            }
    }
    for (Element a = 0; a < n; ++a) {
        if (bad_assoc[a])
            note(assoc, *bad_assoc[a]);
        if (bad_dist[a])
            note(dist, *bad_dist[a]);
    }

    CheckList out;
    auto add = [&](const char* name, const std::optional<std::string>& bad) {
        out.add(name, !bad, bad ? "fails at " + *bad : "");
    };
    add("axiom_i_commutativity", comm);
    add("axiom_i_associativity", assoc);
    add("axiom_i_distributivity", dist);
    add("axiom_ii_absorption", absorb);
    add("axiom_iii_complement", compl_);
    add("derived_zero_one", zero_one);
    return out;
}

AlgebraMeasure construct_probability_measure(const FiniteBooleanAlgebra& ba)
{
    const auto axioms = verify_boolean_axioms(ba);
    if (const auto* bad = axioms.first_failure())
        throw PreconditionError("not a Boolean algebra: " + bad->name + " " + bad->detail);
    const std::size_t n = ba.size();
    auto leq = [&](Element x, Element y) { return ba.meet(x, y) == x; };

    AlgebraMeasure mu;
    for (Element a = 0; a < n; ++a) {
        if (a == ba.zero())
            continue;
        bool minimal = true;
        for (Element b = 0; b < n && minimal; ++b)
            if (b != a && b != ba.zero() && leq(b, a))
                minimal = false;
        if (minimal)
            mu.atoms.push_back(a);
    }
    mu.values.assign(n, Rational(0));
    if (mu.atoms.empty())
        return mu; // the one-element algebra, where 0 = 1
    const Rational w(1, static_cast<long>(mu.atoms.size()));
    for (Element a = 0; a < n; ++a)
        for (Element t : mu.atoms)
            if (leq(t, a))
                mu.values[a] += w;
    return mu;
}

CheckList audit_measure(const FiniteBooleanAlgebra& ba, const AlgebraMeasure& mu)
{
    CheckList out;
    const std::size_t n = ba.size();
    if (mu.values.size() != n) {
        out.add("sized", false, "measure has " + std::to_string(mu.values.size()) + " values");
        return out;
    }
    out.add("zero_is_null", mu.values[ba.zero()] == 0);
    out.add("one_is_one", mu.values[ba.one()] == 1);
    out.add("values_in_unit_interval", std::all_of(mu.values.begin(), mu.values.end(),
                                                   [](const Rational& q) { return q >= 0 && q <= 1; }));
    std::optional<std::string> bad;
    std::size_t pairs = 0;
    for (Element a = 0; a < n && !bad; ++a)
        for (Element b = 0; b < n; ++b)
            if (ba.meet(a, b) == ba.zero()) {
                ++pairs;
                if (mu.values[ba.join(a, b)] != mu.values[a] + mu.values[b]) {
                    bad = tuple({a, b});
                    break;
                }
            }
    out.add("additivity", !bad, bad ? "fails at " + *bad : std::to_string(pairs) + " disjoint pairs");
    return out;
}

Rational PointMassMeasure::operator()(Subset s) const
{
    Rational sum = 0;
    for (std::size_t i = 0; i < mass.size(); ++i)
        if (s >> i & 1)
            sum += mass[i];
    return sum;
}

CheckList audit_measure(const PointMassMeasure& mu, std::uint64_t seed)
{
    CheckList out;
    const std::size_t n = mu.points();
    if (n > 64)
        throw ResourceError("point-mass measures are limited to 64 points");
    out.add("zero_is_null", mu(0) == 0);
    out.add("total_mass_one", mu(full_set(n)) == 1);
    out.add("nonnegative", std::all_of(mu.mass.begin(), mu.mass.end(), [](const Rational& q) { return q >= 0; }));

    std::size_t pairs = 0;
    std::optional<std::string> bad;
    auto check = [&](Subset a, Subset b) {
        ++pairs;
        if (!bad && mu(a | b) != mu(a) + mu(b))
            bad = "A = " + std::to_string(a) + ", B = " + std::to_string(b);
    };
    if (n <= 12) {
        // Each disjoint pair is a labelling of the points by {A, B, neither}.
        const Subset all = full_set(n);
        for (Subset a = 0; a <= all; ++a)
            for (Subset rest = all & ~a, b = rest;; b = (b - 1) & rest) {
                check(a, b);
                if (b == 0)
                    break;
            }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> label(0, 2);
        for (int k = 0; k < 1000; ++k) {
            Subset a = 0, b = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const int l = label(rng);
                if (l == 1)
                    a |= Subset{1} << i;
                else if (l == 2)
                    b |= Subset{1} << i;
            }
            check(a, b);
        }
    }
    out.add("additivity", !bad, bad ? "fails at " + *bad : std::to_string(pairs) + " disjoint pairs");
    return out;
}

GroupTable::GroupTable(std::size_t order, std::vector<Element> table, std::string name)
    : n_(order), table_(std::move(table)), name_(std::move(name))
{
    if (n_ == 0 || n_ > 64)
        throw ModelError("group order must be in 1..64");
    if (table_.size() != n_ * n_)
        throw ModelError("group table has the wrong size");
    if (!std::all_of(table_.begin(), table_.end(), [&](Element x) { return x < n_; }))
        throw ModelError("group table entry out of range");
    identity_ = n_;
    for (Element e = 0; e < n_ && identity_ == n_; ++e) {
        bool ok = true;
        for (Element g = 0; g < n_ && ok; ++g)
            ok = mul(e, g) == g && mul(g, e) == g;
        if (ok)
            identity_ = e;
    }
    inverse_.assign(n_, n_);
    if (identity_ < n_)
        for (Element g = 0; g < n_; ++g)
            for (Element h = 0; h < n_; ++h)
                if (mul(g, h) == identity_ && mul(h, g) == identity_)
                    inverse_[g] = h;
}

GroupTable GroupTable::cyclic(std::size_t n)
{
    std::vector<Element> t(n * n);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            t[g * n + h] = (g + h) % n;
    return GroupTable(n, std::move(t), "Z" + std::to_string(n));
}

GroupTable GroupTable::klein4()
{
    std::vector<Element> t(16);
    for (Element g = 0; g < 4; ++g)
        for (Element h = 0; h < 4; ++h)
            t[g * 4 + h] = g ^ h;
    return GroupTable(4, std::move(t), "V4");
}

GroupTable GroupTable::symmetric3()
{
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<Element> t(36);
    for (std::size_t g = 0; g < 6; ++g)
        for (std::size_t h = 0; h < 6; ++h) {
            std::array<int, 3> gh{};
            for (int i = 0; i < 3; ++i)
                gh[static_cast<std::size_t>(i)] = perms[g][static_cast<std::size_t>(perms[h][static_cast<std::size_t>(i)])];
            t[g * 6 + h] = static_cast<Element>(std::find(perms.begin(), perms.end(), gh) - perms.begin());
        }
    return GroupTable(6, std::move(t), "S3");
}

const std::vector<GroupTable>& GroupTable::small_groups()
{
    static const std::vector<GroupTable> groups = [] {
        std::vector<GroupTable> out;
        for (std::size_t n = 1; n <= 6; ++n)
            out.push_back(cyclic(n));
        out.push_back(klein4());
        out.push_back(symmetric3());
        return out;
    }();
    return groups;
}

CheckList GroupTable::audit() const
{
    CheckList out;
    out.add("identity", identity_ < n_);
    const bool inverses = std::all_of(inverse_.begin(), inverse_.end(), [&](Element x) { return x < n_; });
    out.add("inverses", inverses);
    std::optional<std::string> bad;
    for (Element a = 0; a < n_ && !bad; ++a)
        for (Element b = 0; b < n_ && !bad; ++b)
            for (Element c = 0; c < n_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
                    bad = tuple({a, b, c});
                    break;
                }
    out.add("associativity", !bad, bad ? "fails at " + *bad : "");
    return out;
}

void GroupTable::require_valid() const
{
    const auto checks = audit();
    if (const auto* bad = checks.first_failure())
        throw ModelError("invalid group table " + name_ + ": " + bad->name + " " + bad->detail);
}

Subset GroupTable::left(Element g, Subset a) const
{
    Subset out = 0;
    for (Element x = 0; x < n_; ++x)
        if (a >> x & 1)
            out |= Subset{1} << mul(g, x);
    return out;
}

Subset GroupTable::right(Subset a, Element g) const
{
    Subset out = 0;
    for (Element x = 0; x < n_; ++x)
        if (a >> x & 1)
            out |= Subset{1} << mul(x, g);
    return out;
}

GroupMeasureReport uniform_group_measure(const GroupTable& g, std::uint64_t seed)
{
    g.require_valid();
    const std::size_t n = g.order();
    GroupMeasureReport out;
    out.measure.mass.assign(n, exactlin::ratio(1, static_cast<long>(n)));

    std::optional<std::string> bad;
    auto check = [&](Subset a) {
        ++out.subsets_checked;
        const Rational m = out.measure(a);
        if (m != exactlin::ratio(cardinality(a), static_cast<long>(n)))
            bad = "mu(A) != |A|/|G| at A = " + std::to_string(a);
        for (Element x = 0; x < n && !bad; ++x)
            if (out.measure(g.left(x, a)) != m || out.measure(g.right(a, x)) != m)
                bad = "g = " + std::to_string(x) + ", A = " + std::to_string(a);
    };
    if (n <= 8) {
        for (Subset a = 0; a <= full_set(n) && !bad; ++a)
            check(a);
    } else {
        std::mt19937_64 rng(seed);
        for (int k = 0; k < 1000 && !bad; ++k)
            check(rng() & full_set(n));
    }
    out.checks.add("two_sided_invariance", !bad,
                   bad ? *bad : std::to_string(out.subsets_checked) + " subsets, all translates");
    for (auto& c : audit_measure(out.measure, seed).checks)
        out.checks.checks.push_back(std::move(c));
    return out;
}

void validate(const DensityWindow& w)
{
    if (w.n < 1)
        throw DomainError("density window needs n >= 1");
    for (long a : w.members)
        if (a < -1 || a > w.n)
            throw DomainError("window member " + std::to_string(a) + " outside [-1, n]");
}

namespace {

Rational window_count(const DensityWindow& w, long shift)
{
    std::set<long> hits;
    for (long a : w.members)
        if (a + shift >= 0 && a + shift < w.n)
            hits.insert(a + shift);
    return exactlin::ratio(static_cast<long>(hits.size()), w.n);
}

} // namespace

Rational density_measure(const DensityWindow& w)
{
    validate(w);
    return window_count(w, 0);
}

Rational shift_defect(const DensityWindow& w)
{
    validate(w);
    const Rational d = abs_q(window_count(w, 1) - window_count(w, 0));
    if (d > exactlin::ratio(2, w.n))
        throw InvariantViolation("shift defect " + exactlin::to_string(d) + " exceeds 2/n");
    return d;
}

CheckList audit_action(const GroupTable& g, const GroupAction& act)
{
    CheckList out;
    const std::size_t n = act.points;
    bool shape = act.images.size() == g.order() && n <= 64;
    for (const auto& row : act.images)
        shape = shape && row.size() == n;
    out.add("shape", shape);
    if (!shape)
        return out;
    bool perms = true;
    for (const auto& row : act.images) {
        std::vector<bool> seen(n, false);
        for (Element x : row) {
            if (x >= n || seen[x])
                perms = false;
            else
                seen[x] = true;
        }
    }
    out.add("permutations", perms);
    if (!perms)
        return out;
    bool ident = true;
    for (Element x = 0; x < n; ++x)
        ident = ident && act.images[g.identity()][x] == x;
    out.add("identity_acts_trivially", ident);
    std::optional<std::string> bad;
    for (Element a = 0; a < g.order() && !bad; ++a)
        for (Element b = 0; b < g.order() && !bad; ++b)
            for (Element x = 0; x < n; ++x)
                if (act.images[g.mul(a, b)][x] != act.images[a][act.images[b][x]]) {
                    bad = tuple({a, b, x});
                    break;
                }
    out.add("compatibility", !bad, bad ? "(g h) x != g (h x) at " + *bad : "");
    return out;
}

Sigma::Sigma(const GroupTable& g, const GroupAction& act, const PointMassMeasure& mu) : g_(g), act_(act), mu_(mu)
{
    g_.require_valid();
    const auto checks = audit_action(g_, act_);
    if (const auto* bad = checks.first_failure())
        throw ModelError("invalid action: " + bad->name + " " + bad->detail);
    if (mu_.points() != act_.points)
        throw PreconditionError("measure and action disagree on the number of points");
    for (Element x = 0; x < act_.points; ++x)
        for (Element h = 0; h < g_.order(); ++h)
            if (h != g_.identity() && act_.images[h][x] == x)
                throw PreconditionError("action is not free: element " + std::to_string(h) + " fixes point " +
                                        std::to_string(x));
    const auto mu_checks = audit_measure(mu_);
    for (const char* name : {"total_mass_one", "nonnegative"})
        for (const auto& c : mu_checks.checks)
            if (c.name == name && !c.passed)
                throw PreconditionError("mu is not a probability measure (" + c.name + ")");

    orbit_of_.assign(act_.points, act_.points);
    for (Element x = 0; x < act_.points; ++x) {
        if (orbit_of_[x] != act_.points)
            continue;
        std::set<Element> orbit;
        for (Element h = 0; h < g_.order(); ++h)
            orbit.insert(act_.images[h][x]);
        for (Element y : orbit)
            orbit_of_[y] = orbits_.size();
        orbits_.emplace_back(orbit.begin(), orbit.end());
    }
}

Rational Sigma::f(Subset a, Element x) const
{
    std::set<Element> ax;
    for (Element h = 0; h < g_.order(); ++h)
        if (a >> h & 1)
            ax.insert(act_.images[h][x]);
    return exactlin::ratio(static_cast<long>(ax.size()), static_cast<long>(orbits_[orbit_of_[x]].size()));
}

Rational Sigma::operator()(Subset a) const
{
    Rational sum = 0;
    for (Element x = 0; x < act_.points; ++x)
        sum += f(a, x) * mu_.mass[x];
    return sum;
}

SigmaReport sigma_report(const GroupTable& g, const GroupAction& act, const PointMassMeasure& mu)
{
    if (g.order() > 16)
        throw ResourceError("exhaustive sigma checks limited to |G| <= 16");
    const Sigma sigma(g, act, mu);
    const std::size_t n = g.order();
    const Subset all = full_set(n);

    SigmaReport out;
    out.orbits = sigma.orbits().size();
    for (Element h = 0; h < n; ++h)
        out.sigma_singletons.push_back(sigma(Subset{1} << h));

    std::vector<Rational> table(all + 1);
    for (Subset a = 0; a <= all; ++a)
        table[a] = sigma(a);

    out.checks.add("sigma_G_is_one", table[all] == 1, "sigma(G) = " + exactlin::to_string(table[all]));
    out.checks.add("sigma_empty_is_zero", table[0] == 0);

    // f_{A u B} = f_A + f_B pointwise, hence sigma additive.
    std::optional<std::string> bad_f, bad_add;
    for (Subset a = 0; a <= all; ++a)
        for (Subset rest = all & ~a, b = rest;; b = (b - 1) & rest) {
            ++out.pairs_checked;
            if (!bad_add && table[a | b] != table[a] + table[b])
                bad_add = "A = " + std::to_string(a) + ", B = " + std::to_string(b);
            for (Element x = 0; x < act.points && !bad_f; ++x)
                if (sigma.f(a | b, x) != sigma.f(a, x) + sigma.f(b, x))
                    bad_f = "A = " + std::to_string(a) + ", B = " + std::to_string(b) + ", x = " + std::to_string(x);
            if (b == 0)
                break;
        }
    out.checks.add("f_additive", !bad_f, bad_f.value_or(""));
    out.checks.add("sigma_additive", !bad_add,
                   bad_add.value_or(std::to_string(out.pairs_checked) + " disjoint pairs"));

    std::optional<std::string> bad_inv;
    for (Subset a = 0; a <= all && !bad_inv; ++a)
        for (Element h = 0; h < n; ++h)
            if (table[g.right(a, h)] != table[a]) {
                bad_inv = "A = " + std::to_string(a) + ", g = " + std::to_string(h);
                break;
            }
    out.checks.add("right_invariant", !bad_inv, bad_inv.value_or("all subsets, all g"));

    out.mu_invariant = true;
    for (Element h = 0; h < n && out.mu_invariant; ++h)
        for (Element x = 0; x < act.points; ++x)
            if (mu.mass[act.images[h][x]] != mu.mass[x]) {
                out.mu_invariant = false;
                break;
            }
    return out;
}

SigmaInstance random_free_instance(std::mt19937_64& rng)
{
    const auto& groups = GroupTable::small_groups();
    const GroupTable& g = groups[std::uniform_int_distribution<std::size_t>(0, groups.size() - 1)(rng)];
    const std::size_t order = g.order();
    const std::size_t max_orbits = 24 / order;
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, max_orbits)(rng);
    const std::size_t points = k * order;

    std::vector<Element> label(points);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);

    GroupAction act;
    act.points = points;
    act.images.assign(order, std::vector<Element>(points));
    for (Element h = 0; h < order; ++h)
        for (std::size_t orbit = 0; orbit < k; ++orbit)
            for (Element y = 0; y < order; ++y)
                act.images[h][label[orbit * order + y]] = label[orbit * order + g.mul(h, y)];

    std::vector<long> weight(k);
    long total = 0;
    for (auto& w : weight) {
        w = std::uniform_int_distribution<long>(1, 9)(rng);
        total += w * static_cast<long>(order);
    }
    PointMassMeasure mu;
    mu.mass.assign(points, Rational(0));
    for (std::size_t orbit = 0; orbit < k; ++orbit)
        for (Element y = 0; y < order; ++y)
            mu.mass[label[orbit * order + y]] = exactlin::ratio(weight[orbit], total);
    return {g, std::move(act), std::move(mu)};
}

CellWitness f2_cell_witness()
{
    // Cells: 0 = e, 1 = W(a), 2 = W(b), 3 = W(A), 4 = W(B).
    CellWitness w;
    w.cell_names = {"e", "W(a)", "W(b)", "W(A)", "W(B)"};
    const Subset wa = 2, wb = 4, wA = 8, wB = 16, all = 31;
    w.pieces_a = {wa, wA};
    w.pieces_b = {wb, wB};
    w.moved_a = {wa, all & ~wa};
    w.moved_b = {wb, all & ~wb};
    return w;
}

CellWitness cell_witness(const paradox::FiniteActionModel& model, const paradox::PointSet& e,
                         const paradox::ParadoxWitness& w)
{
    if (e.size() > 64)
        throw ResourceError("cell witnesses are limited to 64 cells");
    if (w.pieces_a.size() != w.movers_a.size() || w.pieces_b.size() != w.movers_b.size())
        throw ModelError("each piece needs exactly one mover");
    std::map<paradox::PointId, std::size_t> cell;
    CellWitness out;
    for (auto x : e) {
        cell[x] = out.cell_names.size();
        out.cell_names.push_back(std::to_string(x));
    }
    // Moved points landing outside E have no cell and are dropped.
    auto to_subset = [&](const paradox::PointSet& s, bool& outside) {
        Subset m = 0;
        for (auto x : s) {
            auto it = cell.find(x);
            if (it == cell.end())
                outside = true;
            else
                m |= Subset{1} << it->second;
        }
        return m;
    };
    bool outside = false;
    for (std::size_t i = 0; i < w.pieces_a.size(); ++i) {
        out.pieces_a.push_back(to_subset(w.pieces_a[i], outside));
        bool moved_out = false;
        out.moved_a.push_back(to_subset(model.apply(w.movers_a[i], w.pieces_a[i]), moved_out));
    }
    for (std::size_t i = 0; i < w.pieces_b.size(); ++i) {
        out.pieces_b.push_back(to_subset(w.pieces_b[i], outside));
        bool moved_out = false;
        out.moved_b.push_back(to_subset(model.apply(w.movers_b[i], w.pieces_b[i]), moved_out));
    }
    if (outside)
        throw PreconditionError("paradox pieces must lie within E");
    return out;
}

ContradictionReport paradox_contradiction(const CellWitness& w, const std::vector<Rational>& nu, bool invariant)
{
    const std::size_t n = w.cells();
    if (n == 0 || n > 64)
        throw DomainError("cell witness needs 1..64 cells");
    if (nu.size() != n)
        throw DomainError("measure has " + std::to_string(nu.size()) + " values for " + std::to_string(n) + " cells");
    if (w.pieces_a.size() != w.moved_a.size() || w.pieces_b.size() != w.moved_b.size())
        throw ModelError("each piece needs exactly one moved image");
    const Subset all = full_set(n);
    auto measure = [&](Subset s) {
        Rational sum = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (s >> i & 1)
                sum += nu[i];
        return sum;
    };

    ContradictionReport out;
    out.nu_x = measure(all);

    Subset seen = 0;
    bool disjoint = true;
    Rational pieces = 0, moved = 0;
    Subset union_a = 0, union_b = 0;
    for (auto p : w.pieces_a) {
        disjoint = disjoint && (seen & p) == 0 && (p & ~all) == 0;
        seen |= p;
        pieces += measure(p);
    }
    for (auto p : w.pieces_b) {
        disjoint = disjoint && (seen & p) == 0 && (p & ~all) == 0;
        seen |= p;
        pieces += measure(p);
    }
    for (auto m : w.moved_a) {
        moved += measure(m);
        union_a |= m;
    }
    for (auto m : w.moved_b) {
        moved += measure(m);
        union_b |= m;
    }
    const Rational covered = measure(union_a) + measure(union_b);
    const bool covering = union_a == all && union_b == all;

    out.checks.add("pieces_disjoint_in_X", disjoint);
    out.checks.add("moved_cover_X", covering);

    out.links.push_back({"pieces_within_X", ">=", out.nu_x, pieces, disjoint && out.nu_x >= pieces, false});
    out.links.push_back({"invariance", "=", pieces, moved, invariant || pieces == moved, invariant});
    out.links.push_back({"subadditivity", ">=", moved, covered, moved >= covered, false});
    out.links.push_back({"covering", "=", covered, 2 * out.nu_x, covering && covered == 2 * out.nu_x, false});

    for (const auto& l : out.links)
        if (!l.holds) {
            out.failing_link = l.name;
            break;
        }
    out.chain_closes = !out.failing_link;
    out.contradiction = out.chain_closes && out.nu_x > 0;
    return out;
}

void StepFunction::validate() const
{
    if (breaks.empty() || breaks.size() != values.size())
        throw DomainError("step function needs matching breaks and values");
    if (breaks[0] != 0)
        throw DomainError("step function must start at 0");
    for (std::size_t i = 0; i < breaks.size(); ++i) {
        if (breaks[i] >= 1)
            throw DomainError("step function breakpoints must be < 1");
        if (i > 0 && breaks[i] <= breaks[i - 1])
            throw DomainError("step function breakpoints must increase");
    }
}

Rational StepFunction::operator()(const Rational& x) const
{
    if (x < 0 || x >= 1)
        throw DomainError("step function evaluated outside [0, 1)");
    const auto it = std::upper_bound(breaks.begin(), breaks.end(), x);
    return values[static_cast<std::size_t>(it - breaks.begin()) - 1];
}

Rational StepFunction::sup_abs() const
{
    Rational m = 0;
    for (const auto& v : values)
        m = std::max(m, abs_q(v));
    return m;
}

namespace {

Rational frac(const Rational& x)
{
    exactlin::Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return x - Rational(fl);
}

} // namespace

ErgodicResult ergodic_average(const Rational& alpha, const Rational& x0, const StepFunction& f, long n)
{
    f.validate();
    if (n < 1)
        throw DomainError("ergodic average needs n >= 1");
    const Rational a = frac(alpha);
    Rational x = frac(x0);
    Rational sum = 0, sum_shifted = 0;
    for (long k = 0; k < n; ++k) {
        sum += f(x);
        x = frac(x + a);
        sum_shifted += f(x);
    }
    ErgodicResult r;
    r.value = sum / n;
    r.shifted = sum_shifted / n;
    r.defect = abs_q(r.shifted - r.value);
    r.bound = 2 * f.sup_abs() / n;
    return r;
}

} // namespace paradoxkit::measures
