#pragma once

// Finitely additive measures on finite structures.
//
// General Boolean algebras only get a measure constructively when they are
// finite (uniform weight on atoms); there is no Hahn-Banach step here. The
// density measures on Z are the finite-window approximants only, with their
// exact shift defect; the limiting mean is not constructed.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "paradoxkit/exactlin.hpp"
#include "paradoxkit/paradox.hpp"
#include "paradoxkit/report.hpp"

namespace paradoxkit::measures {

using exactlin::Rational;
using Element = std::size_t;
// Subsets of a set with at most 64 points, as bit masks.
using Subset = std::uint64_t;

inline int cardinality(Subset s) { return __builtin_popcountll(s); }
inline Subset full_set(std::size_t n) { return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1; }

class FiniteBooleanAlgebra {
public:
    // Tables are row-major n x n (join, meet) and length n (complement).
    // Throws ModelError if a table has the wrong size or an entry >= n.
    FiniteBooleanAlgebra(std::size_t n, std::vector<Element> join, std::vector<Element> meet,
                         std::vector<Element> complement, Element zero, Element one);

    // Subsets of {0..points-1}; element i is the set with bit mask i.
    // Throws ResourceError above 8 points.
    static FiniteBooleanAlgebra power_set(std::size_t points);
    static FiniteBooleanAlgebra two_element();

    std::size_t size() const { return n_; }
    Element join(Element a, Element b) const { return join_[a * n_ + b]; }
    Element meet(Element a, Element b) const { return meet_[a * n_ + b]; }
    Element complement(Element a) const { return complement_[a]; }
    Element zero() const { return zero_; }
    Element one() const { return one_; }
    void set_complement(Element a, Element value); // for mutation tests

private:
    std::size_t n_;
    std::vector<Element> join_, meet_, complement_;
    Element zero_, one_;
};

// Axioms on all pairs and triples. Check names: axiom_i_commutativity,
// axiom_i_associativity, axiom_i_distributivity, axiom_ii_absorption,
// axiom_iii_complement, derived_zero_one. Details name the first bad tuple.
CheckList verify_boolean_axioms(const FiniteBooleanAlgebra& ba);

struct AlgebraMeasure {
    std::vector<Rational> values; // indexed by element
    std::vector<Element> atoms;
};

// Uniform weight on atoms, extended by additivity. Throws PreconditionError
// if the axioms fail.
AlgebraMeasure construct_probability_measure(const FiniteBooleanAlgebra& ba);

// mu(0) = 0, mu(1) = 1, values in [0, 1], additivity on every disjoint pair.
CheckList audit_measure(const FiniteBooleanAlgebra& ba, const AlgebraMeasure& mu);

// Measure on the power set of {0..n-1} given by point masses.
struct PointMassMeasure {
    std::vector<Rational> mass;

    std::size_t points() const { return mass.size(); }
    Rational operator()(Subset s) const;
};

// mu(empty) = 0, total mass 1, nonnegative masses, additivity on all
// disjoint pairs (n <= 12) or 1000 sampled disjoint pairs.
CheckList audit_measure(const PointMassMeasure& mu, std::uint64_t seed = 0);

class GroupTable {
public:
    // Row-major Cayley table; mul(g, h) = table[g * n + h].
    GroupTable(std::size_t order, std::vector<Element> table, std::string name = "G");

    static GroupTable cyclic(std::size_t n);
    static GroupTable klein4();
    static GroupTable symmetric3();
    // Z1..Z6, Klein four, S3.
    static const std::vector<GroupTable>& small_groups();

    std::size_t order() const { return n_; }
    const std::string& name() const { return name_; }
    Element mul(Element g, Element h) const { return table_[g * n_ + h]; }
    const std::vector<Element>& table() const { return table_; }
    Element identity() const { return identity_; }
    Element inverse(Element g) const { return inverse_[g]; }

    // Closure, identity, inverses, associativity.
    CheckList audit() const;
    void require_valid() const; // ModelError on the first failed law

    Subset left(Element g, Subset a) const;  // gA
    Subset right(Subset a, Element g) const; // Ag

private:
    std::size_t n_;
    std::vector<Element> table_;
    std::string name_;
    Element identity_ = 0;
    std::vector<Element> inverse_;
};

struct GroupMeasureReport {
    PointMassMeasure measure;
    std::size_t subsets_checked = 0;
    CheckList checks;
};

// mu(A) = |A|/|G| on P(G), with two-sided invariance checked on every subset
// for |G| <= 8 and on 1000 sampled subsets above. Throws ModelError for an
// invalid table.
GroupMeasureReport uniform_group_measure(const GroupTable& g, std::uint64_t seed = 0);

struct DensityWindow {
    long n = 1;
    // A restricted to [-1, n].
    std::vector<long> members;
};

// Throws DomainError unless n >= 1 and members lie in [-1, n].
void validate(const DensityWindow& w);
// |A cap {0..n-1}| / n.
Rational density_measure(const DensityWindow& w);
// |mu_n(A+1) - mu_n(A)|; throws InvariantViolation if it exceeds 2/n.
Rational shift_defect(const DensityWindow& w);

// A left action of a group table on {0..points-1}: images[g][x] = g x.
struct GroupAction {
    std::size_t points = 0;
    std::vector<std::vector<Element>> images;
};

// Permutations, identity and compatibility with the table.
CheckList audit_action(const GroupTable& g, const GroupAction& act);

struct SigmaReport {
    std::size_t orbits = 0;
    // sigma({g}) for each g.
    std::vector<Rational> sigma_singletons;
    std::size_t pairs_checked = 0;
    // Invariance of mu under the action, reported as a finding only.
    bool mu_invariant = false;
    CheckList checks;
    bool passed() const { return checks.all_passed(); }
};

// sigma(A) = sum_x f_A(x) mu({x}) with f_A(x) = mu_x(A x), mu_x uniform on
// the orbit of x. Throws ModelError for an invalid table or action,
// PreconditionError for a non-free action or a mu that is not a probability
// measure.
class Sigma {
public:
    Sigma(const GroupTable& g, const GroupAction& act, const PointMassMeasure& mu);
    Rational f(Subset a, Element x) const;
    Rational operator()(Subset a) const;
    const std::vector<std::vector<Element>>& orbits() const { return orbits_; }

private:
    GroupTable g_;
    GroupAction act_;
    PointMassMeasure mu_;
    std::vector<std::vector<Element>> orbits_;
    std::vector<std::size_t> orbit_of_;
};

SigmaReport sigma_report(const GroupTable& g, const GroupAction& act, const PointMassMeasure& mu);

struct SigmaInstance {
    GroupTable group;
    GroupAction action;
    PointMassMeasure mu;
};

// G from small_groups(), X a disjoint union of regular orbits with shuffled
// labels (|X| <= 24), mu a random orbit-invariant rational probability.
SigmaInstance random_free_instance(std::mt19937_64& rng);

// A piece system on a finite cell algebra: X is the union of all cells,
// pieces and their images are unions of cells.
struct CellWitness {
    std::vector<std::string> cell_names;
    std::vector<Subset> pieces_a, pieces_b;
    std::vector<Subset> moved_a, moved_b; // g_i A_i and h_j B_j
    std::size_t cells() const { return cell_names.size(); }
};

// Cells e, W(a), W(b), W(A), W(B) of F2 with pieces W(a), W(A), W(b), W(B)
// and moved sets W(a), a W(A) = F2 \ W(a), W(b), b W(B) = F2 \ W(b).
CellWitness f2_cell_witness();

// Points of E as cells, moved sets computed through the model.
CellWitness cell_witness(const paradox::FiniteActionModel& model, const paradox::PointSet& e,
                         const paradox::ParadoxWitness& w);

struct ChainLink {
    std::string name;
    std::string relation; // ">=" or "="
    Rational lhs, rhs;
    bool holds = false;
    bool assumed = false; // taken as the invariance hypothesis
};

struct ContradictionReport {
    Rational nu_x;
    std::vector<ChainLink> links;
    std::optional<std::string> failing_link;
    // All links hold, so nu(X) >= 2 nu(X), i.e. nu(X) <= 0.
    bool chain_closes = false;
    // chain_closes and nu(X) > 0.
    bool contradiction = false;
    CheckList checks;
};

// Links, in order: pieces_within_X (nu(X) >= sum nu(pieces)),
// invariance (sum nu(pieces) = sum nu(moved)), subadditivity
// (sum nu(moved) >= nu(U moved A) + nu(U moved B)), covering
// (nu(U moved A) + nu(U moved B) = 2 nu(X)). With `invariant`, the
// invariance link is assumed rather than evaluated. Structural checks
// (pieces disjoint, moved sets covering X) are folded into the first and
// last links.
ContradictionReport paradox_contradiction(const CellWitness& w, const std::vector<Rational>& nu, bool invariant);

// Piecewise-constant f on [0, 1): value[i] on [breaks[i], breaks[i+1]),
// breaks[0] = 0, strictly increasing, all < 1.
struct StepFunction {
    std::vector<Rational> breaks;
    std::vector<Rational> values;

    void validate() const; // DomainError
    Rational operator()(const Rational& x) const;
    Rational sup_abs() const;
};

struct ErgodicResult {
    Rational value;   // F_n(f)
    Rational shifted; // F_n(f o T)
    Rational defect;  // |F_n(f o T) - F_n(f)|
    Rational bound;   // 2 sup|f| / n
    bool within_bound() const { return defect <= bound; }
};

// T(x) = x + alpha mod 1; F_n(f) = (1/n) sum_{k<n} f(T^k x0).
ErgodicResult ergodic_average(const Rational& alpha, const Rational& x0, const StepFunction& f, long n);

} // namespace paradoxkit::measures
