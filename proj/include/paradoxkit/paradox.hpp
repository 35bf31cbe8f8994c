#pragma once

// Group actions on finite point sets, paradoxical and equidecomposition
// witnesses, and their verifiers.
//
// Paradoxical sets are infinite, so the interesting witnesses here are
// truncations (a ball of F2 acting on one orbit, polynomials of bounded
// degree). TruncatedWitness carries explicit partial mover maps and an
// "interior" on which the covering identities must hold; points pushed
// outside the truncation are counted, not failed.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "paradoxkit/exactlin.hpp"
#include "paradoxkit/freeness.hpp"
#include "paradoxkit/report.hpp"
#include "paradoxkit/words.hpp"

namespace paradoxkit::paradox {

using PointId = std::uint32_t;
using PointSet = std::set<PointId>;

// A group acting by permutations on points 0..size()-1. Each label names a
// group element; the identity label must act trivially.
class FiniteActionModel {
public:
    explicit FiniteActionModel(std::size_t point_count, std::string identity_label = "e");

    // Throws ModelError unless `images` is a permutation of the points.
    void add_action(const std::string& label, std::vector<PointId> images);
    // Records g * h = gh; audit() checks (g h)x = g(h x) for all x.
    void add_composition(const std::string& g, const std::string& h, const std::string& gh);

    std::size_t size() const { return size_; }
    const std::string& identity_label() const { return identity_; }
    bool has_label(const std::string& label) const { return actions_.count(label) != 0; }
    std::vector<std::string> labels() const;

    // Throws ModelError for unknown labels or points.
    PointId apply(const std::string& label, PointId x) const;
    PointSet apply(const std::string& label, const PointSet& s) const;

    // Bijection, identity and composition laws.
    CheckList audit() const;
    void require_valid() const; // throws ModelError with the first failed law

private:
    std::size_t size_;
    std::string identity_;
    std::map<std::string, std::vector<PointId>> actions_;
    std::vector<std::array<std::string, 3>> compositions_;
};

struct ParadoxWitness {
    std::vector<PointSet> pieces_a;
    std::vector<PointSet> pieces_b;
    std::vector<std::string> movers_a;
    std::vector<std::string> movers_b;
};

struct EquidecompWitness {
    std::vector<PointSet> pieces;
    std::vector<std::string> movers;
};

struct WitnessReport {
    CheckList checks;
    bool passed() const { return checks.all_passed(); }
    // Name and detail of the first failed check, empty when passed.
    std::string first_violation() const;
};

// A's and B's jointly pairwise disjoint and inside E; union g_i A_i = E;
// union h_j B_j = E. Throws ModelError for unknown labels or a model
// that fails its audit.
WitnessReport verify_paradox_witness(const FiniteActionModel& model, const PointSet& e, const ParadoxWitness& w);

// Pieces pairwise disjoint with union E; moved pieces pairwise disjoint
// with union F.
WitnessReport verify_equidecomp(const FiniteActionModel& model, const PointSet& e, const PointSet& f,
                                const EquidecompWitness& w);

struct TruncatedPiece {
    PointSet points;
    std::string mover;
    // Image of each piece point; nullopt when it leaves the truncation.
    std::map<PointId, std::optional<PointId>> image;
};

struct TruncatedWitness {
    std::size_t point_count = 0;
    PointSet e;
    // Points whose covering is asserted.
    PointSet interior;
    std::vector<TruncatedPiece> pieces_a;
    std::vector<TruncatedPiece> pieces_b;
};

struct TruncatedReport {
    CheckList checks;
    // Piece points mapped outside the truncation.
    std::size_t leaked = 0;
    // Points of E \ interior missed by the moved A (resp. B) pieces.
    std::size_t boundary_uncovered_a = 0;
    std::size_t boundary_uncovered_b = 0;
    bool passed() const { return checks.all_passed(); }
};

TruncatedReport verify_truncated_witness(const TruncatedWitness& w);

// The F2 decomposition carried to the orbit of the certificate's base vector:
// pieces W(a)v0, W(A)v0 with movers e, a and W(b)v0, W(B)v0 with movers e, b.
// Mover images are computed by exact matrix multiplication.
struct OrbitTransport {
    int depth = 0;
    exactlin::Vec3Q base;
    // Point i is eval_word(words[i]) * base.
    std::vector<words::ReducedWord> words;
    std::vector<exactlin::Vec3Q> points;
    std::size_t distinct_points = 0;
    TruncatedWitness witness;
    TruncatedReport report;
    bool passed() const { return distinct_points == words.size() && report.passed(); }
};

// Throws PreconditionError unless `certificate` verifies and is in vector mode.
OrbitTransport orbit_transport(int depth, const freeness::FreenessCertificate& certificate,
                               int cap = words::kDefaultBallCap);

} // namespace paradoxkit::paradox
