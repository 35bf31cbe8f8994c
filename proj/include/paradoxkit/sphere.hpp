#pragma once

// Fixed directions of the F2 action on the sphere and rotations that push
// a finite set of them off itself.
//
// Directions stay exact (primitive integer triples). Unit vectors only
// appear inside interval computations.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paradoxkit/exactlin.hpp"
#include "paradoxkit/interval.hpp"
#include "paradoxkit/report.hpp"
#include "paradoxkit/words.hpp"

namespace paradoxkit::sphere {

using exactlin::ProjectiveDirection;

struct FixedDirectionSet {
    int depth = 0;
    // Each direction with the length-lex first word fixing it.
    std::map<ProjectiveDirection, words::ReducedWord> directions;

    bool contains(const ProjectiveDirection& d) const { return directions.count(d) != 0; }
    std::size_t size() const { return directions.size(); }
};

// Axes of all nonempty words of length <= N. Throws InvariantViolation if a
// word's matrix does not have a one-dimensional fixed space.
FixedDirectionSet fixed_directions(int depth, const exactlin::GeneratorPair& gens = exactlin::GeneratorPair::standard(),
                                   int cap = words::kDefaultBallCap);

namespace reference {
FixedDirectionSet fixed_directions(int depth, const exactlin::GeneratorPair& gens = exactlin::GeneratorPair::standard(),
                                   int cap = words::kDefaultBallCap);
} // namespace reference

struct RankCensus {
    std::size_t words_checked = 0;
    std::size_t rank_two = 0;
    std::optional<words::ReducedWord> first_bad;
    bool passed() const { return words_checked == rank_two; }
};

// rank(eval_word(w) - I) for every nonempty w of length <= N.
RankCensus rank_census(int depth, const exactlin::GeneratorPair& gens = exactlin::GeneratorPair::standard());

// Some nonempty word of length <= N fixes v0.
bool is_fixed_direct(const exactlin::Vec3Q& v0, int depth);

// Membership in fixed_directions(N), cross-checked against is_fixed_direct.
// Throws DegenerateInputError for v0 = 0 and InvariantViolation if the two
// disagree.
bool is_free_at(const exactlin::Vec3Q& v0, int depth);
bool is_free_at(const exactlin::Vec3Q& v0, const FixedDirectionSet& c);

// Rotation angle: coefficient, optionally times pi.
struct Angle {
    exactlin::Rational coefficient;
    bool times_pi = false;

    interval::Interval enclose(mpfr_prec_t precision) const;
    std::string to_string() const; // "1/3" or "1/2*pi"
};

using IVec = std::array<interval::Interval, 3>;

// Enclosure of the unit vector along d.
IVec unit(const ProjectiveDirection& d, mpfr_prec_t precision);
// Rodrigues rotation of v about `axis` by `k * angle`.
IVec rotate(const ProjectiveDirection& axis, const Angle& angle, long k, const IVec& v);
// Lower-level version with explicit cos/sin enclosures.
IVec rotate(const ProjectiveDirection& axis, const interval::Interval& c, const interval::Interval& s, const IVec& v);
// Squared chordal distance between the antipodal pairs {+-p} and {+-q}:
// 2 - 2 |p . q| for unit p, q.
interval::Interval pair_distance2(const IVec& p, const IVec& q);

struct AbsorbingRotation {
    ProjectiveDirection axis{0, 0, 1};
    Angle angle;
    int depth_checked = 0;
    int precision_bits = 0;
    // Lower bound on all certified distances, as a double and as a
    // downward-rounded decimal string.
    double margin = 0;
    std::string margin_text;
    std::string angle_decimal() const;
};

// Small primitive directions, entries in [-2, 2], ordered by squared norm
// then lexicographically.
const std::vector<ProjectiveDirection>& candidate_axes();

// First candidate axis outside C, or `forced` if given. Throws
// PreconditionError if `forced` lies in C or every candidate does.
ProjectiveDirection select_axis(const FixedDirectionSet& c, const std::optional<ProjectiveDirection>& forced = {});

struct Attempt {
    Outcome outcome = Outcome::inconclusive;
    // Enclosure of the smallest squared distance found.
    std::optional<interval::Interval> min_distance2;
    // (i, P, Q) of the closest pair when the attempt fails or is undecided.
    std::string offending;
};

// Distances between g^i(P) and Q for all P, Q in C and 1 <= i <= M. pass:
// all certified positive; fail: some pair certainly closer than
// 2^(-bits/2); inconclusive otherwise.
Attempt try_certify(const FixedDirectionSet& c, const ProjectiveDirection& axis, const Angle& angle, int m, int bits);

// Tries angles 1, 1/2, ..., 1/32 radians at `bits`. Throws InconclusiveError
// if none certifies; callers may raise precision.
AbsorbingRotation find_absorbing_rotation(const FixedDirectionSet& c, int m, int bits = 128,
                                          const std::optional<ProjectiveDirection>& forced_axis = {});

inline constexpr int kDefaultBits = 128;
inline constexpr int kMaxBits = 1024;

// find_absorbing_rotation with precision doubling from `bits` up to kMaxBits.
AbsorbingRotation certify_rotation(const FixedDirectionSet& c, int m, int bits = kDefaultBits);

struct AbsorbReport {
    int layers = 0; // M + 1
    std::size_t directions_per_layer = 0;
    std::size_t distinct_points = 0; // directions certified pairwise distinct
    CheckList checks;
    Outcome outcome = Outcome::pass;
};

// Layers D_i = g^i C for i = 0..M: checks all (M+1)|C| directions are
// pairwise distinct and that g carries layer i into layer i+1. Throws
// PreconditionError if g.depth_checked < M.
AbsorbReport absorb_demo(const FixedDirectionSet& c, const AbsorbingRotation& g, int m);

} // namespace paradoxkit::sphere
