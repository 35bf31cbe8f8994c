#pragma once

// Additive maps on a finite-rank Q-vector space spanned by named reals.
// Elements are their coordinate vectors; that the named reals are linearly
// independent over Q is an assumption of the model, not something checked.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "paradoxkit/exactlin.hpp"
#include "paradoxkit/report.hpp"

namespace paradoxkit::cauchy {

using exactlin::Rational;
using Coords = std::vector<Rational>;

inline constexpr const char* kModelAssumption = "basis labels are assumed linearly independent over Q";

class HamelModel {
public:
    // Throws DomainError if the sizes differ or the rank is 0.
    HamelModel(std::vector<std::string> labels, std::vector<Rational> images);

    std::size_t rank() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Rational>& images() const { return images_; }
    Coords basis_vector(std::size_t i) const;

private:
    std::vector<std::string> labels_;
    std::vector<Rational> images_;
};

// sum_i x_i f(v_i). Throws DomainError on a length mismatch.
Rational eval(const HamelModel& f, const Coords& x);

using Evaluator = std::function<Rational(const HamelModel&, const Coords&)>;

struct CauchyReport {
    int trials = 0;
    CheckList checks;
    bool passed() const { return checks.all_passed(); }
};

// f(x + y) = f(x) + f(y) and f(q x) = q f(x) on `trials` random rational
// pairs, plus q = -3/7. `evaluate` is replaceable so a broken evaluator can
// be shown to fail. Throws DomainError if trials < 1.
CauchyReport verify_cauchy(const HamelModel& f, int trials, std::uint64_t seed = 0, const Evaluator& evaluate = eval);

struct NonproportionalityWitness {
    Coords x, y;
    // f(x) y - f(y) x; for f = c id it would vanish.
    Coords cross;
};

// Rank 1 never has a witness. At rank >= 2 a witness exists iff some f(v_i)
// is nonzero; it is the pair of basis vectors (v_i, v_j), i < j, first in
// lexicographic order with nonzero cross term.
std::optional<NonproportionalityWitness> nonproportionality_witness(const HamelModel& f);

// Deterministic demo model of rank k: labels "1", "sqrt2", "sqrt3", "pi",
// "e", ... and images (0, 1, 2, ..., k-1).
HamelModel demo_model(std::size_t rank);

} // namespace paradoxkit::cauchy
