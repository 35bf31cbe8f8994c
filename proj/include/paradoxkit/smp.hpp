#pragma once

// The planar paradoxical set {P(t) : P in Z+[x]} with t = e^i, handled
// symbolically through coefficient sequences. Distinct polynomials give
// distinct points because t is transcendental; the numeric embedding below
// is only a sanity check of that at finite precision.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "paradoxkit/interval.hpp"
#include "paradoxkit/report.hpp"

namespace paradoxkit::paradox {

// Polynomial with nonnegative integer coefficients, ascending degree, no
// trailing zero. The zero polynomial has no coefficients.
class NNPoly {
public:
    NNPoly() = default;
    explicit NNPoly(std::vector<std::uint64_t> coefficients);

    const std::vector<std::uint64_t>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::uint64_t constant() const { return c_.empty() ? 0 : c_[0]; }
    std::uint64_t max_coefficient() const;

    friend bool operator==(const NNPoly&, const NNPoly&) = default;
    friend bool operator<(const NNPoly& l, const NNPoly& r) { return l.c_ < r.c_; }

private:
    std::vector<std::uint64_t> c_;
};

enum class SmpPart { a, b };

// A iff P(0) = 0; the zero polynomial is in A.
SmpPart smp_classify(const NNPoly& p);
// A -> E: divide by x. Throws DomainError on B.
NNPoly smp_g(const NNPoly& p);
// B -> E: subtract 1 from the constant term. Throws DomainError on A.
NNPoly smp_h(const NNPoly& p);
NNPoly times_x(const NNPoly& p);
NNPoly plus_one(const NNPoly& p);

// Enclosures of t^k = cos k + i sin k, k = 0..degree.
class EmbeddingBasis {
public:
    EmbeddingBasis(int max_degree, mpfr_prec_t precision);
    interval::Complex embed(const NNPoly& p) const;
    const interval::Complex& t_inverse() const { return t_inv_; }
    mpfr_prec_t precision() const { return precision_; }

private:
    mpfr_prec_t precision_;
    std::vector<interval::Complex> powers_;
    interval::Complex t_inv_;
};

// All polynomials with degree <= d and coefficients <= c, in mixed-radix
// order (index = sum p_k (c+1)^k).
std::vector<NNPoly> enumerate_polys(int max_degree, std::uint64_t max_coefficient);

struct SeparationResult {
    // Every pair certified farther apart than the threshold.
    bool separated = true;
    // Some pair could not be decided at this precision.
    bool inconclusive = false;
    std::size_t pairs_examined = 0;
    std::optional<std::pair<std::size_t, std::size_t>> offending;
};

// Sort-and-sweep on the real part; candidate pairs are checked in parallel.
SeparationResult check_separation(const std::vector<interval::Complex>& points, double threshold);

namespace reference {
// All pairs, serial.
SeparationResult check_separation(const std::vector<interval::Complex>& points, double threshold);
} // namespace reference

inline constexpr double kSeparationThreshold = 1e-12;

struct SmpReport {
    int max_degree = 0;
    std::uint64_t max_coefficient = 0;
    int precision_bits = 0;
    std::size_t polynomials = 0;
    std::size_t count_a = 0;
    std::size_t count_b = 0;
    std::size_t candidate_pairs = 0;
    // Numeric identities are asserted to within 2^(-precision_bits / 2).
    double tolerance = 0;
    CheckList checks;
    Outcome outcome = Outcome::pass;
};

// Throws ResourceError if (c+1)^(d+1) exceeds 2^22.
SmpReport smp_verify(int max_degree, std::uint64_t max_coefficient, int precision_bits, std::uint64_t seed = 0);

} // namespace paradoxkit::paradox
