#pragma once

// Freeness of the subgroup generated by A and B, two ways:
//
//  * exhaustive_check(N): every nonempty reduced word of length <= N is
//    evaluated exactly and compared with I.
//  * residue certificates: for integral v0, track r(w) = 7^|w| M(w) v0 mod 7
//    over words built by prepending letters. If no reachable r(w) is zero,
//    M(w) v0 has denominator exactly 7^|w| for every nonempty reduced w, so
//    M(w) v0 != v0 and M(w) != I at all lengths. The matrix variant tracks
//    7^|w| M(w) mod 7 instead and proves M(w) != I only.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "paradoxkit/exactlin.hpp"
#include "paradoxkit/words.hpp"

namespace paradoxkit::freeness {

struct FreenessVerdict {
    bool certified = false;
    // Length-lex first nonempty word with eval_word(w) = I.
    std::optional<words::ReducedWord> counterexample;
    int depth = 0;
    std::size_t words_evaluated = 0;
};

// OpenMP depth-first search over ball(N) with the integer fast path.
FreenessVerdict exhaustive_check(int depth, const exactlin::GeneratorPair& gens = exactlin::GeneratorPair::standard(),
                                 int cap = words::kDefaultBallCap);

namespace reference {
// Serial, one rational eval_word per element of ball(N).
FreenessVerdict exhaustive_check(int depth, const exactlin::GeneratorPair& gens = exactlin::GeneratorPair::standard(),
                                 int cap = words::kDefaultBallCap);
} // namespace reference

inline constexpr int kModulus = 7;

enum class ResidueMode { vector, matrix };

const char* to_string(ResidueMode m) noexcept;

struct ResidueState {
    words::Letter first;
    // Row-major 3 x k residues in [0, 7): k = 1 for vector mode, 3 for matrix mode.
    std::vector<int> residue;

    bool is_zero() const;
    friend bool operator==(const ResidueState&, const ResidueState&) = default;
    friend bool operator<(const ResidueState& l, const ResidueState& r)
    {
        if (l.first != r.first)
            return l.first < r.first;
        return l.residue < r.residue;
    }
};

struct Transition {
    std::size_t from;
    words::Letter prepended;
    std::size_t to;
    friend bool operator==(const Transition&, const Transition&) = default;
};

struct FreenessCertificate {
    ResidueMode mode = ResidueMode::vector;
    // Integral base vector; unused in matrix mode.
    std::array<exactlin::Integer, 3> base{};
    std::vector<ResidueState> states;
    // State of each one-letter word, indexed by letter.
    std::array<std::size_t, 4> initial{};
    std::vector<Transition> transitions;
};

struct CertificateFailure {
    // Shortest word (by BFS depth) whose residue vanishes.
    words::ReducedWord word;
    ResidueState state;
};

using BuildResult = std::variant<FreenessCertificate, CertificateFailure>;

// Throws DomainError for a zero or non-integral v0.
BuildResult build_certificate(const exactlin::Vec3Q& v0);
BuildResult build_matrix_certificate();

// Recomputes every residue and transition from the generator matrices; does
// not share code with the builders.
bool verify_certificate(const FreenessCertificate& c);

// Fixed candidate order; the first success wins.
const std::vector<exactlin::Vec3Q>& candidate_base_vectors();

struct CertificationOutcome {
    std::optional<FreenessCertificate> certificate;
    std::vector<std::pair<exactlin::Vec3Q, CertificateFailure>> rejected;
    bool used_matrix_fallback = false;
};

// Tries the candidates, then the matrix-residue fallback.
CertificationOutcome certify();

} // namespace paradoxkit::freeness
