#pragma once

// Free group F2 on generators a, b: reduced words, the length-lex ball
// enumeration and the W(x) prefix partition used by the paradoxical
// decomposition F2 = W(a) u aW(a^-1) = W(b) u bW(b^-1).

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paradoxkit/report.hpp"

namespace paradoxkit::words {

// Enumeration order is a < b < a_inv < b_inv.
enum class Letter : std::uint8_t { a = 0, b = 1, a_inv = 2, b_inv = 3 };

inline constexpr std::array<Letter, 4> kAlphabet = {Letter::a, Letter::b, Letter::a_inv, Letter::b_inv};

constexpr Letter inverse(Letter x) noexcept
{
    return static_cast<Letter>((static_cast<unsigned>(x) + 2u) & 3u);
}

constexpr int index(Letter x) noexcept { return static_cast<int>(x); }

// 'a', 'b', 'A' (= a^-1), 'B' (= b^-1).
char to_char(Letter x) noexcept;
Letter letter_from_char(char c); // throws ParseError

// An element of F2 in its unique reduced form. Equality is letter-sequence
// equality; the empty word is the identity e.
class ReducedWord {
public:
    ReducedWord() = default;

    // Freely reduces an arbitrary letter sequence.
    static ReducedWord reduce(std::span<const Letter> letters);
    static ReducedWord reduce(std::initializer_list<Letter> letters);
    static ReducedWord generator(Letter x);
    // Parses the {a,b,A,B} text form; the input must already be reduced.
    static ReducedWord parse(std::string_view text);

    std::size_t length() const noexcept { return code_.size(); }
    bool empty() const noexcept { return code_.empty(); }
    Letter operator[](std::size_t i) const noexcept { return static_cast<Letter>(code_[i]); }
    Letter front() const noexcept { return (*this)[0]; }
    Letter back() const noexcept { return (*this)[length() - 1]; }
    std::vector<Letter> letters() const;

    std::string to_string() const;

    // Appends x; requires x != inverse(back()).
    ReducedWord extended(Letter x) const;

    friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
    // Length-lexicographic order.
    friend bool operator<(const ReducedWord& l, const ReducedWord& r) noexcept
    {
        if (l.length() != r.length())
            return l.length() < r.length();
        return l.code_ < r.code_;
    }

    std::size_t hash() const noexcept { return std::hash<std::string>{}(code_); }

private:
    // One byte per letter holding the Letter value; short words stay inline.
    std::string code_;
};

ReducedWord reduce(std::span<const Letter> letters);
ReducedWord concat(const ReducedWord& w1, const ReducedWord& w2);
ReducedWord invert(const ReducedWord& w);

inline constexpr int kDefaultBallCap = 14;

// |{w : |w| <= n}| = 1 + 2(3^n - 1).
std::size_t ball_size(int n);

// All reduced words of length <= n in length-lex order. Levels are
// generated in parallel; the result does not depend on thread count.
std::vector<ReducedWord> ball(int n, int cap = kDefaultBallCap);

namespace reference {
// Straight recursive enumeration, kept as an oracle for ball().
std::vector<ReducedWord> ball(int n, int cap = kDefaultBallCap);
}

enum class PrefixClass : std::uint8_t { identity, w_a, w_b, w_a_inv, w_b_inv };

const char* to_string(PrefixClass c) noexcept;
PrefixClass prefix_class(const ReducedWord& w) noexcept;
PrefixClass class_of(Letter x) noexcept;
// Membership in W(x) = {w : w starts with x}.
bool starts_with(const ReducedWord& w, Letter x) noexcept;

// One half F2 = W(kept) u mover * W(moved) of a two-piece decomposition.
struct HalfDecomposition {
    Letter kept;
    Letter mover;
    Letter moved;
};

struct F2Decomposition {
    HalfDecomposition first{Letter::a, Letter::a, Letter::a_inv};
    HalfDecomposition second{Letter::b, Letter::b, Letter::b_inv};
};

struct F2ParadoxReport {
    int depth = 0;
    // Indexed by PrefixClass.
    std::array<std::size_t, 5> class_counts{};
    CheckList checks;
    // First word (length-lex) that broke a covering identity, if any.
    std::optional<ReducedWord> counterexample;

    bool passed() const { return checks.all_passed(); }
};

F2ParadoxReport verify_f2_paradox(int n, const F2Decomposition& decomposition = {},
                                  int cap = kDefaultBallCap);

} // namespace paradoxkit::words

template <>
struct std::hash<paradoxkit::words::ReducedWord> {
    std::size_t operator()(const paradoxkit::words::ReducedWord& w) const noexcept { return w.hash(); }
};
