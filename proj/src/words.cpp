#include "paradoxkit/words.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>

#include "paradoxkit/errors.hpp"

namespace paradoxkit::words {

char to_char(Letter x) noexcept
{
    static constexpr char chars[4] = {'a', 'b', 'A', 'B'};
    return chars[index(x)];
}

Letter letter_from_char(char c)
{
    switch (c) {
    case 'a': return Letter::a;
    case 'b': return Letter::b;
    case 'A': return Letter::a_inv;
    case 'B': return Letter::b_inv;
    default: throw ParseError(std::string("invalid letter '") + c + "' (expected one of a, b, A, B)");
    }
}

ReducedWord ReducedWord::reduce(std::span<const Letter> letters)
{
    ReducedWord out;
    out.code_.reserve(letters.size());
    for (Letter x : letters) {
        if (!out.code_.empty() && static_cast<Letter>(out.code_.back()) == inverse(x))
            out.code_.pop_back();
        else
            out.code_.push_back(static_cast<char>(x));
    }
    return out;
}

ReducedWord ReducedWord::reduce(std::initializer_list<Letter> letters)
{
    return reduce(std::span<const Letter>(letters.begin(), letters.size()));
}

ReducedWord ReducedWord::generator(Letter x)
{
    ReducedWord out;
    out.code_.push_back(static_cast<char>(x));
    return out;
}

ReducedWord ReducedWord::parse(std::string_view text)
{
    ReducedWord out;
    out.code_.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        Letter x = letter_from_char(text[i]);
        if (!out.code_.empty() && static_cast<Letter>(out.code_.back()) == inverse(x))
            throw ParseError("word '" + std::string(text) + "' is not reduced at position " + std::to_string(i));
        out.code_.push_back(static_cast<char>(x));
    }
    return out;
}

std::vector<Letter> ReducedWord::letters() const
{
    std::vector<Letter> out(code_.size());
    std::transform(code_.begin(), code_.end(), out.begin(), [](char c) { return static_cast<Letter>(c); });
    return out;
}

std::string ReducedWord::to_string() const
{
    std::string out(code_.size(), ' ');
    std::transform(code_.begin(), code_.end(), out.begin(),
                   [](char c) { return to_char(static_cast<Letter>(c)); });
    return out;
}

ReducedWord ReducedWord::extended(Letter x) const
{
    if (!empty() && back() == inverse(x))
        throw DomainError("extension would cancel");
    ReducedWord out = *this;
    out.code_.push_back(static_cast<char>(x));
    return out;
}

ReducedWord reduce(std::span<const Letter> letters) { return ReducedWord::reduce(letters); }

ReducedWord concat(const ReducedWord& w1, const ReducedWord& w2)
{
    // Only the junction can cancel since both inputs are reduced.
    std::size_t k = 0;
    const std::size_t limit = std::min(w1.length(), w2.length());
    while (k < limit && w1[w1.length() - 1 - k] == inverse(w2[k]))
        ++k;
    std::vector<Letter> letters;
    letters.reserve(w1.length() + w2.length() - 2 * k);
    for (std::size_t i = 0; i + k < w1.length(); ++i)
        letters.push_back(w1[i]);
    for (std::size_t i = k; i < w2.length(); ++i)
        letters.push_back(w2[i]);
    return ReducedWord::reduce(letters);
}

ReducedWord invert(const ReducedWord& w)
{
    std::vector<Letter> letters;
    letters.reserve(w.length());
    for (std::size_t i = w.length(); i-- > 0;)
        letters.push_back(inverse(w[i]));
    return ReducedWord::reduce(letters);
}

std::size_t ball_size(int n)
{
    if (n < 0)
        throw DomainError("ball radius must be nonnegative");
    std::size_t pow3 = 1;
    for (int i = 0; i < n; ++i)
        pow3 *= 3;
    return 1 + 2 * (pow3 - 1);
}

namespace {

void check_radius(int n, int cap)
{
    if (n < 0)
        throw DomainError("ball radius must be nonnegative");
    if (n > cap)
        throw ResourceError("ball radius " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

// The three reduced one-letter extensions of a word ending in `last`, in
// alphabet order.
std::array<Letter, 3> children_of(Letter last)
{
    std::array<Letter, 3> out{};
    int k = 0;
    for (Letter x : kAlphabet)
        if (x != inverse(last))
            out[k++] = x;
    return out;
}

} // namespace

std::vector<ReducedWord> ball(int n, int cap)
{
    check_radius(n, cap);
    std::vector<ReducedWord> out(ball_size(n));
    if (n == 0)
        return out;
    for (int i = 0; i < 4; ++i)
        out[1 + i] = ReducedWord::generator(kAlphabet[i]);

    // Parent order is lex order, so child block 3i..3i+2 keeps length-lex.
    std::size_t parent_begin = 1;
    std::size_t parent_count = 4;
    for (int level = 2; level <= n; ++level) {
        const std::size_t child_begin = parent_begin + parent_count;
        const auto parents = static_cast<std::int64_t>(parent_count);
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < parents; ++i) {
            const ReducedWord& parent = out[parent_begin + static_cast<std::size_t>(i)];
            const auto kids = children_of(parent.back());
            for (int j = 0; j < 3; ++j)
                out[child_begin + 3 * static_cast<std::size_t>(i) + j] = parent.extended(kids[j]);
        }
        parent_begin = child_begin;
        parent_count *= 3;
    }
    return out;
}

namespace reference {

namespace {
void extend(const ReducedWord& w, int remaining, std::vector<ReducedWord>& out)
{
    if (remaining == 0) {
        out.push_back(w);
        return;
    }
    for (Letter x : kAlphabet)
        if (w.empty() || x != inverse(w.back()))
            extend(w.extended(x), remaining - 1, out);
}
} // namespace

std::vector<ReducedWord> ball(int n, int cap)
{
    check_radius(n, cap);
    std::vector<ReducedWord> out;
    for (int len = 0; len <= n; ++len)
        extend(ReducedWord{}, len, out);
    return out;
}

} // namespace reference

const char* to_string(PrefixClass c) noexcept
{
    switch (c) {
    case PrefixClass::identity: return "identity";
    case PrefixClass::w_a: return "W(a)";
    case PrefixClass::w_b: return "W(b)";
    case PrefixClass::w_a_inv: return "W(A)";
    case PrefixClass::w_b_inv: return "W(B)";
    }
    return "?";
}

PrefixClass class_of(Letter x) noexcept { return static_cast<PrefixClass>(index(x) + 1); }

PrefixClass prefix_class(const ReducedWord& w) noexcept
{
    return w.empty() ? PrefixClass::identity : class_of(w.front());
}

bool starts_with(const ReducedWord& w, Letter x) noexcept { return !w.empty() && w.front() == x; }

namespace {

// Index of the first word in `words` violating `ok`, or SIZE_MAX.
template <class Pred>
std::size_t first_violation(const std::vector<ReducedWord>& words, Pred ok)
{
    std::size_t first = SIZE_MAX;
    const auto count = static_cast<std::int64_t>(words.size());
#pragma omp parallel for schedule(static) reduction(min : first)
    for (std::int64_t i = 0; i < count; ++i)
        if (!ok(words[static_cast<std::size_t>(i)]))
            first = std::min(first, static_cast<std::size_t>(i));
    return first;
}

} // namespace

F2ParadoxReport verify_f2_paradox(int n, const F2Decomposition& d, int cap)
{
    if (n < 1)
        throw DomainError("verify_f2_paradox needs depth >= 1");
    const auto words = ball(n, cap);

    F2ParadoxReport report;
    report.depth = n;
    for (const auto& w : words)
        ++report.class_counts[static_cast<std::size_t>(prefix_class(w))];

    auto record = [&](std::size_t bad) {
        if (bad != SIZE_MAX && (!report.counterexample || words[bad] < *report.counterexample))
            report.counterexample = words[bad];
    };

    // Each word lies in exactly one of {e}, W(a), W(b), W(A), W(B).
    {
        const auto bad = first_violation(words, [](const ReducedWord& h) {
            int hits = h.empty() ? 1 : 0;
            for (Letter x : kAlphabet)
                hits += starts_with(h, x) ? 1 : 0;
            return hits == 1;
        });
        report.checks.add("partition", bad == SIZE_MAX,
                          bad == SIZE_MAX ? "" : "word '" + words[bad].to_string() + "' not in exactly one class");
        record(bad);
    }

    // The four pieces W(kept1), W(moved1), W(kept2), W(moved2) must be
    // distinct classes, which makes them pairwise disjoint.
    {
        const std::array<Letter, 4> pieces = {d.first.kept, d.first.moved, d.second.kept, d.second.moved};
        bool distinct = true;
        std::string detail;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (pieces[i] == pieces[j]) {
                    distinct = false;
                    detail = std::string("piece W(") + to_char(pieces[i]) + ") used twice";
                }
        if (distinct) {
            const auto bad = first_violation(words, [&](const ReducedWord& h) {
                int hits = 0;
                for (Letter x : pieces)
                    hits += starts_with(h, x) ? 1 : 0;
                return hits <= 1;
            });
            distinct = bad == SIZE_MAX;
            if (!distinct)
                detail = "word '" + words[bad].to_string() + "' lies in two pieces";
        }
        report.checks.add("pieces_disjoint", distinct, detail);
    }

    auto covering = [&](const HalfDecomposition& half, const char* name) {
        const auto mover = ReducedWord::generator(half.mover);
        const auto mover_inv = ReducedWord::generator(inverse(half.mover));
        const auto bad = first_violation(words, [&](const ReducedWord& h) {
            if (starts_with(h, half.kept))
                return true;
            const auto pulled = concat(mover_inv, h);
            return starts_with(pulled, half.moved) && concat(mover, pulled) == h;
        });
        std::string detail;
        if (bad != SIZE_MAX)
            detail = "h = '" + words[bad].to_string() + "' is outside W(" + to_char(half.kept) + ") u " +
                     to_char(half.mover) + "W(" + to_char(half.moved) + ")";
        report.checks.add(name, bad == SIZE_MAX, detail);
        record(bad);
    };
    covering(d.first, "covering_first");
    covering(d.second, "covering_second");
    return report;
}

} // namespace paradoxkit::words
