#include "paradoxkit/freeness.hpp"

#include <deque>
#include <map>
#include <set>

#include "paradoxkit/errors.hpp"

namespace paradoxkit::freeness {

using exactlin::Integer;
using exactlin::IntMat3;
using exactlin::Rational;
using words::Letter;
using words::ReducedWord;

namespace {

void check_depth(int depth, int cap)
{
    if (depth < 1)
        throw DomainError("exhaustive check needs depth >= 1");
    if (depth > cap)
        throw ResourceError("depth " + std::to_string(depth) + " exceeds ball cap " + std::to_string(cap));
}

void keep_first(std::optional<ReducedWord>& best, const ReducedWord& w)
{
    if (!best || w < *best)
        best = w;
}

template <class T>
bool is_scaled_identity(const IntMat3<T>& m, const T& s)
{
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (m[static_cast<std::size_t>(3 * i + j)] != (i == j ? s : T(0)))
                return false;
    return true;
}

// Depth-first walk below one prefix. Right-multiplying by the next letter's
// matrix extends the product by one letter.
template <class T>
class Walker {
public:
    Walker(const std::array<IntMat3<T>, 4>& gens, const std::vector<T>& powers, int depth)
        : gens_(gens), powers_(powers), depth_(depth)
    {
    }

    void visit(const ReducedWord& w, const IntMat3<T>& m)
    {
        ++evaluated;
        const std::size_t len = w.length();
        if (is_scaled_identity(m, powers_[len])) {
            keep_first(best, w);
            return;
        }
        if (static_cast<int>(len) == depth_ || (best && best->length() <= len))
            return;
        for (Letter x : words::kAlphabet)
            if (x != words::inverse(w.back()))
                visit(w.extended(x), exactlin::multiply(m, gens_[static_cast<std::size_t>(words::index(x))]));
    }

    std::optional<ReducedWord> best;
    std::size_t evaluated = 0;

private:
    const std::array<IntMat3<T>, 4>& gens_;
    const std::vector<T>& powers_;
    int depth_;
};

template <class T>
FreenessVerdict search(const std::array<IntMat3<T>, 4>& gens, const T& den, int depth)
{
    std::vector<T> powers(static_cast<std::size_t>(depth) + 1);
    powers[0] = 1;
    for (std::size_t k = 1; k < powers.size(); ++k)
        powers[k] = powers[k - 1] * den;

    // One task per reduced word of length 2; length-1 words are checked here.
    FreenessVerdict verdict;
    verdict.depth = depth;
    std::vector<ReducedWord> roots;
    for (Letter x : words::kAlphabet) {
        const auto w = ReducedWord::generator(x);
        ++verdict.words_evaluated;
        if (is_scaled_identity(gens[static_cast<std::size_t>(words::index(x))], powers[1]))
            keep_first(verdict.counterexample, w);
        else if (depth >= 2)
            for (Letter y : words::kAlphabet)
                if (y != words::inverse(x))
                    roots.push_back(w.extended(y));
    }

    std::vector<Walker<T>> walkers;
    walkers.reserve(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i)
        walkers.emplace_back(gens, powers, depth);
    const auto tasks = static_cast<std::int64_t>(roots.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < tasks; ++i) {
        const auto& w = roots[static_cast<std::size_t>(i)];
        const auto m = exactlin::multiply(gens[static_cast<std::size_t>(words::index(w[0]))],
                                          gens[static_cast<std::size_t>(words::index(w[1]))]);
        walkers[static_cast<std::size_t>(i)].visit(w, m);
    }
    for (const auto& walker : walkers) {
        verdict.words_evaluated += walker.evaluated;
        if (walker.best)
            keep_first(verdict.counterexample, *walker.best);
    }
    verdict.certified = !verdict.counterexample;
    return verdict;
}

} // namespace

FreenessVerdict exhaustive_check(int depth, const exactlin::GeneratorPair& gens, int cap)
{
    check_depth(depth, cap);
    const exactlin::ScaledGenerators scaled(gens);
    if (scaled.fits_int64(depth)) {
        std::array<IntMat3<std::int64_t>, 4> g;
        for (Letter x : words::kAlphabet)
            g[static_cast<std::size_t>(words::index(x))] = scaled.scaled64(x);
        return search<std::int64_t>(g, scaled.denominator().get_si(), depth);
    }
    std::array<IntMat3<Integer>, 4> g;
    for (Letter x : words::kAlphabet)
        g[static_cast<std::size_t>(words::index(x))] = scaled.scaled(x);
    return search<Integer>(g, scaled.denominator(), depth);
}

namespace reference {

FreenessVerdict exhaustive_check(int depth, const exactlin::GeneratorPair& gens, int cap)
{
    check_depth(depth, cap);
    FreenessVerdict verdict;
    verdict.depth = depth;
    const auto identity = exactlin::Mat3Q::identity();
    for (const auto& w : words::ball(depth, cap)) {
        if (w.empty())
            continue;
        ++verdict.words_evaluated;
        if (exactlin::eval_word(w, gens) == identity) {
            verdict.counterexample = w; // ball() is length-lex ordered
            break;
        }
    }
    verdict.certified = !verdict.counterexample;
    return verdict;
}

} // namespace reference

const char* to_string(ResidueMode m) noexcept { return m == ResidueMode::vector ? "vector" : "matrix"; }

bool ResidueState::is_zero() const
{
    for (int r : residue)
        if (r != 0)
            return false;
    return true;
}

namespace {

using ResidueMatrix = std::array<int, 9>;

int mod7(const Integer& x)
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), kModulus);
    return static_cast<int>(r.get_si());
}

// 7 * generator_matrix(x) reduced mod 7.
std::array<ResidueMatrix, 4> builder_matrices()
{
    std::array<ResidueMatrix, 4> out{};
    for (Letter x : words::kAlphabet) {
        const auto m = exactlin::generator_matrix(x);
        for (std::size_t k = 0; k < 9; ++k) {
            Rational s = m.entries()[k] * kModulus;
            out[static_cast<std::size_t>(words::index(x))][k] = mod7(s.get_num());
        }
    }
    return out;
}

std::vector<int> apply_mod(const ResidueMatrix& m, const std::vector<int>& r)
{
    const std::size_t cols = r.size() / 3;
    std::vector<int> out(r.size());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            int s = 0;
            for (std::size_t k = 0; k < 3; ++k)
                s += m[3 * i + k] * r[k * cols + j];
            out[i * cols + j] = s % kModulus;
        }
    return out;
}

BuildResult run_closure(ResidueMode mode, const std::array<Integer, 3>& base,
                        const std::vector<int>& seed /* residue of the empty word */)
{
    const auto mats = builder_matrices();
    FreenessCertificate cert;
    cert.mode = mode;
    cert.base = base;
    std::map<ResidueState, std::size_t> index;
    std::vector<ReducedWord> representative;
    std::deque<std::size_t> queue;

    auto intern = [&](ResidueState s, const ReducedWord& w) -> std::optional<std::size_t> {
        if (s.is_zero())
            return std::nullopt;
        auto [it, inserted] = index.try_emplace(s, cert.states.size());
        if (inserted) {
            cert.states.push_back(std::move(s));
            representative.push_back(w);
            queue.push_back(it->second);
        }
        return it->second;
    };

    for (Letter x : words::kAlphabet) {
        const auto w = ReducedWord::generator(x);
        ResidueState s{x, apply_mod(mats[static_cast<std::size_t>(words::index(x))], seed)};
        const auto id = intern(s, w);
        if (!id)
            return CertificateFailure{w, s};
        cert.initial[static_cast<std::size_t>(words::index(x))] = *id;
    }
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        for (Letter y : words::kAlphabet) {
            if (y == words::inverse(cert.states[i].first))
                continue;
            const auto w = words::concat(ReducedWord::generator(y), representative[i]);
            ResidueState s{y, apply_mod(mats[static_cast<std::size_t>(words::index(y))], cert.states[i].residue)};
            const auto id = intern(s, w);
            if (!id)
                return CertificateFailure{w, s};
            cert.transitions.push_back({i, y, *id});
        }
    }
    return cert;
}

} // namespace

BuildResult build_certificate(const exactlin::Vec3Q& v0)
{
    if (v0.is_zero())
        throw DomainError("base vector must be nonzero");
    if (!v0.is_integral())
        throw DomainError("base vector must have integer entries");
    std::array<Integer, 3> base;
    std::vector<int> seed(3);
    for (int i = 0; i < 3; ++i) {
        base[static_cast<std::size_t>(i)] = v0[i].get_num();
        seed[static_cast<std::size_t>(i)] = mod7(v0[i].get_num());
    }
    return run_closure(ResidueMode::vector, base, seed);
}

BuildResult build_matrix_certificate()
{
    return run_closure(ResidueMode::matrix, {0, 0, 0}, {1, 0, 0, 0, 1, 0, 0, 0, 1});
}

bool verify_certificate(const FreenessCertificate& c)
{
    const std::size_t width = c.mode == ResidueMode::vector ? 3 : 9;
    const std::size_t cols = width / 3;

    // Generator residues straight from the rational entries: 7 * p/7 = p.
    std::array<std::array<long, 9>, 4> gen{};
    for (Letter x : words::kAlphabet) {
        const auto m = exactlin::generator_matrix(x);
        for (std::size_t k = 0; k < 9; ++k) {
            const Rational scaled = m.entries()[k] * 7;
            if (scaled.get_den() != 1)
                return false;
            long v = scaled.get_num().get_si() % 7;
            gen[static_cast<std::size_t>(words::index(x))][k] = v < 0 ? v + 7 : v;
        }
    }
    auto times = [&](Letter x, const std::vector<long>& r) {
        const auto& g = gen[static_cast<std::size_t>(words::index(x))];
        std::vector<long> out(width, 0);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                long s = 0;
                for (std::size_t k = 0; k < 3; ++k)
                    s += g[3 * i + k] * r[k * cols + j];
                out[i * cols + j] = s % 7;
            }
        return out;
    };
    auto matches = [&](const ResidueState& s, Letter first, const std::vector<long>& r) {
        if (s.first != first || s.residue.size() != width)
            return false;
        for (std::size_t k = 0; k < width; ++k)
            if (s.residue[k] != r[k])
                return false;
        return true;
    };

    std::set<ResidueState> seen;
    for (const auto& s : c.states) {
        if (s.residue.size() != width || !seen.insert(s).second)
            return false;
        bool nonzero = false;
        for (int r : s.residue) {
            if (r < 0 || r >= 7)
                return false;
            nonzero = nonzero || r != 0;
        }
        if (!nonzero)
            return false;
    }

    std::vector<long> seed(width, 0);
    if (c.mode == ResidueMode::vector) {
        bool nonzero_base = false;
        for (std::size_t i = 0; i < 3; ++i) {
            Integer r;
            mpz_fdiv_r_ui(r.get_mpz_t(), c.base[i].get_mpz_t(), 7);
            seed[i] = r.get_si();
            nonzero_base = nonzero_base || c.base[i] != 0;
        }
        if (!nonzero_base)
            return false;
    } else {
        seed = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    }
    for (Letter x : words::kAlphabet) {
        const std::size_t id = c.initial[static_cast<std::size_t>(words::index(x))];
        if (id >= c.states.size() || !matches(c.states[id], x, times(x, seed)))
            return false;
    }

    // Every state needs exactly one correct transition per allowed letter.
    std::vector<std::array<int, 4>> outgoing(c.states.size(), std::array<int, 4>{});
    for (const auto& t : c.transitions) {
        if (t.from >= c.states.size() || t.to >= c.states.size())
            return false;
        const auto& src = c.states[t.from];
        if (t.prepended == words::inverse(src.first))
            return false;
        std::vector<long> r(src.residue.begin(), src.residue.end());
        if (!matches(c.states[t.to], t.prepended, times(t.prepended, r)))
            return false;
        ++outgoing[t.from][static_cast<std::size_t>(words::index(t.prepended))];
    }
    for (std::size_t i = 0; i < c.states.size(); ++i)
        for (Letter y : words::kAlphabet) {
            const int expected = y == words::inverse(c.states[i].first) ? 0 : 1;
            if (outgoing[i][static_cast<std::size_t>(words::index(y))] != expected)
                return false;
        }
    return true;
}

const std::vector<exactlin::Vec3Q>& candidate_base_vectors()
{
    static const std::vector<exactlin::Vec3Q> list = {
        {0, 1, 0}, {1, 0, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1},
    };
    return list;
}

CertificationOutcome certify()
{
    CertificationOutcome out;
    for (const auto& v0 : candidate_base_vectors()) {
        auto result = build_certificate(v0);
        if (auto* cert = std::get_if<FreenessCertificate>(&result)) {
            out.certificate = std::move(*cert);
            return out;
        }
        out.rejected.emplace_back(v0, std::get<CertificateFailure>(result));
    }
    auto result = build_matrix_certificate();
    if (auto* cert = std::get_if<FreenessCertificate>(&result)) {
        out.certificate = std::move(*cert);
        out.used_matrix_fallback = true;
    }
    return out;
}

} // namespace paradoxkit::freeness
