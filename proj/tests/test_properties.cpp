// Randomized invariants with small hand-rolled generators. Seeds are fixed.

#include <doctest.h>

#include <random>

#include "paradoxkit/cauchy.hpp"
#include "paradoxkit/errors.hpp"
#include "paradoxkit/exactlin.hpp"
#include "paradoxkit/interval.hpp"
#include "paradoxkit/measures.hpp"
#include "paradoxkit/smp.hpp"
#include "paradoxkit/sphere.hpp"
#include "paradoxkit/words.hpp"

using namespace paradoxkit;
using exactlin::ratio;
using exactlin::Rational;
using words::ReducedWord;

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Random letters, then free reduction, so lengths vary.
ReducedWord random_word(Rng& rng, int max_letters)
{
    std::vector<words::Letter> raw(static_cast<std::size_t>(uniform(rng, 0, max_letters)));
    for (auto& l : raw)
        l = words::kAlphabet[static_cast<std::size_t>(uniform(rng, 0, 3))];
    return ReducedWord::reduce(raw);
}

Rational random_rational(Rng& rng, long num, long den)
{
    return ratio(uniform(rng, -num, num), uniform(rng, 1, den));
}

} // namespace

TEST_CASE("free group laws on random words")
{
    Rng rng(1);
    for (int i = 0; i < 500; ++i) {
        const auto u = random_word(rng, 12), v = random_word(rng, 12), w = random_word(rng, 12);
        CHECK(words::concat(words::concat(u, v), w) == words::concat(u, words::concat(v, w)));
        CHECK(words::concat(u, words::invert(u)).empty());
        CHECK(words::invert(words::concat(u, v)) == words::concat(words::invert(v), words::invert(u)));
        CHECK(words::concat(u, v).length() <= u.length() + v.length());
    }
}

TEST_CASE("eval_word is a homomorphism on random words")
{
    Rng rng(2);
    for (int i = 0; i < 100; ++i) {
        const auto u = random_word(rng, 8), v = random_word(rng, 8);
        const auto uv = exactlin::eval_word(words::concat(u, v));
        CHECK(uv == exactlin::eval_word(u) * exactlin::eval_word(v));
        CHECK(exactlin::eval_word(words::invert(u)) == exactlin::eval_word(u).transpose());
    }
}

TEST_CASE("each fixed direction is fixed by its witness word")
{
    const auto c = sphere::fixed_directions(4);
    for (const auto& [d, w] : c.directions) {
        const auto v = d.as_vector();
        CHECK(exactlin::eval_word(w) * v == v);
        CHECK(w.length() <= 4);
    }
}

TEST_CASE("density shift defect never exceeds 2/n")
{
    Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
        measures::DensityWindow w;
        w.n = uniform(rng, 1, 60);
        const long p = uniform(rng, 0, 100);
        long inside = 0, shifted = 0;
        for (long x = -1; x <= w.n; ++x)
            if (uniform(rng, 0, 99) < p) {
                w.members.push_back(x);
                inside += (x >= 0 && x < w.n);
                shifted += (x >= -1 && x < w.n - 1);
            }
        // Independent count: A+1 meets [0, n) exactly where A meets [-1, n-1).
        CHECK(measures::density_measure(w) == ratio(inside, w.n));
        const Rational d = measures::shift_defect(w);
        CHECK(d == abs(ratio(shifted - inside, w.n)));
        CHECK(d <= ratio(2, w.n));
    }
}

TEST_CASE("ergodic averages stay within 2 sup|f| / n")
{
    Rng rng(4);
    for (int i = 0; i < 200; ++i) {
        measures::StepFunction f;
        const long pieces = uniform(rng, 1, 5);
        std::vector<long> cuts;
        const long den = 60;
        for (long k = 1; k < pieces; ++k)
            cuts.push_back(uniform(rng, 1, den - 1));
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        f.breaks.push_back(Rational(0));
        for (long c : cuts)
            f.breaks.push_back(ratio(c, den));
        for (std::size_t k = 0; k < f.breaks.size(); ++k)
            f.values.push_back(random_rational(rng, 5, 4));
        const Rational alpha = ratio(uniform(rng, 0, 96), 97), x0 = ratio(uniform(rng, 0, 12), 13);
        const long n = uniform(rng, 1, 40);
        const auto r = measures::ergodic_average(alpha, x0, f, n);

        // Direct orbit sum.
        Rational x = x0, sum = 0;
        for (long k = 0; k < n; ++k) {
            sum += f(x);
            x += alpha;
            if (x >= 1)
                x -= 1;
        }
        CHECK(r.value == sum / n);
        CHECK(r.within_bound());
        CHECK(r.bound == 2 * f.sup_abs() / n);
    }
}

TEST_CASE("Cauchy identities on 1000 random pairs")
{
    for (std::size_t k = 1; k <= 6; ++k)
        CHECK(cauchy::verify_cauchy(cauchy::demo_model(k), 1000, k).passed());
}

TEST_CASE("sampled additivity audit at 14 points")
{
    Rng rng(5);
    for (int i = 0; i < 5; ++i) {
        measures::PointMassMeasure mu;
        long total = 0;
        std::vector<long> w(14);
        for (auto& x : w)
            total += x = uniform(rng, 0, 9);
        if (total == 0)
            continue;
        for (long x : w)
            mu.mass.push_back(ratio(x, total));
        CHECK(measures::audit_measure(mu, static_cast<std::uint64_t>(i)).all_passed());
    }
}

TEST_CASE("sigma checks on random free instances")
{
    Rng rng(6);
    for (int i = 0; i < 10; ++i) {
        const auto inst = measures::random_free_instance(rng);
        CHECK(inst.group.order() <= 6);
        CHECK(inst.action.points <= 24);
        const auto r = measures::sigma_report(inst.group, inst.action, inst.mu);
        CHECK(r.passed());
        Rational total = 0;
        for (const auto& s : r.sigma_singletons)
            total += s;
        CHECK(total == 1);
    }
}

TEST_CASE("enclosures at low precision contain the high-precision ones")
{
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rational x = random_rational(rng, 1000, 97);
        const interval::Interval lo(x, 53), hi(x, 512);
        const auto s_lo = sin(lo), s_hi = sin(hi), c_lo = cos(lo), c_hi = cos(hi);
        CHECK(s_lo.lower() <= s_hi.lower());
        CHECK(s_lo.upper() >= s_hi.upper());
        CHECK(c_lo.lower() <= c_hi.lower());
        CHECK(c_lo.upper() >= c_hi.upper());
    }
}

TEST_CASE("smp maps invert times_x and plus_one on random polynomials")
{
    Rng rng(8);
    for (int i = 0; i < 300; ++i) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(uniform(rng, 0, 8)));
        for (auto& x : c)
            x = static_cast<std::uint64_t>(uniform(rng, 0, 5));
        const paradox::NNPoly p(c);
        CHECK(paradox::smp_classify(paradox::times_x(p)) == paradox::SmpPart::a);
        CHECK(paradox::smp_classify(paradox::plus_one(p)) == paradox::SmpPart::b);
        CHECK(paradox::smp_g(paradox::times_x(p)) == p);
        CHECK(paradox::smp_h(paradox::plus_one(p)) == p);
    }
}
