#include "paradoxkit/cauchy.hpp"

#include <random>

#include "paradoxkit/errors.hpp"

namespace paradoxkit::cauchy {

HamelModel::HamelModel(std::vector<std::string> labels, std::vector<Rational> images)
    : labels_(std::move(labels)), images_(std::move(images))
{
    if (labels_.empty())
        throw DomainError("a Hamel model needs rank >= 1");
    if (labels_.size() != images_.size())
        throw DomainError("one image per basis label is required");
}

Coords HamelModel::basis_vector(std::size_t i) const
{
    Coords v(rank(), Rational(0));
    v.at(i) = 1;
    return v;
}

Rational eval(const HamelModel& f, const Coords& x)
{
    if (x.size() != f.rank())
        throw DomainError("coordinate vector has length " + std::to_string(x.size()) + ", rank is " +
                          std::to_string(f.rank()));
    Rational sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        sum += x[i] * f.images()[i];
    return sum;
}

namespace {

Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
    const long p = num(rng), q = den(rng);
    return exactlin::ratio(p, q);
}

Coords random_coords(std::mt19937_64& rng, std::size_t k)
{
    Coords x;
    for (std::size_t i = 0; i < k; ++i)
        x.push_back(random_rational(rng));
    return x;
}

Coords scaled(const Rational& q, const Coords& x)
{
    Coords out;
    for (const auto& c : x)
        out.push_back(q * c);
    return out;
}

std::string show(const Coords& x)
{
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i)
        s += (i ? ", " : "") + exactlin::to_string(x[i]);
    return s + ")";
}

} // namespace

CauchyReport verify_cauchy(const HamelModel& f, int trials, std::uint64_t seed, const Evaluator& evaluate)
{
    if (trials < 1)
        throw DomainError("verify_cauchy needs at least one trial");
    std::mt19937_64 rng(seed);
    const Rational fixed_q(-3, 7);
    std::optional<std::string> bad_add, bad_hom;
    for (int t = 0; t < trials; ++t) {
        const Coords x = random_coords(rng, f.rank()), y = random_coords(rng, f.rank());
        Coords sum;
        for (std::size_t i = 0; i < x.size(); ++i)
            sum.push_back(x[i] + y[i]);
        if (!bad_add && evaluate(f, sum) != evaluate(f, x) + evaluate(f, y))
            bad_add = "x = " + show(x) + ", y = " + show(y);
        for (const Rational& q : {random_rational(rng), fixed_q})
            if (!bad_hom && evaluate(f, scaled(q, x)) != q * evaluate(f, x))
                bad_hom = "q = " + exactlin::to_string(q) + ", x = " + show(x);
    }
    CauchyReport out;
    out.trials = trials;
    out.checks.add("additivity", !bad_add, bad_add.value_or(std::to_string(trials) + " random pairs"));
    out.checks.add("homogeneity", !bad_hom, bad_hom.value_or("random q and q = -3/7"));
    return out;
}

std::optional<NonproportionalityWitness> nonproportionality_witness(const HamelModel& f)
{
    const std::size_t k = f.rank();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            NonproportionalityWitness w{f.basis_vector(i), f.basis_vector(j), {}};
            const Rational fx = eval(f, w.x), fy = eval(f, w.y);
            bool nonzero = false;
            for (std::size_t c = 0; c < k; ++c) {
                w.cross.push_back(fx * w.y[c] - fy * w.x[c]);
                nonzero = nonzero || w.cross.back() != 0;
            }
            if (nonzero)
                return w;
        }
    return std::nullopt;
}

HamelModel demo_model(std::size_t rank)
{
    static const char* names[] = {"1", "sqrt2", "sqrt3", "pi", "e", "sqrt5", "log2", "sqrt7"};
    std::vector<std::string> labels;
    std::vector<Rational> images;
    for (std::size_t i = 0; i < rank; ++i) {
        labels.push_back(i < std::size(names) ? names[i] : "x" + std::to_string(i));
        images.push_back(Rational(static_cast<long>(i)));
    }
    return HamelModel(std::move(labels), std::move(images));
}

} // namespace paradoxkit::cauchy
