#include "paradoxkit/exactlin.hpp"

#include <utility>

#include "paradoxkit/errors.hpp"

namespace paradoxkit::exactlin {

using words::Letter;

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational parse_rational(std::string_view text)
{
    const std::string s(text);
    auto digits = [](std::string_view part, bool allow_sign) {
        if (part.empty())
            return false;
        std::size_t i = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+'))
            i = 1;
        if (i == part.size())
            return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                return false;
        return true;
    };
    const auto slash = s.find('/');
    const std::string_view num = std::string_view(s).substr(0, slash);
    const std::string_view den = slash == std::string::npos ? std::string_view("1") : std::string_view(s).substr(slash + 1);
    if (!digits(num, true) || !digits(den, false))
        throw ParseError("malformed rational '" + s + "'");
    Integer n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
    Integer d(std::string(den), 10);
    if (d == 0)
        throw ParseError("zero denominator in '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

bool Vec3Q::is_integral() const
{
    for (const auto& x : v)
        if (x.get_den() != 1)
            return false;
    return true;
}

Mat3Q Mat3Q::identity() { return diagonal(1, 1, 1); }

Mat3Q Mat3Q::diagonal(const Rational& x, const Rational& y, const Rational& z)
{
    Mat3Q m;
    m(0, 0) = x;
    m(1, 1) = y;
    m(2, 2) = z;
    return m;
}

Mat3Q Mat3Q::from_integers(const std::array<long, 9>& num, long den)
{
    Mat3Q m;
    for (std::size_t i = 0; i < 9; ++i) {
        m.e_[i] = Rational(num[i], den);
        m.e_[i].canonicalize();
    }
    return m;
}

Mat3Q Mat3Q::transpose() const
{
    Mat3Q t;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Rational Mat3Q::determinant() const
{
    const auto& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Mat3Q Mat3Q::inverse() const
{
    const Rational det = determinant();
    if (det == 0)
        throw DomainError("singular matrix has no inverse");
    const auto& m = *this;
    Mat3Q adj;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            // Cofactor of (c, r) gives the adjugate entry (r, c).
            const int r0 = (c + 1) % 3, r1 = (c + 2) % 3;
            const int c0 = (r + 1) % 3, c1 = (r + 2) % 3;
            adj(r, c) = (m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0)) / det;
        }
    return adj;
}

Integer Mat3Q::common_denominator() const
{
    Integer l = 1;
    for (const auto& x : e_)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

Mat3Q operator*(const Mat3Q& l, const Mat3Q& r)
{
    Mat3Q out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out(i, j) = l(i, 0) * r(0, j) + l(i, 1) * r(1, j) + l(i, 2) * r(2, j);
    return out;
}

Mat3Q operator-(const Mat3Q& l, const Mat3Q& r)
{
    Mat3Q out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out(i, j) = l(i, j) - r(i, j);
    return out;
}

Vec3Q operator*(const Mat3Q& m, const Vec3Q& v)
{
    Vec3Q out;
    for (int i = 0; i < 3; ++i)
        out[i] = m(i, 0) * v[0] + m(i, 1) * v[1] + m(i, 2) * v[2];
    return out;
}

ProjectiveDirection::ProjectiveDirection(Integer a, Integer b, Integer c) : c_{std::move(a), std::move(b), std::move(c)}
{
    Integer g = 0;
    for (const auto& x : c_)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0)
        throw DegenerateInputError("zero vector has no direction");
    for (auto& x : c_)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    for (const auto& x : c_) {
        if (x == 0)
            continue;
        if (x < 0)
            for (auto& y : c_)
                y = -y;
        break;
    }
}

ProjectiveDirection ProjectiveDirection::of(const Vec3Q& v)
{
    Integer l = 1;
    for (int i = 0; i < 3; ++i)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v[i].get_den_mpz_t());
    std::array<Integer, 3> ints;
    for (int i = 0; i < 3; ++i) {
        Rational scaled = v[i] * l;
        ints[static_cast<std::size_t>(i)] = scaled.get_num();
    }
    return ProjectiveDirection(ints[0], ints[1], ints[2]);
}

std::string ProjectiveDirection::to_string() const
{
    return "[" + c_[0].get_str() + ":" + c_[1].get_str() + ":" + c_[2].get_str() + "]";
}

Mat3Q generator_matrix(Letter x)
{
    static const Mat3Q a = Mat3Q::from_integers({6, 2, 3, 2, 3, -6, -3, 6, 2}, 7);
    static const Mat3Q b = Mat3Q::from_integers({2, -6, 3, 6, 3, 2, -3, 2, 6}, 7);
    switch (x) {
    case Letter::a: return a;
    case Letter::b: return b;
    case Letter::a_inv: return a.transpose();
    case Letter::b_inv: return b.transpose();
    }
    return a;
}

GeneratorPair::GeneratorPair(Mat3Q a, Mat3Q b)
{
    orthogonal_ = a * a.transpose() == Mat3Q::identity() && b * b.transpose() == Mat3Q::identity();
    m_[static_cast<std::size_t>(words::index(Letter::a_inv))] = a.inverse();
    m_[static_cast<std::size_t>(words::index(Letter::b_inv))] = b.inverse();
    m_[static_cast<std::size_t>(words::index(Letter::a))] = std::move(a);
    m_[static_cast<std::size_t>(words::index(Letter::b))] = std::move(b);
}

const GeneratorPair& GeneratorPair::standard()
{
    static const GeneratorPair pair(generator_matrix(Letter::a), generator_matrix(Letter::b));
    return pair;
}

Mat3Q eval_word(const words::ReducedWord& w, const GeneratorPair& gens)
{
    Mat3Q m = Mat3Q::identity();
    for (std::size_t i = 0; i < w.length(); ++i)
        m = m * gens.matrix(w[i]);
    return m;
}

bool is_special_orthogonal(const Mat3Q& m)
{
    return m * m.transpose() == Mat3Q::identity() && m.determinant() == 1;
}

namespace {

struct Echelon {
    IntMat3<Integer> a;
    int rank = 0;
    std::array<int, 3> pivot_col{-1, -1, -1};
};

// Fraction-free (Bareiss) row echelon form. Every intermediate entry is a
// minor of the input, so the division by the previous pivot is exact.
Echelon echelon(IntMat3<Integer> a)
{
    Echelon out;
    Integer prev = 1;
    int r = 0;
    for (int c = 0; c < 3 && r < 3; ++c) {
        int p = r;
        while (p < 3 && a[static_cast<std::size_t>(3 * p + c)] == 0)
            ++p;
        if (p == 3)
            continue;
        if (p != r)
            for (int j = 0; j < 3; ++j)
                std::swap(a[static_cast<std::size_t>(3 * p + j)], a[static_cast<std::size_t>(3 * r + j)]);
        const Integer pivot = a[static_cast<std::size_t>(3 * r + c)];
        for (int i = r + 1; i < 3; ++i) {
            const Integer lead = a[static_cast<std::size_t>(3 * i + c)];
            for (int j = c + 1; j < 3; ++j) {
                auto& x = a[static_cast<std::size_t>(3 * i + j)];
                Integer num = pivot * x - lead * a[static_cast<std::size_t>(3 * r + j)];
                if (!mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()))
                    throw InvariantViolation("fraction-free elimination lost exactness");
                mpz_divexact(x.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[static_cast<std::size_t>(3 * i + c)] = 0;
        }
        prev = pivot;
        out.pivot_col[static_cast<std::size_t>(r)] = c;
        ++r;
    }
    out.a = std::move(a);
    out.rank = r;
    return out;
}

IntMat3<Integer> cleared(const Mat3Q& m)
{
    const Integer den = m.common_denominator();
    IntMat3<Integer> out;
    for (std::size_t i = 0; i < 9; ++i) {
        Rational s = m.entries()[i] * den;
        out[i] = s.get_num();
    }
    return out;
}

} // namespace

int rank(const Mat3Q& m) { return echelon(cleared(m)).rank; }

ProjectiveDirection axis(const Mat3Q& m)
{
    if (m == Mat3Q::identity())
        throw DegenerateInputError("identity fixes every direction");
    const Echelon e = echelon(cleared(m - Mat3Q::identity()));
    if (e.rank != 2)
        throw InvariantViolation("fixed space of dimension " + std::to_string(3 - e.rank) + ", expected 1");

    int free_col = 0 + 1 + 2 - e.pivot_col[0] - e.pivot_col[1];
    std::array<Rational, 3> x;
    x[static_cast<std::size_t>(free_col)] = 1;
    for (int r = 1; r >= 0; --r) {
        const int p = e.pivot_col[static_cast<std::size_t>(r)];
        Rational s = 0;
        for (int j = p + 1; j < 3; ++j)
            s += Rational(e.a[static_cast<std::size_t>(3 * r + j)]) * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(p)] = -s / Rational(e.a[static_cast<std::size_t>(3 * r + p)]);
    }
    return ProjectiveDirection::of(Vec3Q(x[0], x[1], x[2]));
}

ScaledGenerators::ScaledGenerators(const GeneratorPair& gens) : orthogonal_(gens.orthogonal())
{
    den_ = 1;
    for (Letter x : words::kAlphabet) {
        const Integer d = gens.matrix(x).common_denominator();
        mpz_lcm(den_.get_mpz_t(), den_.get_mpz_t(), d.get_mpz_t());
    }
    for (Letter x : words::kAlphabet) {
        const auto i = static_cast<std::size_t>(words::index(x));
        for (std::size_t k = 0; k < 9; ++k) {
            Rational s = gens.matrix(x).entries()[k] * den_;
            big_[i][k] = s.get_num();
            if (big_[i][k].fits_slong_p())
                small_[i][k] = big_[i][k].get_si();
        }
    }
}

bool ScaledGenerators::fits_int64(int depth) const
{
    if (!orthogonal_)
        return false;
    // Entries of den^k * (orthogonal) are bounded by den^k; one more product
    // of three terms stays below 3 * den^(k+1).
    Integer bound;
    mpz_pow_ui(bound.get_mpz_t(), den_.get_mpz_t(), static_cast<unsigned long>(depth + 1));
    bound *= 3;
    Integer limit;
    mpz_ui_pow_ui(limit.get_mpz_t(), 2, 62);
    return bound < limit;
}

IntMat3<Integer> eval_word_scaled(const words::ReducedWord& w, const ScaledGenerators& gens)
{
    IntMat3<Integer> m{1, 0, 0, 0, 1, 0, 0, 0, 1};
    for (std::size_t i = 0; i < w.length(); ++i)
        m = multiply(m, gens.scaled(w[i]));
    return m;
}

} // namespace paradoxkit::exactlin
