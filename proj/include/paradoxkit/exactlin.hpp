#pragma once

// Exact 3D linear algebra over Q (GMP rationals), the two rotation
// generators A and B with denominator 7, and exact fixed-axis computation.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "paradoxkit/words.hpp"

namespace paradoxkit::exactlin {

using Integer = mpz_class;
// GMP keeps every mpq_class canonical (lowest terms, positive denominator)
// after each arithmetic operation; see ratio() for construction.
using Rational = mpq_class;

// p/q in lowest terms. The two-argument mpq_class constructor does not
// canonicalize, and comparisons assume canonical operands.
inline Rational ratio(long p, long q)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);
// Accepts "p", "p/q" with optional sign; throws ParseError.
Rational parse_rational(std::string_view text);

struct Vec3Q {
    std::array<Rational, 3> v{};

    Vec3Q() = default;
    Vec3Q(Rational x, Rational y, Rational z) : v{std::move(x), std::move(y), std::move(z)} {}

    const Rational& operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
    Rational& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
    bool is_zero() const { return v[0] == 0 && v[1] == 0 && v[2] == 0; }
    bool is_integral() const;

    friend bool operator==(const Vec3Q& l, const Vec3Q& r) { return l.v == r.v; }
    // Lexicographic; used for exact point deduplication.
    friend bool operator<(const Vec3Q& l, const Vec3Q& r)
    {
        for (int i = 0; i < 3; ++i) {
            if (l[i] != r[i])
                return l[i] < r[i];
        }
        return false;
    }
};

class Mat3Q {
public:
    Mat3Q() = default;
    // Row-major entries.
    explicit Mat3Q(std::array<Rational, 9> entries) : e_(std::move(entries)) {}

    static Mat3Q identity();
    static Mat3Q diagonal(const Rational& x, const Rational& y, const Rational& z);
    // (1/den) * the integer matrix.
    static Mat3Q from_integers(const std::array<long, 9>& num, long den = 1);

    const Rational& operator()(int r, int c) const { return e_[static_cast<std::size_t>(3 * r + c)]; }
    Rational& operator()(int r, int c) { return e_[static_cast<std::size_t>(3 * r + c)]; }
    const std::array<Rational, 9>& entries() const { return e_; }

    Mat3Q transpose() const;
    Rational determinant() const;
    // Throws DomainError if singular.
    Mat3Q inverse() const;
    // lcm of all entry denominators.
    Integer common_denominator() const;

    friend Mat3Q operator*(const Mat3Q& l, const Mat3Q& r);
    friend Mat3Q operator-(const Mat3Q& l, const Mat3Q& r);
    friend Vec3Q operator*(const Mat3Q& m, const Vec3Q& v);
    friend bool operator==(const Mat3Q& l, const Mat3Q& r) { return l.e_ == r.e_; }

private:
    std::array<Rational, 9> e_{};
};

// A line through the origin given by a primitive integer vector with its
// first nonzero coordinate positive. Antipodal points share one direction.
class ProjectiveDirection {
public:
    // Canonicalizes; throws DegenerateInputError for the zero vector.
    ProjectiveDirection(Integer a, Integer b, Integer c);
    static ProjectiveDirection of(const Vec3Q& v);

    const Integer& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    Vec3Q as_vector() const { return Vec3Q(Rational(c_[0]), Rational(c_[1]), Rational(c_[2])); }
    std::string to_string() const; // "[a:b:c]"

    friend bool operator==(const ProjectiveDirection&, const ProjectiveDirection&) = default;
    friend bool operator<(const ProjectiveDirection& l, const ProjectiveDirection& r)
    {
        for (int i = 0; i < 3; ++i)
            if (l.c_[i] != r.c_[i])
                return l.c_[i] < r.c_[i];
        return false;
    }

private:
    std::array<Integer, 3> c_;
};

// A = (1/7)[[6,2,3],[2,3,-6],[-3,6,2]], B = (1/7)[[2,-6,3],[6,3,2],[-3,2,6]];
// inverse letters map to transposes.
Mat3Q generator_matrix(words::Letter x);

// An assignment of matrices to the letters a and b. Inverse letters get the
// exact matrix inverse. Used to run the freeness machinery on other pairs.
class GeneratorPair {
public:
    GeneratorPair(Mat3Q a, Mat3Q b);
    static const GeneratorPair& standard();

    const Mat3Q& matrix(words::Letter x) const { return m_[static_cast<std::size_t>(words::index(x))]; }
    bool orthogonal() const { return orthogonal_; }

private:
    std::array<Mat3Q, 4> m_;
    bool orthogonal_ = false;
};

Mat3Q eval_word(const words::ReducedWord& w, const GeneratorPair& gens = GeneratorPair::standard());

bool is_special_orthogonal(const Mat3Q& m);

// Rank computed by fraction-free elimination.
int rank(const Mat3Q& m);

// Fixed line of a rotation: the kernel of M - I.
// Throws DegenerateInputError for M = I and InvariantViolation when the
// kernel is not one-dimensional.
ProjectiveDirection axis(const Mat3Q& m);

// Integer matrices for the scaled fast path.
template <class T>
using IntMat3 = std::array<T, 9>;

template <class T>
IntMat3<T> multiply(const IntMat3<T>& l, const IntMat3<T>& r)
{
    IntMat3<T> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            T s = l[3 * i] * r[j];
            s += l[3 * i + 1] * r[3 + j];
            s += l[3 * i + 2] * r[6 + j];
            out[3 * i + j] = s;
        }
    return out;
}

// Denominator-cleared generators: scaled(x) = den * matrix(x) is integral,
// so den^|w| * eval_word(w) is an integer matrix. For A and B, den = 7.
class ScaledGenerators {
public:
    explicit ScaledGenerators(const GeneratorPair& gens);

    const Integer& denominator() const { return den_; }
    const IntMat3<Integer>& scaled(words::Letter x) const { return big_[static_cast<std::size_t>(words::index(x))]; }
    const IntMat3<std::int64_t>& scaled64(words::Letter x) const
    {
        return small_[static_cast<std::size_t>(words::index(x))];
    }
    // True when den^(depth+1) products of orthogonal matrices cannot
    // overflow 64-bit accumulators.
    bool fits_int64(int depth) const;

private:
    Integer den_;
    bool orthogonal_;
    std::array<IntMat3<Integer>, 4> big_;
    std::array<IntMat3<std::int64_t>, 4> small_{};
};

// den^|w| * eval_word(w) as an integer matrix.
IntMat3<Integer> eval_word_scaled(const words::ReducedWord& w, const ScaledGenerators& gens);

} // namespace paradoxkit::exactlin
