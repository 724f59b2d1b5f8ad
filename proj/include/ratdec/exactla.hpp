#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratdec/numeric.hpp"

namespace ratdec {

/// Dense square matrix, row-major. Immutable use after construction is the
/// norm; entries are exact (Int or Rat).
template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(long n) : n_(n), a_(checked_size(n)) {}

    static SquareMatrix identity(long n) {
        SquareMatrix m(n);
        for (long i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    long size() const { return n_; }

    T& at(long i, long j) { return a_[idx(i, j)]; }
    const T& at(long i, long j) const { return a_[idx(i, j)]; }

    bool operator==(const SquareMatrix&) const = default;

private:
    static std::size_t checked_size(long n) {
        if (n < 0) throw std::invalid_argument("SquareMatrix: negative dimension");
        return static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    }
    std::size_t idx(long i, long j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw std::out_of_range("SquareMatrix: index out of range");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }

    long n_ = 0;
    std::vector<T> a_;
};

using IntMatrix = SquareMatrix<Int>;
using RationalMatrix = SquareMatrix<Rat>;

template <typename T>
SquareMatrix<T> operator*(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("matrix product: size mismatch");
    const long n = a.size();
    SquareMatrix<T> c(n);
    for (long i = 0; i < n; ++i)
        for (long k = 0; k < n; ++k) {
            const T& aik = a.at(i, k);
            if (aik == 0) continue;
            for (long j = 0; j < n; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

template <typename T>
T trace(const SquareMatrix<T>& a) {
    T s{};
    for (long i = 0; i < a.size(); ++i) s += a.at(i, i);
    return s;
}

template <typename T>
SquareMatrix<T> transpose(const SquareMatrix<T>& a) {
    SquareMatrix<T> b(a.size());
    for (long i = 0; i < a.size(); ++i)
        for (long j = 0; j < a.size(); ++j) b.at(j, i) = a.at(i, j);
    return b;
}

RationalMatrix to_rational(const IntMatrix& a);

/// Dense univariate polynomial over Rat; coeffs()[i] multiplies x^i.
/// Trailing zero coefficients are trimmed, so equality is plain
/// coefficient-wise comparison.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);

    static Poly constant(const Rat& c);
    /// x - r
    static Poly linear_root(const Rat& r);
    /// prod_i (x - r_i)
    static Poly from_roots(const std::vector<Rat>& roots);

    /// Degree, or -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    /// Coefficient of x^i (0 beyond the degree).
    Rat coeff(long i) const;
    bool is_zero() const { return c_.empty(); }

    Rat eval(const Rat& x) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& s, const Poly& p);
    Poly pow(long e) const;

    bool operator==(const Poly&) const = default;

    std::string str() const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// det(A) by fraction-free Bareiss elimination; intermediate entries stay
/// integral (checked) so big-integer growth is bounded by minor sizes.
Int determinant(const IntMatrix& a);

/// det(A) for rational input: rows are scaled to integers first, then the
/// Bareiss result is divided by the scale product.
Rat determinant(const RationalMatrix& a);

/// Exact solution of A x = b, or nullopt when A is singular. The augmented
/// system is cleared of denominators row by row, eliminated fraction-free
/// with magnitude pivoting, and back-substituted; the result is re-verified
/// by multiplication before returning.
std::optional<std::vector<Rat>> solve_exact(const RationalMatrix& a, const std::vector<Rat>& b);

inline constexpr long kCharpolyCap = 300;

/// Monic char poly det(xI - A) by Faddeev-LeVerrier. n <= kCharpolyCap.
Poly charpoly(const RationalMatrix& a);
/// Integer specialization: every intermediate matrix and division stays
/// integral (checked).
Poly charpoly(const IntMatrix& a);

}  // namespace ratdec
