#include "ratdec/exactla.hpp"

#include <sstream>

namespace ratdec {

namespace {

Int exact_div(const Int& num, const Int& den) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("exact_div: non-exact division in fraction-free elimination");
    return q;
}

/// Fraction-free forward elimination on a row-major n x m integer array,
/// m >= n, with row pivoting by largest absolute value. Returns the sign of
/// the row permutation, or 0 when some pivot column is entirely zero
/// (singular). On success a is upper triangular in its first n columns and
/// a[(n-1)*m + (n-1)] is det(A) up to the returned sign.
int bareiss_forward(std::vector<Int>& a, long n, long m) {
    int sgn = 1;
    Int prev = 1;
    for (long k = 0; k < n; ++k) {
        long piv = -1;
        for (long r = k; r < n; ++r) {
            const Int& cand = a[static_cast<std::size_t>(r) * m + k];
            if (cand == 0) continue;
            if (piv < 0 || mpz_cmpabs(cand.get_mpz_t(), a[static_cast<std::size_t>(piv) * m + k].get_mpz_t()) > 0)
                piv = r;
        }
        if (piv < 0) return 0;
        if (piv != k) {
            for (long c = 0; c < m; ++c)
                std::swap(a[static_cast<std::size_t>(piv) * m + c], a[static_cast<std::size_t>(k) * m + c]);
            sgn = -sgn;
        }
        const std::size_t krow = static_cast<std::size_t>(k) * m;
        for (long r = k + 1; r < n; ++r) {
            const std::size_t rrow = static_cast<std::size_t>(r) * m;
            for (long c = k + 1; c < m; ++c)
                a[rrow + c] = exact_div(a[krow + k] * a[rrow + c] - a[rrow + k] * a[krow + c], prev);
            a[rrow + k] = 0;
        }
        prev = a[krow + k];
    }
    return sgn;
}

/// Per-row lcm of denominators; multiplying the row by it clears fractions.
Int row_denominator_lcm(const RationalMatrix& a, const std::vector<Rat>* b, long i) {
    Int l = 1;
    for (long j = 0; j < a.size(); ++j)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(i, j).get_den_mpz_t());
    if (b) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*b)[static_cast<std::size_t>(i)].get_den_mpz_t());
    return l;
}

Int scale_to_int(const Rat& q, const Int& l) {
    return Int(q.get_num() * (l / q.get_den()));
}

template <typename T>
std::vector<T> charpoly_fl(const SquareMatrix<T>& a) {
    const long n = a.size();
    if (n > kCharpolyCap) throw SizeCapError("charpoly: dimension exceeds cap " + std::to_string(kCharpolyCap));
    std::vector<T> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = 1;
    if (n == 0) return c;
    SquareMatrix<T> mk = a;
    for (long k = 1; k <= n; ++k) {
        if (k > 1) {
            for (long i = 0; i < n; ++i) mk.at(i, i) += c[static_cast<std::size_t>(n - k + 1)];
            mk = a * mk;
        }
        T tr = trace(mk);
        if constexpr (std::is_same_v<T, Int>) {
            c[static_cast<std::size_t>(n - k)] = -exact_div(tr, Int(k));
        } else {
            c[static_cast<std::size_t>(n - k)] = -(tr / T(k));
        }
    }
    return c;
}

}  // namespace

RationalMatrix to_rational(const IntMatrix& a) {
    RationalMatrix r(a.size());
    for (long i = 0; i < a.size(); ++i)
        for (long j = 0; j < a.size(); ++j) r.at(i, j) = Rat(a.at(i, j));
    return r;
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::linear_root(const Rat& r) { return Poly(std::vector<Rat>{-r, Rat(1)}); }

Poly Poly::from_roots(const std::vector<Rat>& roots) {
    Poly p = constant(Rat(1));
    for (const Rat& r : roots) p = p * linear_root(r);
    return p;
}

Rat Poly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return Rat(0);
    return c_[static_cast<std::size_t>(i)];
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + Rat(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

Poly operator*(const Rat& s, const Poly& p) {
    std::vector<Rat> c(p.c_);
    for (Rat& x : c) x *= s;
    return Poly(std::move(c));
}

Poly Poly::pow(long e) const {
    if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly acc = constant(Rat(1));
    for (long i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Rat& ci = c_[static_cast<std::size_t>(i)];
        if (ci == 0) continue;
        if (!first) os << " + ";
        os << "(" << to_string(ci) << ")";
        if (i > 0) os << "*x^" << i;
        first = false;
    }
    return os.str();
}

Int determinant(const IntMatrix& a) {
    const long n = a.size();
    if (n == 0) return 1;
    std::vector<Int> buf(static_cast<std::size_t>(n) * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) buf[static_cast<std::size_t>(i) * n + j] = a.at(i, j);
    int sgn = bareiss_forward(buf, n, n);
    if (sgn == 0) return 0;
    Int det = buf[static_cast<std::size_t>(n - 1) * n + (n - 1)];
    return sgn < 0 ? Int(-det) : det;
}

Rat determinant(const RationalMatrix& a) {
    const long n = a.size();
    if (n == 0) return Rat(1);
    IntMatrix scaled(n);
    Int scale_product = 1;
    for (long i = 0; i < n; ++i) {
        Int l = row_denominator_lcm(a, nullptr, i);
        scale_product *= l;
        for (long j = 0; j < n; ++j) scaled.at(i, j) = scale_to_int(a.at(i, j), l);
    }
    return make_rat(determinant(scaled), scale_product);
}

std::optional<std::vector<Rat>> solve_exact(const RationalMatrix& a, const std::vector<Rat>& b) {
    const long n = a.size();
    if (static_cast<long>(b.size()) != n) throw std::invalid_argument("solve_exact: size mismatch");
    if (n == 0) return std::vector<Rat>{};
    const long m = n + 1;
    std::vector<Int> aug(static_cast<std::size_t>(n) * m);
    for (long i = 0; i < n; ++i) {
        Int l = row_denominator_lcm(a, &b, i);
        for (long j = 0; j < n; ++j) aug[static_cast<std::size_t>(i) * m + j] = scale_to_int(a.at(i, j), l);
        aug[static_cast<std::size_t>(i) * m + n] = scale_to_int(b[static_cast<std::size_t>(i)], l);
    }
    if (bareiss_forward(aug, n, m) == 0) return std::nullopt;
    std::vector<Rat> x(static_cast<std::size_t>(n));
    for (long i = n - 1; i >= 0; --i) {
        Rat acc(aug[static_cast<std::size_t>(i) * m + n]);
        for (long j = i + 1; j < n; ++j) acc -= Rat(aug[static_cast<std::size_t>(i) * m + j]) * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(i)] = acc / Rat(aug[static_cast<std::size_t>(i) * m + i]);
    }
    // The contract is a verified solve: check A x = b before handing it out.
    for (long i = 0; i < n; ++i) {
        Rat acc(0);
        for (long j = 0; j < n; ++j) acc += a.at(i, j) * x[static_cast<std::size_t>(j)];
        if (acc != b[static_cast<std::size_t>(i)])
            throw std::logic_error("solve_exact: verification A x = b failed");
    }
    return x;
}

Poly charpoly(const RationalMatrix& a) {
    return Poly(charpoly_fl(a));
}

Poly charpoly(const IntMatrix& a) {
    std::vector<Int> ci = charpoly_fl(a);
    std::vector<Rat> c(ci.size());
    for (std::size_t i = 0; i < ci.size(); ++i) c[i] = Rat(ci[i]);
    return Poly(std::move(c));
}

}  // namespace ratdec
