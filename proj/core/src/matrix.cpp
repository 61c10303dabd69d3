#include "ncstoch/matrix.hpp"

#include <utility>

#include "ncstoch/errors.hpp"

namespace ncstoch {

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw Error("QMatrix: entry count does not match shape");
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::scalar(const Rational& q) {
    QMatrix m(1, 1);
    m.at(0, 0) = q;
    return m;
}

bool QMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool QMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
}

QMatrix QMatrix::operator-() const {
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
    return r;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("QMatrix: shape mismatch in +");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("QMatrix: shape mismatch in -");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("QMatrix: shape mismatch in *");
    QMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

QMatrix operator*(const Rational& s, QMatrix m) {
    for (auto& x : m.data_) x *= s;
    return m;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

QMatrix QMatrix::transpose() const {
    QMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

QMatrix QMatrix::inverse() const {
    if (!is_square()) throw Error("QMatrix: inverse of non-square matrix");
    const std::size_t n = rows_;
    QMatrix a(*this), inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) throw SingularMatrix();
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        }
        const Rational d = a.at(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) *= d;
            inv.at(col, j) *= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            const Rational f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Rational QMatrix::det() const {
    if (!is_square()) throw Error("QMatrix: det of non-square matrix");
    const std::size_t n = rows_;
    QMatrix a(*this);
    Rational d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
            d = -d;
        }
        d *= a.at(col, col);
        const Rational inv = a.at(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a.at(i, col).is_zero()) continue;
            const Rational f = a.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    return d;
}

std::size_t QMatrix::rank() const {
    QMatrix a(*this);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t piv = r;
        while (piv < rows_ && a.at(piv, col).is_zero()) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(a.at(piv, j), a.at(r, j));
        const Rational inv = a.at(r, col).inverse();
        for (std::size_t i = r + 1; i < rows_; ++i) {
            if (a.at(i, col).is_zero()) continue;
            const Rational f = a.at(i, col) * inv;
            for (std::size_t j = col; j < cols_; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        ++r;
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const QMatrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j);
    }
    return os << "]";
}

std::size_t multiplicity_of_one(const QMatrix& m) {
    if (!m.is_square()) throw Error("multiplicity_of_one: non-square matrix");
    const std::size_t n = m.rows();
    const QMatrix b = QMatrix::identity(n) - m;
    QMatrix p = b;
    std::size_t best = p.nullity();
    for (std::size_t k = 2; k <= n; ++k) {
        p = p * b;
        const std::size_t nul = p.nullity();
        if (nul == best) break; // kernel chain stabilized
        best = nul;
    }
    return best;
}

std::vector<Rational> solve_left(const QMatrix& a, const std::vector<Rational>& b) {
    // x A = b  <=>  A^t x^t = b^t
    const QMatrix at = a.transpose();
    const std::size_t n = at.rows();
    if (b.size() != n) throw Error("solve_left: dimension mismatch");
    QMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at.at(i, j);
        aug.at(i, n) = b[i];
    }
    // forward elimination with partial (first nonzero) pivoting
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && aug.at(piv, col).is_zero()) ++piv;
        if (piv == n) throw SingularMatrix("solve_left: singular system");
        if (piv != col)
            for (std::size_t j = 0; j <= n; ++j) std::swap(aug.at(piv, j), aug.at(col, j));
        const Rational inv = aug.at(col, col).inverse();
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || aug.at(i, col).is_zero()) continue;
            const Rational f = aug.at(i, col) * inv;
            for (std::size_t j = col; j <= n; ++j) aug.at(i, j) -= f * aug.at(col, j);
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug.at(i, n) / aug.at(i, i);
    return x;
}

std::vector<Rational> stationary_distribution(const QMatrix& m) {
    if (!m.is_square()) throw Error("stationary_distribution: non-square matrix");
    const std::size_t n = m.rows();
    // x (M - I) = 0 with sum(x) = 1: replace the last equation by the
    // normalization, which makes the system square and regular when the
    // eigenvalue 1 is simple.
    QMatrix sys = m - QMatrix::identity(n); // columns are equations of x M = x
    for (std::size_t i = 0; i < n; ++i) sys.at(i, n - 1) = 1;
    std::vector<Rational> rhs(n);
    rhs[n - 1] = 1;
    return solve_left(sys, rhs);
}

} // namespace ncstoch
