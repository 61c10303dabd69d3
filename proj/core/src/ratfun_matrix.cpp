#include "ncstoch/ratfun_matrix.hpp"

#include "ncstoch/errors.hpp"

namespace ncstoch {

RFMatrix RFMatrix::identity(std::size_t n) {
    RFMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RatFun(Rational(1));
    return m;
}

RFMatrix RFMatrix::from(const QMatrix& q) {
    RFMatrix m(q.rows(), q.cols());
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) m.at(i, j) = RatFun(q.at(i, j));
    return m;
}

RFMatrix RFMatrix::one_minus_t_times(const QMatrix& q) {
    if (!q.is_square()) throw Error("one_minus_t_times: non-square matrix");
    RFMatrix m(q.rows(), q.cols());
    const RatFun t = RatFun::t();
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) {
            m.at(i, j) = -(t * RatFun(q.at(i, j)));
            if (i == j) m.at(i, j) = m.at(i, j) + RatFun(Rational(1));
        }
    return m;
}

RFMatrix operator*(const RFMatrix& a, const RFMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("RFMatrix: shape mismatch in *");
    RFMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const RatFun& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
        }
    return r;
}

RFMatrix operator+(const RFMatrix& a, const RFMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("RFMatrix: shape mismatch in +");
    RFMatrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
    return r;
}

RFMatrix operator-(const RFMatrix& a, const RFMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("RFMatrix: shape mismatch in -");
    RFMatrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
    return r;
}

RFMatrix RFMatrix::scaled(const RatFun& s) const {
    RFMatrix r(*this);
    for (auto& x : r.data_) x = s * x;
    return r;
}

bool RFMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != RatFun(Rational(i == j ? 1 : 0))) return false;
    return true;
}

RFMatrix RFMatrix::inverse() const {
    if (rows_ != cols_) throw Error("RFMatrix: inverse of non-square matrix");
    const std::size_t n = rows_;
    RFMatrix a(*this), inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) throw SingularMatrix("RFMatrix: singular over Q(t)");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        }
        const RatFun d = a.at(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) = d * a.at(col, j);
            inv.at(col, j) = d * inv.at(col, j);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            const RatFun f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) = a.at(i, j) - f * a.at(col, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

QMatrix RFMatrix::value_at_one() const {
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = eval_at_one(at(i, j)).value;
    return r;
}

QMatrix limit_matrix(const QMatrix& m) {
    const RFMatrix star = RFMatrix::one_minus_t_times(m).inverse();
    return star.scaled(RatFun::one_minus_t()).value_at_one();
}

} // namespace ncstoch
