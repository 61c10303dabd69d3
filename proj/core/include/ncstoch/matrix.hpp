#ifndef NCSTOCH_MATRIX_HPP
#define NCSTOCH_MATRIX_HPP

#include <cstddef>
#include <ostream>
#include <vector>

#include "ncstoch/rational.hpp"

namespace ncstoch {

/// Dense matrix of exact rationals, row-major.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);

    static QMatrix identity(std::size_t n);
    static QMatrix zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }
    /// 1x1 matrix, handy for scalar-as-block code paths.
    static QMatrix scalar(const Rational& q);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_identity() const;

    QMatrix operator-() const;
    QMatrix& operator+=(const QMatrix& o);
    QMatrix& operator-=(const QMatrix& o);
    friend QMatrix operator+(QMatrix a, const QMatrix& b) { a += b; return a; }
    friend QMatrix operator-(QMatrix a, const QMatrix& b) { a -= b; return a; }
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const Rational& s, QMatrix m);

    friend bool operator==(const QMatrix& a, const QMatrix& b);
    friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

    QMatrix transpose() const;

    /// Exact inverse by Gauss-Jordan elimination; throws SingularMatrix.
    QMatrix inverse() const;
    Rational det() const;
    std::size_t rank() const;
    std::size_t nullity() const { return cols_ - rank(); }

    friend std::ostream& operator<<(std::ostream& os, const QMatrix& m);

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Maximum nullity of the positive powers of I - M; the kernel chain
/// stabilizes within dim steps.
std::size_t multiplicity_of_one(const QMatrix& m);

/// Unique row vector x with x M = x and sum(x) = 1, for M row-stochastic with
/// eigenvalue 1 of multiplicity 1. Solved exactly as a linear system;
/// independent of the limit-of-(1-t)(tM)^* route.
std::vector<Rational> stationary_distribution(const QMatrix& m);

/// Solve x A = b for a row vector x; throws SingularMatrix.
std::vector<Rational> solve_left(const QMatrix& a, const std::vector<Rational>& b);

} // namespace ncstoch

#endif
