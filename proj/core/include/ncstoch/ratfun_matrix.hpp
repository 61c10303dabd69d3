#ifndef NCSTOCH_RATFUN_MATRIX_HPP
#define NCSTOCH_RATFUN_MATRIX_HPP

#include <vector>

#include "ncstoch/matrix.hpp"
#include "ncstoch/ratfun.hpp"

namespace ncstoch {

/// Dense matrix of rational functions in t.
class RFMatrix {
public:
    RFMatrix() : rows_(0), cols_(0) {}
    RFMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RFMatrix identity(std::size_t n);
    static RFMatrix from(const QMatrix& m);
    /// I - t M.
    static RFMatrix one_minus_t_times(const QMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    RatFun& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const RatFun& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend RFMatrix operator*(const RFMatrix& a, const RFMatrix& b);
    friend RFMatrix operator+(const RFMatrix& a, const RFMatrix& b);
    friend RFMatrix operator-(const RFMatrix& a, const RFMatrix& b);
    RFMatrix scaled(const RatFun& s) const;
    friend bool operator==(const RFMatrix& a, const RFMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_identity() const;

    /// Exact inverse over the field Q(t), by elimination with reduction of
    /// every intermediate entry; throws SingularMatrix when the determinant
    /// is the zero rational function.
    RFMatrix inverse() const;

    /// Entrywise value at t = 1; throws NotEvaluableAtOne if any entry has a
    /// pole there.
    QMatrix value_at_one() const;

private:
    std::size_t rows_, cols_;
    std::vector<RatFun> data_;
};

/// Value at t = 1 of (1-t)(I - tM)^{-1}. For multiplicity_of_one(M) <= 1 this
/// is defined; its rows are fixed by M and span the eigenspace of the
/// eigenvalue 1 (the zero matrix when M has no eigenvalue 1).
QMatrix limit_matrix(const QMatrix& m);

} // namespace ncstoch

#endif
