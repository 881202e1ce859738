#pragma once

#include <initializer_list>

#include "toric/numeric.hpp"

namespace toric {

/// Dense matrix of arbitrary-precision integers, row-major.
///
/// Matrices read from files always have at least one row and one column;
/// internally a matrix may have zero columns (the Gale transform of a
/// full-rank matrix) so kernel bases of trivial kernels stay representable.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Int& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    IVec row(size_t i) const;
    IVec col(size_t j) const;
    void set_row(size_t i, const IVec& v);
    void set_col(size_t j, const IVec& v);

    IntMatrix transpose() const;
    static IntMatrix identity(size_t n);
    static IntMatrix from_columns(const std::vector<IVec>& cols, size_t nrows);

    /// Matrix-vector product A*x, x of length cols().
    IVec apply(const IVec& x) const;
    IntMatrix multiply(const IntMatrix& rhs) const;

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    size_t rows_, cols_;
    std::vector<Int> data_;
};

}  // namespace toric
