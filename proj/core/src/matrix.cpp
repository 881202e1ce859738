#include "toric/matrix.hpp"

namespace toric {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error("ragged initializer for IntMatrix");
        for (long x : r) data_.emplace_back(x);
    }
}

IVec IntMatrix::row(size_t i) const {
    IVec v(cols_);
    for (size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

IVec IntMatrix::col(size_t j) const {
    IVec v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void IntMatrix::set_row(size_t i, const IVec& v) {
    for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void IntMatrix::set_col(size_t j, const IVec& v) {
    for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IVec>& cols, size_t nrows) {
    IntMatrix m(nrows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

IVec IntMatrix::apply(const IVec& x) const {
    if (x.size() != cols_) throw Error("matrix-vector size mismatch");
    IVec r(rows_, Int(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * x[j];
    return r;
}

IntMatrix IntMatrix::multiply(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error("matrix-matrix size mismatch");
    IntMatrix r(rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) r(i, j) += a * rhs(k, j);
        }
    return r;
}

std::string IntMatrix::to_string() const {
    std::string s;
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) {
            if (j) s += ' ';
            s += (*this)(i, j).get_str();
        }
        s += '\n';
    }
    return s;
}

}  // namespace toric
