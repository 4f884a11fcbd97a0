#pragma once

#include <complex>
#include <cstddef>
#include <vector>

// Thin dense row-major matrix plumbing. Dimensions stay small (phi(n)/2 at
// desk scale), so storage is a flat vector and products run through the
// kernels layer row by row.

namespace cyclomat::linalg {

template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    T* row(std::size_t r) { return data_.data() + r * cols_; }
    const T* row(std::size_t r) const { return data_.data() + r * cols_; }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }
    std::size_t size() const { return data_.size(); }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using RMatrix = Matrix<double>;
using CMatrix = Matrix<std::complex<double>>;

RMatrix matmul(const RMatrix& a, const RMatrix& b);
CMatrix matmul(const CMatrix& a, const CMatrix& b);

CMatrix conj_transpose(const CMatrix& m);
RMatrix transpose(const RMatrix& m);

// Largest entrywise |a - b|; the residual norm used by all identity checks.
double max_abs_diff(const RMatrix& a, const RMatrix& b);
double max_abs_diff(const CMatrix& a, const CMatrix& b);

} // namespace cyclomat::linalg
