#include "cyclomat/linalg.hpp"

#include <stdexcept>

#include "cyclomat/kernels.hpp"

namespace cyclomat::linalg {

namespace {

template <typename T>
Matrix<T> matmul_impl(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: inner dimensions differ");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            kernels::axpy(a(i, k), b.row(k), c.row(i), b.cols());
    return c;
}

template <typename T>
double max_abs_diff_impl(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("max_abs_diff: shapes differ");
    return kernels::max_abs_diff(a.data(), b.data(), a.size());
}

} // namespace

RMatrix matmul(const RMatrix& a, const RMatrix& b) { return matmul_impl(a, b); }
CMatrix matmul(const CMatrix& a, const CMatrix& b) { return matmul_impl(a, b); }

CMatrix conj_transpose(const CMatrix& m) {
    CMatrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            t(j, i) = std::conj(m(i, j));
    return t;
}

RMatrix transpose(const RMatrix& m) {
    RMatrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            t(j, i) = m(i, j);
    return t;
}

double max_abs_diff(const RMatrix& a, const RMatrix& b) {
    return max_abs_diff_impl(a, b);
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    return max_abs_diff_impl(a, b);
}

} // namespace cyclomat::linalg
