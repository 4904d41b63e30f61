#include "attnlab/matrix.hpp"

#include <cmath>
#include <cassert>
#include <stdexcept>
#include <string>

namespace attnlab {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::initializer_list<double> values)
    : rows_(rows), cols_(cols), data_(values) {
    if (data_.size() != rows * cols)
        throw std::invalid_argument("Matrix: initializer has " + std::to_string(data_.size()) +
                                    " values for a " + std::to_string(rows) + "x" +
                                    std::to_string(cols) + " matrix");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

void Matrix::fill(double v) {
    for (auto& x : data_) x = v;
}

void Matrix::add_scaled(const Matrix& m, double s) {
    if (!same_shape(m))
        throw std::invalid_argument("add_scaled: shape mismatch " + shape_string(*this) +
                                    " vs " + shape_string(m));
    const double* src = m.data_.data();
    double* dst = data_.data();
    for (std::size_t i = 0; i < data_.size(); ++i) dst[i] += s * src[i];
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double x : data_) m = std::max(m, std::abs(x));
    return m;
}

bool Matrix::all_finite() const {
    for (double x : data_)
        if (!std::isfinite(x)) return false;
    return true;
}

std::string shape_string(const Matrix& m) {
    return "(" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")";
}

double dot(const double* a, const double* b, std::size_t n) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        s0 += a[i] * b[i];
        s1 += a[i + 1] * b[i + 1];
        s2 += a[i + 2] * b[i + 2];
        s3 += a[i + 3] * b[i + 3];
    }
    for (; i < n; ++i) s0 += a[i] * b[i];
    return (s0 + s1) + (s2 + s3);
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: inner dimensions disagree: " + shape_string(a) +
                                    " * " + shape_string(b));
    Matrix c(a.rows(), b.cols());
    const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
    // r-outer so each b row is loaded once and stays hot across the i loop.
    for (std::size_t r = 0; r < k; ++r) {
        const double* brow = b.row(r);
        for (std::size_t i = 0; i < m; ++i) {
            const double w = a(i, r);
            if (w == 0.0) continue;
            double* crow = c.row(i);
            for (std::size_t j = 0; j < n; ++j) crow[j] += w * brow[j];
        }
    }
    return c;
}

Matrix matmul_a_bt(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("matmul_a_bt: inner dimensions disagree: " + shape_string(a) +
                                    " * " + shape_string(b) + "^T");
    Matrix c(a.rows(), b.rows());
    const std::size_t m = a.rows(), n = b.rows(), k = a.cols();
    for (std::size_t j = 0; j < n; ++j) {
        const double* brow = b.row(j);
        for (std::size_t i = 0; i < m; ++i) c(i, j) = dot(a.row(i), brow, k);
    }
    return c;
}

Matrix matmul_at_b(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("matmul_at_b: inner dimensions disagree: " + shape_string(a) +
                                    "^T * " + shape_string(b));
    const std::size_t m = a.cols(), n = b.cols(), k = a.rows();
    Matrix c(m, n);
    // Tile output rows so the accumulating block stays in cache while the
    // (short) shared dimension is swept.
    constexpr std::size_t tile = 8;
    for (std::size_t i0 = 0; i0 < m; i0 += tile) {
        const std::size_t i1 = std::min(i0 + tile, m);
        for (std::size_t r = 0; r < k; ++r) {
            const double* brow = b.row(r);
            const double* arow = a.row(r);
            for (std::size_t i = i0; i < i1; ++i) {
                const double w = arow[i];
                if (w == 0.0) continue;
                double* crow = c.row(i);
                for (std::size_t j = 0; j < n; ++j) crow[j] += w * brow[j];
            }
        }
    }
    return c;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const double* row = m.row(i);
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = row[j];
    }
    return t;
}

}  // namespace attnlab
