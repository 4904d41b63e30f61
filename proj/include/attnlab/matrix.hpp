#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace attnlab {

/// Dense row-major matrix of doubles. Rows are contiguous in memory;
/// row(i) returns a pointer valid for cols() elements.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);  // zero-filled
    Matrix(std::size_t rows, std::size_t cols, std::initializer_list<double> values);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    double* row(std::size_t r) { return data_.data() + r * cols_; }
    const double* row(std::size_t r) const { return data_.data() + r * cols_; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool same_shape(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    void fill(double v);
    /// *this += s * m
    void add_scaled(const Matrix& m, double s);
    double max_abs() const;
    bool all_finite() const;

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// a (m×k) · b (k×n). Throws std::invalid_argument naming both shapes on mismatch.
Matrix matmul(const Matrix& a, const Matrix& b);
/// aᵀ · b for a (k×m), b (k×n). Tiled for large n; suited to small k.
Matrix matmul_at_b(const Matrix& a, const Matrix& b);
/// a · bᵀ for a (m×k), b (n×k). Row-dot kernel.
Matrix matmul_a_bt(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& m);

/// Unrolled dot product of two contiguous ranges.
double dot(const double* a, const double* b, std::size_t n);

std::string shape_string(const Matrix& m);

}  // namespace attnlab
