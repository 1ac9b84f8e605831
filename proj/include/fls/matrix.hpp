#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fls {

using Vector = std::vector<double>;

/// Dense square matrix of doubles, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

    const double* row(std::size_t i) const { return a_.data() + i * n_; }
    double* row(std::size_t i) { return a_.data() + i * n_; }

    std::span<const double> entries() const { return a_; }

    bool all_finite() const;

    /// Matrix infinity norm: max absolute row sum.
    double inf_norm() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

/// Entrywise absolute value.
Matrix abs(const Matrix& m);

/// m * x; throws DimensionError on size mismatch.
Vector multiply(const Matrix& m, const Vector& x);

double inf_norm(const Vector& v);
double inf_norm_diff(const Vector& a, const Vector& b);

}  // namespace fls
