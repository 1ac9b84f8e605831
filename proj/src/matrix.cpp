#include "fls/matrix.hpp"

#include <cmath>

#include "fls/errors.hpp"
#include "fls/kernels.hpp"

namespace fls {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

bool Matrix::all_finite() const {
    for (double v : a_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

double Matrix::inf_norm() const {
    double m = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        m = std::max(m, kernels::abs_sum(row(i), n_));
    }
    return m;
}

Matrix abs(const Matrix& m) {
    const std::size_t n = m.size();
    Matrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) r(i, j) = std::fabs(m(i, j));
    }
    return r;
}

Vector multiply(const Matrix& m, const Vector& x) {
    const std::size_t n = m.size();
    if (x.size() != n) throw DimensionError("multiply: vector length does not match matrix size");
    Vector y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = kernels::dot(m.row(i), x.data(), n);
    return y;
}

double inf_norm(const Vector& v) { return kernels::inf_norm(v.data(), v.size()); }

double inf_norm_diff(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionError("inf_norm_diff: length mismatch");
    return kernels::inf_norm_diff(a.data(), b.data(), a.size());
}

}  // namespace fls
