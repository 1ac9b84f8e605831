#include "fls/solve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "fls/errors.hpp"
#include "fls/kernels.hpp"

namespace fls {

namespace {

constexpr double kPivotFloorScale = 1e-13;

struct Elimination {
    LUFactors factors;
    bool ok = true;
    std::size_t failed_column = 0;
};

Elimination eliminate(const Matrix& m, Pivoting pivoting, bool stop_on_failure) {
    const std::size_t n = m.size();
    Elimination r;
    r.factors.lu = m;
    r.factors.pivoting = pivoting;
    r.factors.pivot_floor = kPivotFloorScale * m.inf_norm();
    r.factors.min_pivot = std::numeric_limits<double>::infinity();
    r.factors.perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.factors.perm[i] = i;

    Matrix& lu = r.factors.lu;
    for (std::size_t k = 0; k < n; ++k) {
        if (pivoting == Pivoting::partial) {
            std::size_t best = k;
            double best_mag = std::fabs(lu(k, k));
            for (std::size_t i = k + 1; i < n; ++i) {
                const double mag = std::fabs(lu(i, k));
                if (mag > best_mag) {
                    best = i;
                    best_mag = mag;
                }
            }
            if (best != k) {
                std::swap_ranges(lu.row(k), lu.row(k) + n, lu.row(best));
                std::swap(r.factors.perm[k], r.factors.perm[best]);
            }
        }
        const double pivot = lu(k, k);
        r.factors.min_pivot = std::min(r.factors.min_pivot, std::fabs(pivot));
        if (std::fabs(pivot) <= r.factors.pivot_floor) {
            r.ok = false;
            r.failed_column = k;
            if (stop_on_failure) return r;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = lu(i, k) / pivot;
            lu(i, k) = f;
            kernels::axpy(-f, lu.row(k) + k + 1, lu.row(i) + k + 1, n - k - 1);
        }
    }
    return r;
}

}  // namespace

Matrix LUFactors::lower() const {
    const std::size_t n = lu.size();
    Matrix l = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) l(i, j) = lu(i, j);
    }
    return l;
}

Matrix LUFactors::upper() const {
    const std::size_t n = lu.size();
    Matrix u(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) u(i, j) = lu(i, j);
    }
    return u;
}

LUFactors lu_factor(const Matrix& m, Pivoting pivoting) {
    Elimination r = eliminate(m, pivoting, /*stop_on_failure=*/true);
    if (!r.ok) {
        throw SingularMatrixError(r.failed_column,
                                  "lu_factor: pivot at column " + std::to_string(r.failed_column) +
                                      " is at or below the pivot floor");
    }
    return std::move(r.factors);
}

LUFactors lu_factor_auto(const Matrix& m) {
    try {
        return lu_factor(m, Pivoting::none);
    } catch (const SingularMatrixError&) {
        return lu_factor(m, Pivoting::partial);
    }
}

Vector lu_solve(const LUFactors& f, const Vector& rhs) {
    const std::size_t n = f.size();
    if (rhs.size() != n) throw DimensionError("lu_solve: rhs length does not match factorization");

    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[f.perm[i]];

    const Matrix& lu = f.lu;
    // L y = b, unit diagonal
    for (std::size_t i = 1; i < n; ++i) {
        x[i] -= kernels::dot(lu.row(i), x.data(), i);
    }
    // U x = y
    for (std::size_t i = n; i-- > 0;) {
        x[i] -= kernels::dot(lu.row(i) + i + 1, x.data() + i + 1, n - i - 1);
        x[i] /= lu(i, i);
    }
    return x;
}

NonsingularityCheck check_nonsingular(const Matrix& m) {
    Elimination r = eliminate(m, Pivoting::partial, /*stop_on_failure=*/true);
    return {r.ok, r.factors.min_pivot, r.factors.pivot_floor};
}

const char* solve_method_name(SolveMethod m) {
    switch (m) {
        case SolveMethod::lu: return "lu";
        case SolveMethod::lu_pivoted: return "lu_pivoted";
        case SolveMethod::aor: return "aor";
    }
    return "?";
}

AORResult aor_solve(const Matrix& m, const Vector& rhs, const AORParams& p, const Vector& x0) {
    const std::size_t n = m.size();
    if (rhs.size() != n || x0.size() != n) {
        throw DimensionError("aor_solve: vector length does not match matrix size");
    }
    if (p.omega == 0.0) throw Error("aor_solve: omega must be nonzero");
    for (std::size_t i = 0; i < n; ++i) {
        if (m(i, i) == 0.0) throw Error("aor_solve: zero diagonal entry");
    }

    const double rhs_norm = kernels::inf_norm(rhs.data(), n);
    const double target = rhs_norm > 0.0 ? p.tol * rhs_norm : p.tol;

    AORResult r;
    r.x = x0;
    r.telemetry.method = SolveMethod::aor;

    Vector next(n);
    Vector residual(n);
    double residual_norm = 0.0;
    for (std::size_t k = 0; k < p.max_iter; ++k) {
        // forward sweep: entries j < i come from the new iterate
        for (std::size_t i = 0; i < n; ++i) {
            const double* row = m.row(i);
            const double below_old = kernels::dot(row, r.x.data(), i);
            const double below_new = kernels::dot(row, next.data(), i);
            const double above = kernels::dot(row + i + 1, r.x.data() + i + 1, n - i - 1);
            double t = (1.0 - p.omega) * m(i, i) * r.x[i];
            t -= (p.omega - p.gamma) * below_old;
            t -= p.omega * above;
            t += p.omega * rhs[i];
            next[i] = (t - p.gamma * below_new) / m(i, i);
        }
        r.x.swap(next);
        r.telemetry.iterations = k + 1;

        for (std::size_t i = 0; i < n; ++i) {
            residual[i] = rhs[i] - kernels::dot(m.row(i), r.x.data(), n);
        }
        residual_norm = kernels::inf_norm(residual.data(), n);
        if (residual_norm <= target) {
            r.telemetry.converged = true;
            r.telemetry.final_relative_residual =
                rhs_norm > 0.0 ? residual_norm / rhs_norm : residual_norm;
            return r;
        }
    }
    r.telemetry.converged = false;
    r.telemetry.final_relative_residual =
        rhs_norm > 0.0 ? residual_norm / rhs_norm : residual_norm;
    return r;
}

}  // namespace fls
