#pragma once

#include <cstddef>
#include <vector>

#include "fls/matrix.hpp"

namespace fls {

enum class Pivoting { none, partial };

/// Packed Doolittle factorization: unit lower triangle below the diagonal of
/// lu, upper triangle on and above it. perm maps factored row order back to
/// the input (row i of the factorization came from input row perm[i]); it is
/// the identity when pivoting was none. A pivot counts as singular when its
/// magnitude is at or below pivot_floor = 1e-13 * ||M||_inf, which keeps the
/// test scale-invariant.
struct LUFactors {
    Matrix lu;
    std::vector<std::size_t> perm;
    Pivoting pivoting = Pivoting::none;
    double min_pivot = 0.0;    // smallest pivot magnitude encountered
    double pivot_floor = 0.0;

    std::size_t size() const { return lu.size(); }
    Matrix lower() const;
    Matrix upper() const;
};

/// Factors m. With Pivoting::none this is elimination without row exchanges,
/// which the dominance classes guarantee to succeed; with Pivoting::partial
/// each column pivots on its largest remaining entry. Throws
/// SingularMatrixError naming the failing column.
LUFactors lu_factor(const Matrix& m, Pivoting pivoting);

/// lu_factor with escalation: tries none, retries partial on a tiny pivot.
LUFactors lu_factor_auto(const Matrix& m);

/// Forward then back substitution; applies perm to rhs first.
Vector lu_solve(const LUFactors& f, const Vector& rhs);

/// Non-throwing partial-pivot elimination used for nonsingularity verdicts.
/// min_pivot / pivot_floor expose how close the verdict was to the floor.
struct NonsingularityCheck {
    bool nonsingular = false;
    double min_pivot = 0.0;
    double pivot_floor = 0.0;
};
NonsingularityCheck check_nonsingular(const Matrix& m);

/// Parameters of the accelerated-overrelaxation family. gamma = omega = 1 is
/// Gauss-Seidel, gamma = 0 / omega = 1 is Jacobi.
struct AORParams {
    double gamma = 1.0;
    double omega = 1.0;
    double tol = 1e-10;  // relative residual target
    std::size_t max_iter = 10000;
};

enum class SolveMethod { lu, lu_pivoted, aor };

const char* solve_method_name(SolveMethod m);

struct SolveTelemetry {
    SolveMethod method = SolveMethod::lu;
    std::size_t iterations = 0;  // 0 for direct solves
    double final_relative_residual = 0.0;
    bool converged = true;
};

struct AORResult {
    Vector x;
    SolveTelemetry telemetry;
};

/// Stationary iteration on the splitting M = D - L - U (diagonal, strict
/// lower, strict upper):
///
///   x' = (D - gamma L)^-1 [ ((1-omega) D + (omega-gamma) L + omega U) x
///                           + omega rhs ]
///
/// applied via a forward triangular sweep. Stops when the relative residual
/// ||rhs - M x||_inf / ||rhs||_inf reaches p.tol (absolute residual when rhs
/// is zero) or at p.max_iter, in which case telemetry.converged is false and
/// x is the last iterate. Requires a zero-free diagonal and omega != 0.
AORResult aor_solve(const Matrix& m, const Vector& rhs, const AORParams& p, const Vector& x0);

}  // namespace fls
