#include "fls/fsle.hpp"

#include <string>
#include <utility>

#include "fls/errors.hpp"
#include "fls/kernels.hpp"

namespace fls {

namespace {

// ||y - S x||_inf / ||y||_inf, absolute when y is zero.
double relative_residual(const Matrix& s, const Vector& x, const Vector& y) {
    const Vector sx = multiply(s, x);
    const double r = inf_norm_diff(y, sx);
    const double scale = inf_norm(y);
    return scale > 0.0 ? r / scale : r;
}

}  // namespace

SolutionReport solve_fsle(const Matrix& a, const std::vector<FuzzyNumber>& b,
                          const SolveOptions& options) {
    SolutionReport report;
    report.classification = classify(a);
    if (report.classification.verdict == MatrixClass::None && !options.force) {
        throw UnsupportedMatrixClassError(
            "solve_fsle: matrix is not SDD, an M-matrix or an H-matrix; "
            "pass force to attempt the solve anyway");
    }

    const Embedding e = build_embedding(a, b);
    report.permutation = e.perm;

    const Vector py_intercept = apply_permutation(e.y_intercept, e.perm);
    const Vector py_slope = apply_permutation(e.y_slope, e.perm);

    Vector x_intercept;
    Vector x_slope;
    if (options.method == SolveMethod::aor) {
        const Vector x0(2 * e.n, 0.0);
        AORResult intercept = aor_solve(e.s_tilde, py_intercept, options.aor, x0);
        AORResult slope = aor_solve(e.s_tilde, py_slope, options.aor, x0);
        if (!intercept.telemetry.converged || !slope.telemetry.converged) {
            const auto& worst = intercept.telemetry.converged ? slope : intercept;
            throw ConvergenceError(worst.telemetry.iterations,
                                   worst.telemetry.final_relative_residual,
                                   "solve_fsle: AOR iteration did not reach tol within max_iter");
        }
        x_intercept = std::move(intercept.x);
        x_slope = std::move(slope.x);
        report.telemetry = intercept.telemetry;
        report.telemetry.iterations =
            std::max(intercept.telemetry.iterations, slope.telemetry.iterations);
        report.telemetry.final_relative_residual =
            std::max(intercept.telemetry.final_relative_residual,
                     slope.telemetry.final_relative_residual);
    } else {
        const LUFactors f = lu_factor_auto(e.s_tilde);
        x_intercept = lu_solve(f, py_intercept);
        x_slope = lu_solve(f, py_slope);
        report.telemetry.method =
            f.pivoting == Pivoting::none ? SolveMethod::lu : SolveMethod::lu_pivoted;
        report.telemetry.iterations = 0;
        report.telemetry.converged = true;
        report.telemetry.final_relative_residual =
            std::max(relative_residual(e.s_tilde, x_intercept, py_intercept),
                     relative_residual(e.s_tilde, x_slope, py_slope));
    }

    report.solution.resize(e.n);
    for (std::size_t i = 0; i < e.n; ++i) {
        report.solution[i] = {x_intercept[i], x_slope[i],
                              x_intercept[e.n + i], x_slope[e.n + i]};
    }

    ValidationSummary validity = validate_solution(report.solution);
    report.component_validity = std::move(validity.components);
    report.all_fuzzy = validity.all_fuzzy;

    report.residual_intercept = relative_residual(e.s, x_intercept, e.y_intercept);
    report.residual_slope = relative_residual(e.s, x_slope, e.y_slope);

    if (options.check_inverse) report.s_inverse_nonneg = s_inverse_nonnegative(e);

    return report;
}

}  // namespace fls
