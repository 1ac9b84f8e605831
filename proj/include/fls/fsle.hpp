#pragma once

#include "fls/verify.hpp"

namespace fls {

/// End-to-end solve options. method lu picks pivot-free elimination first
/// and escalates to partial pivoting if a pivot hits the floor; aor runs the
/// stationary iteration with the given parameters.
struct SolveOptions {
    SolveMethod method = SolveMethod::lu;
    AORParams aor;
    bool check_inverse = false;  // also run the S^-1 >= 0 certificate
    bool force = false;          // attempt the solve even on verdict NONE
};

/// Solves A x = b with crisp A and fuzzy b: classifies A, builds the 2n x 2n
/// embedding and its permutation, solves the permuted system against the
/// intercept and slope coefficient vectors, reassembles the n fuzzy
/// components, and certifies the result.
///
/// Throws UnsupportedMatrixClassError when classification yields NONE and
/// force is not set, SingularMatrixError when even pivoted elimination fails,
/// and ConvergenceError when the iterative path stalls.
SolutionReport solve_fsle(const Matrix& a, const std::vector<FuzzyNumber>& b,
                          const SolveOptions& options = {});

}  // namespace fls
