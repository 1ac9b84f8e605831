#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fls/classify.hpp"
#include "fls/embedding.hpp"
#include "fls/fuzzy.hpp"
#include "fls/solve.hpp"

namespace fls {

/// Everything reported about one solved system. The solution components are
/// raw: a computed solution can fail the fuzzy requirements, and that failure
/// is part of the result rather than an error. Residuals are measured against
/// the unpermuted embedded system, so they do not depend on the permutation
/// used to solve.
struct SolutionReport {
    Classification classification;
    std::vector<std::size_t> permutation;
    std::vector<FuzzyNumber> solution;
    std::vector<ValidityReport> component_validity;
    bool all_fuzzy = false;
    std::optional<bool> s_inverse_nonneg;  // present only when the check ran
    double residual_intercept = 0.0;
    double residual_slope = 0.0;
    SolveTelemetry telemetry;
};

/// Whether every entry of S^-1 is nonnegative, i.e. every solution
/// coefficient depends monotonically (nondecreasingly) on every right-hand
/// side coefficient. Solves the 2n unit-vector systems against one
/// factorization; entries down to -tol * ||column||_inf count as nonnegative
/// to absorb roundoff.
bool s_inverse_nonnegative(const Embedding& e, double tol = 1e-10);

struct ValidationSummary {
    bool all_fuzzy = false;
    std::vector<ValidityReport> components;
};

/// Applies the fuzzy requirements to each component and aggregates.
ValidationSummary validate_solution(const std::vector<FuzzyNumber>& x);

/// Nonsingularity of the embedded matrix S against nonsingularity of A and
/// of |A| (the entrywise absolute value, which equals s1 - s2). The verdicts
/// are computed independently; that S is nonsingular exactly when both
/// others are is exercised by the test suites, not assumed here.
struct Theorem2Check {
    bool s_nonsingular = false;
    bool a_nonsingular = false;
    bool abs_a_nonsingular = false;
    NonsingularityCheck s_stats;
    NonsingularityCheck a_stats;
    NonsingularityCheck abs_stats;
};
Theorem2Check check_theorem2(const Matrix& a);

}  // namespace fls
