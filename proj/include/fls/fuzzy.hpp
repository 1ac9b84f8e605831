#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fls {

/// Tolerance used by validity and equality checks on fuzzy numbers. Absorbs
/// floating-point noise left over from solves; genuine violations are far
/// larger in practice.
inline constexpr double kValidityTol = 1e-10;

/// A fuzzy number in parametric form: a pair of affine functions of the
/// membership level r in [0, 1],
///
///   lower(r) = lower_intercept + lower_slope * r
///   upper(r) = upper_intercept + upper_slope * r
///
/// A well-formed fuzzy number has lower nondecreasing (lower_slope >= 0),
/// upper nonincreasing (upper_slope <= 0) and lower(1) <= upper(1); together
/// these give lower(r) <= upper(r) on all of [0, 1]. The struct itself does
/// not enforce this: solver output may violate it, and the violation is a
/// reportable result. Use check_validity / is_valid.
struct FuzzyNumber {
    double lower_intercept = 0.0;
    double lower_slope = 0.0;
    double upper_intercept = 0.0;
    double upper_slope = 0.0;

    double lower(double r) const { return lower_intercept + lower_slope * r; }
    double upper(double r) const { return upper_intercept + upper_slope * r; }

    static FuzzyNumber crisp(double v) { return {v, 0.0, v, 0.0}; }
};

/// Trapezoidal fuzzy number: membership 1 on [x0, y0], a linear left ramp of
/// width alpha and a right ramp of width beta. x0 == y0 gives a triangular
/// number; alpha == beta == 0 gives a crisp one.
struct TrapezoidalNumber {
    double x0 = 0.0;
    double y0 = 0.0;
    double alpha = 0.0;  // left fuzziness, >= 0
    double beta = 0.0;   // right fuzziness, >= 0
};

/// Outcome of the three validity requirements, each reported by name.
struct ValidityReport {
    bool lower_nondecreasing = true;
    bool upper_nonincreasing = true;
    bool ordered_at_one = true;  // lower(1) <= upper(1)

    bool ok() const { return lower_nondecreasing && upper_nonincreasing && ordered_at_one; }
    std::vector<std::string> violations() const;
};

ValidityReport check_validity(const FuzzyNumber& u, double tol = kValidityTol);
bool is_valid(const FuzzyNumber& u, double tol = kValidityTol);

/// Parametric form of a trapezoid:
///   lower(r) = x0 - alpha + alpha*r,  upper(r) = y0 + beta - beta*r.
/// Throws InvalidFuzzyNumberError when t violates x0 <= y0, alpha >= 0,
/// beta >= 0.
FuzzyNumber to_parametric(const TrapezoidalNumber& t);

/// Membership grade of x under t, in [0, 1]. A zero-width ramp degenerates to
/// a jump: for alpha == 0 the value is 1 at x == x0 and 0 left of it
/// (symmetrically for beta == 0).
double membership(const TrapezoidalNumber& t, double x);

/// Componentwise sum of the affine coefficients.
FuzzyNumber add(const FuzzyNumber& x, const FuzzyNumber& y);

/// k * x. For k >= 0 both bounds scale in place; for k < 0 they swap, so the
/// result of scaling a valid number is always valid.
FuzzyNumber scale(double k, const FuzzyNumber& x);

/// Coefficientwise equality within tol.
bool approx_equal(const FuzzyNumber& x, const FuzzyNumber& y, double tol = kValidityTol);

inline FuzzyNumber operator+(const FuzzyNumber& x, const FuzzyNumber& y) { return add(x, y); }
inline FuzzyNumber operator*(double k, const FuzzyNumber& x) { return scale(k, x); }

/// Evaluates (lower(r), upper(r)) at the given membership levels, for output
/// display. The affine coefficients remain the canonical representation.
std::vector<std::pair<double, double>> sample(const FuzzyNumber& u,
                                              const std::vector<double>& levels);

}  // namespace fls
