#include "fls/fuzzy.hpp"

#include <cmath>

#include "fls/errors.hpp"

namespace fls {

std::vector<std::string> ValidityReport::violations() const {
    std::vector<std::string> v;
    if (!lower_nondecreasing) v.push_back("lower bound is not nondecreasing (negative lower slope)");
    if (!upper_nonincreasing) v.push_back("upper bound is not nonincreasing (positive upper slope)");
    if (!ordered_at_one) v.push_back("lower(1) exceeds upper(1)");
    return v;
}

ValidityReport check_validity(const FuzzyNumber& u, double tol) {
    ValidityReport r;
    r.lower_nondecreasing = u.lower_slope >= -tol;
    r.upper_nonincreasing = u.upper_slope <= tol;
    r.ordered_at_one = u.lower(1.0) <= u.upper(1.0) + tol;
    return r;
}

bool is_valid(const FuzzyNumber& u, double tol) { return check_validity(u, tol).ok(); }

FuzzyNumber to_parametric(const TrapezoidalNumber& t) {
    if (!(t.x0 <= t.y0) || !(t.alpha >= 0.0) || !(t.beta >= 0.0)) {
        throw InvalidFuzzyNumberError(
            "trapezoidal number requires x0 <= y0, alpha >= 0, beta >= 0");
    }
    return {t.x0 - t.alpha, t.alpha, t.y0 + t.beta, -t.beta};
}

double membership(const TrapezoidalNumber& t, double x) {
    if (x >= t.x0 && x <= t.y0) return 1.0;
    if (x < t.x0) {
        if (t.alpha == 0.0) return 0.0;  // jump at x0
        if (x < t.x0 - t.alpha) return 0.0;
        return (x - t.x0 + t.alpha) / t.alpha;
    }
    if (t.beta == 0.0) return 0.0;  // jump at y0
    if (x > t.y0 + t.beta) return 0.0;
    return (t.y0 - x + t.beta) / t.beta;
}

FuzzyNumber add(const FuzzyNumber& x, const FuzzyNumber& y) {
    return {x.lower_intercept + y.lower_intercept, x.lower_slope + y.lower_slope,
            x.upper_intercept + y.upper_intercept, x.upper_slope + y.upper_slope};
}

FuzzyNumber scale(double k, const FuzzyNumber& x) {
    if (k >= 0.0) {
        return {k * x.lower_intercept, k * x.lower_slope,
                k * x.upper_intercept, k * x.upper_slope};
    }
    return {k * x.upper_intercept, k * x.upper_slope,
            k * x.lower_intercept, k * x.lower_slope};
}

bool approx_equal(const FuzzyNumber& x, const FuzzyNumber& y, double tol) {
    return std::fabs(x.lower_intercept - y.lower_intercept) <= tol &&
           std::fabs(x.lower_slope - y.lower_slope) <= tol &&
           std::fabs(x.upper_intercept - y.upper_intercept) <= tol &&
           std::fabs(x.upper_slope - y.upper_slope) <= tol;
}

std::vector<std::pair<double, double>> sample(const FuzzyNumber& u,
                                              const std::vector<double>& levels) {
    std::vector<std::pair<double, double>> out;
    out.reserve(levels.size());
    for (double r : levels) out.emplace_back(u.lower(r), u.upper(r));
    return out;
}

}  // namespace fls
