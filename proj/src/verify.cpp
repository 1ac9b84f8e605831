#include "fls/verify.hpp"

#include "fls/kernels.hpp"

namespace fls {

bool s_inverse_nonnegative(const Embedding& e, double tol) {
    const std::size_t m = 2 * e.n;
    // S z = e_j is solved through the permuted factorization: PS z = P e_j.
    const LUFactors f = lu_factor_auto(e.s_tilde);
    Vector rhs(m);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < m; ++i) rhs[i] = (e.perm[i] == j) ? 1.0 : 0.0;
        const Vector z = lu_solve(f, rhs);
        const double floor = -tol * kernels::inf_norm(z.data(), m);
        for (double v : z) {
            if (v < floor) return false;
        }
    }
    return true;
}

ValidationSummary validate_solution(const std::vector<FuzzyNumber>& x) {
    ValidationSummary s;
    s.all_fuzzy = true;
    s.components.reserve(x.size());
    for (const FuzzyNumber& u : x) {
        s.components.push_back(check_validity(u));
        if (!s.components.back().ok()) s.all_fuzzy = false;
    }
    return s;
}

Theorem2Check check_theorem2(const Matrix& a) {
    Theorem2Check t;
    const Embedding e = build_embedding(a);
    t.s_stats = check_nonsingular(e.s);
    t.a_stats = check_nonsingular(a);
    t.abs_stats = check_nonsingular(abs(a));
    t.s_nonsingular = t.s_stats.nonsingular;
    t.a_nonsingular = t.a_stats.nonsingular;
    t.abs_a_nonsingular = t.abs_stats.nonsingular;
    return t;
}

}  // namespace fls
