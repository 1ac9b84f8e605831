#include "doctest.h"

#include <cmath>
#include <random>

#include "fls/embedding.hpp"
#include "fls/fsle.hpp"
#include "fls/verify.hpp"
#include "support/fixture_cases.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace fls;

TEST_CASE("inverse nonnegativity oracle cross-check") {
    SUBCASE("identity") {
        CHECK(s_inverse_nonnegative(build_embedding(Matrix::identity(2))));
    }

    SUBCASE("example 3 (m-matrix) is guaranteed nonnegative") {
        CHECK(s_inverse_nonnegative(build_embedding(cases::example3().a)));
    }

    SUBCASE("example 1 verdict agrees with the oracle's columns") {
        const Embedding e = build_embedding(cases::example1().a);
        bool oracle_nonneg = true;
        double most_negative = 0.0;
        for (std::size_t j = 0; j < 6; ++j) {
            Vector unit(6, 0.0);
            unit[j] = 1.0;
            const auto col = oracle::solve(e.s, unit);
            REQUIRE(col.has_value());
            for (double v : *col) most_negative = std::min(most_negative, v);
        }
        oracle_nonneg = most_negative >= -1e-10;
        CHECK(s_inverse_nonnegative(e) == oracle_nonneg);
    }
}

TEST_CASE("solution validation aggregates component verdicts") {
    const auto ok = validate_solution(cases::example2().expected);
    CHECK(ok.all_fuzzy);
    CHECK(ok.components.size() == 3);

    const auto bad = validate_solution({{2, -1, 3, 1}});
    CHECK_FALSE(bad.all_fuzzy);
    CHECK_FALSE(bad.components[0].lower_nondecreasing);
    CHECK_FALSE(bad.components[0].upper_nonincreasing);

    const auto crossing = validate_solution({{1, 2, 4, -2}});
    CHECK_FALSE(crossing.all_fuzzy);
    CHECK_FALSE(crossing.components[0].ordered_at_one);

    bool conjunction = true;
    for (const auto& c : crossing.components) conjunction = conjunction && c.ok();
    CHECK(crossing.all_fuzzy == conjunction);
}

TEST_CASE("check_theorem2 verdicts") {
    SUBCASE("scalar") {
        const Theorem2Check t = check_theorem2(cases::matrix_of(1, {1}));
        CHECK(t.s_nonsingular);
        CHECK(t.a_nonsingular);
        CHECK(t.abs_a_nonsingular);
    }

    SUBCASE("rank-1 matrix") {
        const Matrix a = cases::matrix_of(2, {1, -1, 1, -1});
        const Theorem2Check t = check_theorem2(a);
        CHECK_FALSE(t.a_nonsingular);
        CHECK_FALSE(t.s_nonsingular);
        CHECK_FALSE(oracle::nonsingular(build_embedding(a).s));
    }

    SUBCASE("both factors singular") {
        const Matrix a = cases::matrix_of(2, {1, -1, -1, 1});
        const Theorem2Check t = check_theorem2(a);
        CHECK_FALSE(t.a_nonsingular);
        CHECK_FALSE(t.abs_a_nonsingular);
        CHECK_FALSE(t.s_nonsingular);
    }

    SUBCASE("nonsingular A with singular absolute value") {
        // |A| = all-ones matrix
        const Matrix a = cases::matrix_of(2, {1, -1, 1, 1});
        const Theorem2Check t = check_theorem2(a);
        CHECK(t.a_nonsingular);
        CHECK_FALSE(t.abs_a_nonsingular);
        CHECK_FALSE(t.s_nonsingular);
        CHECK_FALSE(oracle::nonsingular(build_embedding(a).s));
    }
}

TEST_CASE("check_theorem2 equivalence on random matrices") {
    gen::Rng rng(32950);
    std::uniform_int_distribution<std::size_t> dim(2, 8);
    int gray = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = dim(rng);
        Matrix a;
        switch (t % 4) {
            case 0: a = gen::general_matrix(rng, n); break;
            case 1: a = gen::h_matrix(rng, n).a; break;
            case 2: a = gen::singular_a(rng, n); break;
            default: a = gen::singular_abs(rng, n); break;
        }
        const Theorem2Check c = check_theorem2(a);
        // smallest pivot within a factor 10 of the floor: the verdict could
        // flip either way, so equivalence is not required there
        const auto near_floor = [](const NonsingularityCheck& s) {
            return s.min_pivot >= 0.1 * s.pivot_floor && s.min_pivot <= 10.0 * s.pivot_floor;
        };
        const bool gray_zone = near_floor(c.s_stats) || near_floor(c.a_stats) ||
                               near_floor(c.abs_stats);
        if (gray_zone) ++gray;
        INFO("trial ", t);
        if (!gray_zone) {
            CHECK(c.s_nonsingular == (c.a_nonsingular && c.abs_a_nonsingular));
        }
    }
    CHECK(gray < 0.02 * 200 + 1);
}

TEST_CASE("m-matrix guarantee chain") {
    gen::Rng rng(11235);
    std::uniform_int_distribution<std::size_t> dim(2, 8);
    for (int t = 0; t < 50; ++t) {
        const Matrix a = gen::m_matrix(rng, dim(rng)).a;
        const Embedding e = build_embedding(a);
        INFO("trial ", t);
        CHECK(s_inverse_nonnegative(e));
        // a right-hand side that is the image of a fuzzy vector must solve
        // back to a fuzzy vector
        const SolutionReport rep = solve_fsle(a, gen::consistent_rhs(rng, a));
        CHECK(rep.all_fuzzy);
    }
}
