#include "doctest.h"

#include "fls/errors.hpp"
#include "fls/fuzzy.hpp"

using namespace fls;

TEST_CASE("trapezoidal to parametric") {
    FuzzyNumber u = to_parametric({2, 2, 1, 1});
    CHECK(u.lower_intercept == 1.0);
    CHECK(u.lower_slope == 1.0);
    CHECK(u.upper_intercept == 3.0);
    CHECK(u.upper_slope == -1.0);

    FuzzyNumber crisp = to_parametric({5, 5, 0, 0});
    CHECK(crisp.lower(0.0) == 5.0);
    CHECK(crisp.upper(0.0) == 5.0);
    CHECK(crisp.lower(1.0) == 5.0);

    FuzzyNumber w = to_parametric({1, 3, 2, 1});
    CHECK(w.lower_intercept == -1.0);
    CHECK(w.lower_slope == 2.0);
    CHECK(w.upper_intercept == 4.0);
    CHECK(w.upper_slope == -1.0);

    // evaluating at r = 1 recovers the defuzzifier interval exactly
    CHECK(w.lower(1.0) == 1.0);
    CHECK(w.upper(1.0) == 3.0);

    CHECK_THROWS_AS(to_parametric({3, 1, 1, 1}), InvalidFuzzyNumberError);   // x0 > y0
    CHECK_THROWS_AS(to_parametric({1, 2, -1, 1}), InvalidFuzzyNumberError);  // alpha < 0
    CHECK_THROWS_AS(to_parametric({1, 2, 1, -1}), InvalidFuzzyNumberError);  // beta < 0
}

TEST_CASE("membership function") {
    TrapezoidalNumber t{2, 2, 1, 1};
    CHECK(membership(t, 2.0) == 1.0);
    CHECK(membership(t, 1.5) == doctest::Approx(0.5));
    CHECK(membership(t, 4.0) == 0.0);
    CHECK(membership(t, 0.5) == 0.0);
    CHECK(membership(t, 2.5) == doctest::Approx(0.5));

    TrapezoidalNumber plateau{1, 3, 2, 1};
    CHECK(membership(plateau, 1.0) == 1.0);
    CHECK(membership(plateau, 2.0) == 1.0);
    CHECK(membership(plateau, 3.0) == 1.0);
    CHECK(membership(plateau, 0.0) == doctest::Approx(0.5));
    CHECK(membership(plateau, 3.5) == doctest::Approx(0.5));
    CHECK(membership(plateau, -1.0) == 0.0);
    CHECK(membership(plateau, 4.0) == 0.0);

    // zero-width ramps degenerate to jumps
    TrapezoidalNumber sharp{1, 2, 0, 0};
    CHECK(membership(sharp, 1.0) == 1.0);
    CHECK(membership(sharp, 2.0) == 1.0);
    CHECK(membership(sharp, 0.999) == 0.0);
    CHECK(membership(sharp, 2.001) == 0.0);
}

TEST_CASE("validity requirements") {
    CHECK(is_valid({1, 1, 3, -1}));

    ValidityReport bad = check_validity({2, -1, 3, 1});  // wrong monotonicity both ways
    CHECK_FALSE(bad.ok());
    CHECK_FALSE(bad.lower_nondecreasing);
    CHECK_FALSE(bad.upper_nonincreasing);
    CHECK(bad.ordered_at_one);
    CHECK(bad.violations().size() == 2);

    // apex touching: lower(1) == upper(1) == 3
    CHECK(is_valid({1, 2, 5, -2}));

    // crossing: lower(1) = 3 > upper(1) = 2
    ValidityReport crossed = check_validity({1, 2, 4, -2});
    CHECK_FALSE(crossed.ok());
    CHECK(crossed.lower_nondecreasing);
    CHECK(crossed.upper_nonincreasing);
    CHECK_FALSE(crossed.ordered_at_one);

    // tolerance absorbs solver noise on either side of each inequality
    CHECK(is_valid({1, -1e-12, 3, 1e-12}));
    CHECK_FALSE(is_valid({1, -1e-8, 3, -1}));
}

TEST_CASE("arithmetic rules") {
    const FuzzyNumber x{1, 1, 3, -1};

    SUBCASE("addition is coefficientwise") {
        FuzzyNumber s = x + FuzzyNumber::crisp(2);
        CHECK(approx_equal(s, {3, 1, 5, -1}));
        CHECK(approx_equal(x + FuzzyNumber{1, 2, 5, -2}, {2, 3, 8, -3}));
        CHECK(approx_equal(FuzzyNumber{} + x, x));
    }

    SUBCASE("scaling") {
        CHECK(approx_equal(2.0 * x, {2, 2, 6, -2}));
        // negative factors swap the bounds so the result stays valid
        FuzzyNumber n = -1.0 * x;
        CHECK(approx_equal(n, {-3, 1, -1, -1}));
        CHECK(is_valid(n));
        CHECK(approx_equal(0.0 * x, FuzzyNumber{}));
    }

    SUBCASE("equality is tolerance-based") {
        CHECK(approx_equal(x, to_parametric({2, 2, 1, 1})));
        CHECK_FALSE(approx_equal(x, {1, 1, 3, -0.9}));
    }
}

TEST_CASE("sampling at membership levels") {
    const FuzzyNumber x{1, 1, 3, -1};
    auto s = sample(x, {0.0, 0.5, 1.0});
    REQUIRE(s.size() == 3);
    CHECK(s[0].first == 1.0);
    CHECK(s[0].second == 3.0);
    CHECK(s[1].first == 1.5);
    CHECK(s[1].second == 2.5);
    CHECK(s[2].first == 2.0);
    CHECK(s[2].second == 2.0);
}
