#include "support/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gen {

namespace {

// Fills the off-diagonal of row i and returns sum_j |a_ij| * x_j.
template <class Draw>
double fill_off_diagonal(fls::Matrix& a, const fls::Vector& x, std::size_t i, Draw&& draw) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (i == j) continue;
        a(i, j) = draw();
        s += std::abs(a(i, j)) * x[j];
    }
    return s;
}

WitnessedMatrix dominant_matrix(Rng& rng, std::size_t n, bool z_pattern) {
    std::uniform_real_distribution<double> off(-1.0, 1.0);
    std::uniform_real_distribution<double> mag(0.0, 1.0);
    std::uniform_real_distribution<double> wit(0.2, 5.0);
    std::uniform_real_distribution<double> slack(0.1, 1.0);
    std::bernoulli_distribution coin(0.5);

    fls::Matrix a(n);
    fls::Vector x(n);
    for (auto& v : x) v = wit(rng);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = z_pattern
                             ? fill_off_diagonal(a, x, i, [&] { return -mag(rng); })
                             : fill_off_diagonal(a, x, i, [&] { return off(rng); });
        // strict dominance with slack keeps the Jacobi radius at most ~0.91,
        // so the witness iteration in classify converges quickly
        const double d = (s * (1.0 + slack(rng)) + 0.05) / x[i];
        a(i, i) = (z_pattern || coin(rng)) ? d : -d;
    }
    return {std::move(a), std::move(x)};
}

}  // namespace

WitnessedMatrix h_matrix(Rng& rng, std::size_t n) { return dominant_matrix(rng, n, false); }

WitnessedMatrix m_matrix(Rng& rng, std::size_t n) { return dominant_matrix(rng, n, true); }

fls::Matrix sdd_matrix(Rng& rng, std::size_t n, bool positive_diagonal) {
    std::uniform_real_distribution<double> off(-1.0, 1.0);
    std::uniform_real_distribution<double> slack(0.1, 1.0);
    std::bernoulli_distribution coin(0.5);
    fls::Matrix a(n);
    const fls::Vector ones(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = fill_off_diagonal(a, ones, i, [&] { return off(rng); });
        const double d = s * (1.0 + slack(rng)) + 0.05;
        a(i, i) = (positive_diagonal || coin(rng)) ? d : -d;
    }
    return a;
}

fls::Matrix general_matrix(Rng& rng, std::size_t n, double scale) {
    std::uniform_real_distribution<double> entry(-scale, scale);
    fls::Matrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
    return a;
}

fls::Matrix singular_a(Rng& rng, std::size_t n) {
    fls::Matrix a = general_matrix(rng, n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_real_distribution<double> coef(0.5, 2.0);
    std::bernoulli_distribution coin(0.5);
    const std::size_t r = pick(rng);
    const std::size_t p = (r + 1) % n;
    const std::size_t q = (r + 2) % n;  // equals p when n == 2
    const double alpha = coin(rng) ? coef(rng) : -coef(rng);
    const double beta = (q == p) ? 0.0 : (coin(rng) ? coef(rng) : -coef(rng));
    for (std::size_t j = 0; j < n; ++j) a(r, j) = alpha * a(p, j) + beta * a(q, j);
    return a;
}

fls::Matrix singular_abs(Rng& rng, std::size_t n) {
    fls::Matrix a = general_matrix(rng, n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const std::size_t p = pick(rng);
    const std::size_t q = (p + 1) % n;
    const std::size_t flip = pick(rng);
    for (std::size_t j = 0; j < n; ++j) {
        // entries bounded away from zero so the single sign flip matters
        if (std::abs(a(p, j)) < 0.2) a(p, j) = a(p, j) < 0.0 ? -0.2 : 0.2;
        a(q, j) = (j == flip) ? -a(p, j) : a(p, j);
    }
    return a;
}

std::vector<fls::FuzzyNumber> fuzzy_rhs(Rng& rng, std::size_t n) {
    std::uniform_real_distribution<double> base(-5.0, 5.0);
    std::uniform_real_distribution<double> rise(0.0, 2.0);
    std::uniform_real_distribution<double> gap(0.0, 3.0);
    std::vector<fls::FuzzyNumber> b(n);
    for (auto& u : b) {
        u.lower_intercept = base(rng);
        u.lower_slope = rise(rng);
        u.upper_slope = -rise(rng);
        const double top = u.lower(1.0) + gap(rng);  // upper(1) >= lower(1)
        u.upper_intercept = top - u.upper_slope;
    }
    return b;
}

std::vector<fls::FuzzyNumber> consistent_rhs(Rng& rng, const fls::Matrix& a) {
    const std::size_t n = a.size();
    const std::vector<fls::FuzzyNumber> x = fuzzy_rhs(rng, n);
    std::vector<fls::FuzzyNumber> b(n, fls::FuzzyNumber::crisp(0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[i] = b[i] + a(i, j) * x[j];
    return b;
}

fls::Vector vector(Rng& rng, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> entry(lo, hi);
    fls::Vector v(n);
    for (auto& x : v) x = entry(rng);
    return v;
}

std::vector<std::size_t> permutation(Rng& rng, std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace gen
