#include "fls/classify.hpp"

#include <cmath>

#include "fls/kernels.hpp"

namespace fls {

namespace {

// sum_{j != i} |row[j]| * x[j]
double off_diag_abs_dot(const double* row, const Vector& x, std::size_t i, std::size_t n) {
    return kernels::abs_dot(row, x.data(), i) +
           kernels::abs_dot(row + i + 1, x.data() + i + 1, n - i - 1);
}

bool z_pattern_positive_diag(const Matrix& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!(a(i, i) > 0.0)) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && a(i, j) > 0.0) return false;
        }
    }
    return true;
}

}  // namespace

const char* matrix_class_name(MatrixClass c) {
    switch (c) {
        case MatrixClass::SDD: return "SDD";
        case MatrixClass::MMatrix: return "M_MATRIX";
        case MatrixClass::HMatrix: return "H_MATRIX";
        case MatrixClass::None: return "NONE";
    }
    return "?";
}

Matrix comparison_matrix(const Matrix& a) {
    const std::size_t n = a.size();
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = (i == j) ? std::fabs(a(i, j)) : -std::fabs(a(i, j));
        }
    }
    return m;
}

bool is_sdd(const Matrix& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double diag = std::fabs(a(i, i));
        if (!(diag > kernels::abs_sum(a.row(i), n) - diag)) return false;
    }
    return true;
}

bool dominance_holds(const Matrix& a, const Vector& x) {
    const std::size_t n = a.size();
    if (x.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(x[i] > 0.0)) return false;
        if (!(std::fabs(a(i, i)) * x[i] > off_diag_abs_dot(a.row(i), x, i, n))) return false;
    }
    return true;
}

std::optional<Vector> gsdd_witness(const Matrix& a, const WitnessOptions& opt) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a(i, i) == 0.0) return std::nullopt;  // dominance unsatisfiable
    }
    const std::size_t max_iter = opt.max_iter ? opt.max_iter : 10 * n + 10000;

    Vector x(n, 1.0);
    Vector next(n);
    for (std::size_t k = 0; k < max_iter; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            next[i] = off_diag_abs_dot(a.row(i), x, i, n) / std::fabs(a(i, i)) + 1.0;
        }
        const double diff = kernels::inf_norm_diff(next.data(), x.data(), n);
        x.swap(next);
        if (kernels::inf_norm(x.data(), n) > opt.divergence_bound) return std::nullopt;
        if (diff < opt.tol) {
            if (!dominance_holds(a, x)) return std::nullopt;
            return x;
        }
    }
    return std::nullopt;
}

// SDD short-circuits: the all-ones vector is already a witness, so the flag
// implication SDD => H holds even when the iteration would be slow to
// converge (dominance margins near zero).
bool is_h_matrix(const Matrix& a) {
    return is_sdd(a) || gsdd_witness(a).has_value();
}

bool is_m_matrix(const Matrix& a) {
    return z_pattern_positive_diag(a) && is_h_matrix(a);
}

double estimate_jacobi_radius(const Matrix& a, int steps) {
    const std::size_t n = a.size();
    Vector v(n, 1.0);
    Vector w(n);
    double estimate = 0.0;
    for (int s = 0; s < steps; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = off_diag_abs_dot(a.row(i), v, i, n) / std::fabs(a(i, i));
        }
        estimate = kernels::inf_norm(w.data(), n);
        if (estimate == 0.0) return 0.0;  // no off-diagonal mass left
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / estimate;
    }
    return estimate;
}

Classification classify(const Matrix& a) {
    Classification c;
    c.sdd = is_sdd(a);

    std::optional<Vector> witness;
    if (c.sdd) {
        witness = Vector(a.size(), 1.0);
        c.h_matrix = true;
    } else {
        witness = gsdd_witness(a);
        c.h_matrix = witness.has_value();
    }
    c.m_matrix = c.h_matrix && z_pattern_positive_diag(a);

    if (c.m_matrix) {
        c.verdict = MatrixClass::MMatrix;
    } else if (c.sdd) {
        c.verdict = MatrixClass::SDD;
    } else if (c.h_matrix) {
        c.verdict = MatrixClass::HMatrix;
    } else {
        c.verdict = MatrixClass::None;
    }

    if (c.verdict != MatrixClass::None) c.witness = std::move(witness);

    bool diag_ok = a.size() > 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a(i, i) == 0.0) diag_ok = false;
    }
    if (diag_ok) c.jacobi_radius_estimate = estimate_jacobi_radius(a);

    return c;
}

}  // namespace fls
