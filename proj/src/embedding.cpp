#include "fls/embedding.hpp"

#include "fls/errors.hpp"

namespace fls {

Embedding build_embedding(const Matrix& a, const std::vector<FuzzyNumber>& b) {
    const std::size_t n = a.size();
    if (b.size() != n) {
        throw DimensionError("build_embedding: right-hand side length does not match matrix size");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_valid(b[i])) {
            throw InvalidFuzzyNumberError("build_embedding: b[" + std::to_string(i) +
                                          "] is not a valid fuzzy number");
        }
    }

    Embedding e;
    e.n = n;
    e.s1 = Matrix(n);
    e.s2 = Matrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = a(i, j);
            if (v > 0.0) {
                e.s1(i, j) = v;
            } else {
                e.s2(i, j) = v;  // exact: s1 + s2 == a entrywise
            }
        }
    }

    const std::size_t m = 2 * n;
    e.s = Matrix(m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            e.s(i, j) = e.s1(i, j);
            e.s(i, n + j) = e.s2(i, j);
            e.s(n + i, j) = e.s2(i, j);
            e.s(n + i, n + j) = e.s1(i, j);
        }
    }

    e.perm = build_permutation(e.s);
    e.s_tilde = apply_row_permutation(e.s, e.perm);

    e.y_intercept.resize(m);
    e.y_slope.resize(m);
    for (std::size_t i = 0; i < n; ++i) {
        e.y_intercept[i] = b[i].lower_intercept;
        e.y_slope[i] = b[i].lower_slope;
        e.y_intercept[n + i] = b[i].upper_intercept;
        e.y_slope[n + i] = b[i].upper_slope;
    }
    return e;
}

Embedding build_embedding(const Matrix& a) {
    return build_embedding(a, std::vector<FuzzyNumber>(a.size()));
}

std::vector<std::size_t> build_permutation(const Matrix& s) {
    const std::size_t m = s.size();
    const std::size_t n = m / 2;
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;
    for (std::size_t i = 0; i < n; ++i) {
        if (s(i, i) == 0.0) perm[i] = i + n;
    }
    for (std::size_t i = n; i < m; ++i) {
        if (s(i, i) == 0.0) perm[i] = i - n;
    }
    return perm;
}

Matrix apply_row_permutation(const Matrix& s, const std::vector<std::size_t>& perm) {
    const std::size_t m = s.size();
    if (perm.size() != m) throw DimensionError("apply_row_permutation: permutation length mismatch");
    Matrix out(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) out(i, j) = s(perm[i], j);
    }
    return out;
}

Vector apply_permutation(const Vector& v, const std::vector<std::size_t>& perm) {
    if (perm.size() != v.size()) throw DimensionError("apply_permutation: permutation length mismatch");
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[perm[i]];
    return out;
}

Matrix permutation_matrix(const std::vector<std::size_t>& perm) {
    Matrix p(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) p(i, perm[i]) = 1.0;
    return p;
}

Vector extend_witness(const Vector& x) {
    Vector out(2 * x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = x[i];
        out[x.size() + i] = x[i];
    }
    return out;
}

}  // namespace fls
