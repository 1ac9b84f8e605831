#pragma once

#include <cstddef>
#include <vector>

#include "fls/fuzzy.hpp"
#include "fls/matrix.hpp"

namespace fls {

/// The 2n x 2n real embedding of a system A x = b with crisp A and fuzzy b.
///
/// A splits into s1 (its positive entries, zeros elsewhere) and s2 = A - s1
/// (nonpositive); the embedded matrix is the block form
///
///   s = [ s1  s2 ]
///       [ s2  s1 ]
///
/// so that rows 1..n carry the lower bounds and rows n+1..2n the upper
/// bounds. perm is the row permutation that moves every zero diagonal entry
/// of s to its partner block, making the permuted matrix s_tilde = P s
/// inherit A's dominance class. Because the fuzzy data are affine in the
/// membership level r, the right-hand side is carried as two coefficient
/// vectors (intercepts, slopes); solving against each gives the affine
/// solution.
struct Embedding {
    std::size_t n = 0;  // dimension of A; the embedded system is 2n x 2n
    Matrix s1;
    Matrix s2;
    Matrix s;
    std::vector<std::size_t> perm;  // row i of s_tilde is row perm[i] of s
    Matrix s_tilde;
    Vector y_intercept;  // stacked (lower; upper) intercepts of b
    Vector y_slope;      // stacked (lower; upper) slopes of b
};

/// Assembles the embedding. Throws DimensionError when b.size() != a.size()
/// and InvalidFuzzyNumberError when some b_i is not a valid fuzzy number.
Embedding build_embedding(const Matrix& a, const std::vector<FuzzyNumber>& b);

/// Embedding of the matrix alone (zero right-hand side).
Embedding build_embedding(const Matrix& a);

/// The row permutation: identity except that an index with a zero diagonal
/// entry of s maps to its partner index in the other block half. The
/// construction is an involution.
std::vector<std::size_t> build_permutation(const Matrix& s);

/// Matrix whose row i is row perm[i] of s.
Matrix apply_row_permutation(const Matrix& s, const std::vector<std::size_t>& perm);

/// Vector with entries picked by perm: out[i] = v[perm[i]].
Vector apply_permutation(const Vector& v, const std::vector<std::size_t>& perm);

/// Dense 0/1 matrix P with P(i, perm[i]) = 1, for display and dumps.
Matrix permutation_matrix(const std::vector<std::size_t>& perm);

/// Doubles a dominance witness for A into one for the permuted embedding:
/// (x; x).
Vector extend_witness(const Vector& x);

}  // namespace fls
