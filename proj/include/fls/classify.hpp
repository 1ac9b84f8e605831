#pragma once

#include <cstddef>
#include <optional>

#include "fls/matrix.hpp"

namespace fls {

enum class MatrixClass { SDD, MMatrix, HMatrix, None };

const char* matrix_class_name(MatrixClass c);

/// Classification record: the most specific verdict (M before SDD before H),
/// the individual property flags, and, for any verdict other than None, a
/// strictly positive witness x with
///
///   |a_ii| x_i > sum_{j != i} |a_ij| x_j   for every row i.
///
/// jacobi_radius_estimate is a power-iteration estimate of the spectral
/// radius of D^-1 B (D = |diagonal|, B = off-diagonal absolute values);
/// informational only, absent when the diagonal has zeros.
struct Classification {
    MatrixClass verdict = MatrixClass::None;
    bool sdd = false;
    bool m_matrix = false;
    bool h_matrix = false;
    std::optional<Vector> witness;
    std::optional<double> jacobi_radius_estimate;
};

/// Comparison matrix: |a_ii| on the diagonal, -|a_ij| off it.
Matrix comparison_matrix(const Matrix& a);

/// Strict diagonal dominance with the all-ones vector.
bool is_sdd(const Matrix& a);

struct WitnessOptions {
    double tol = 1e-12;           // sup-norm convergence threshold
    std::size_t max_iter = 0;     // 0 -> 10*n + 10000
    double divergence_bound = 1e12;
};

/// Searches for a positive vector satisfying the strict dominance
/// inequalities above via the fixed-point iteration x <- Jx + e with
/// J = D^-1 B and x0 = e. The iteration converges exactly when such a vector
/// exists; the limit has dominance margin |a_ii| in row i. Returns nullopt on
/// divergence, on hitting max_iter (matrices with spectral radius of J very
/// close to 1 land here), or when the diagonal has a zero.
std::optional<Vector> gsdd_witness(const Matrix& a, const WitnessOptions& opt = {});

/// True when gsdd_witness succeeds.
bool is_h_matrix(const Matrix& a);

/// Sign pattern (positive diagonal, nonpositive off-diagonal) plus the
/// H-matrix test. For this sign pattern the matrix equals its own comparison
/// matrix, so no inverse is computed.
bool is_m_matrix(const Matrix& a);

/// Power-iteration estimate of the spectral radius of D^-1 B; requires a
/// zero-free diagonal.
double estimate_jacobi_radius(const Matrix& a, int steps = 50);

/// Runs all three tests and assembles the record. SDD matrices carry the
/// all-ones witness; other verdicts carry the computed one.
Classification classify(const Matrix& a);

/// Checks the strict dominance inequalities for a candidate witness.
bool dominance_holds(const Matrix& a, const Vector& x);

}  // namespace fls
