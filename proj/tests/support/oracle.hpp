#pragma once

#include <optional>

#include "fls/matrix.hpp"

namespace oracle {

/// Gaussian elimination with full pivoting, written independently of the
/// library's solver so the two can check each other. Returns nullopt when a
/// pivot falls to roundoff level (singular to working precision).
std::optional<fls::Vector> solve(fls::Matrix a, fls::Vector b);

/// Convenience wrapper: nonsingularity verdict by the same elimination.
bool nonsingular(const fls::Matrix& a);

}  // namespace oracle
