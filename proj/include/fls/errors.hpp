#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fls {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

// Malformed problem file; the message carries the offending field.
struct ParseError : Error {
    using Error::Error;
};

struct InvalidFuzzyNumberError : Error {
    using Error::Error;
};

// A pivot fell at or below the pivot floor during elimination.
struct SingularMatrixError : Error {
    SingularMatrixError(std::size_t column, const std::string& what)
        : Error(what), column(column) {}
    std::size_t column;
};

// classify() found none of the supported matrix classes.
struct UnsupportedMatrixClassError : Error {
    using Error::Error;
};

// Iterative solve stopped at max_iter with the residual still above tol.
struct ConvergenceError : Error {
    ConvergenceError(std::size_t iterations, double residual, const std::string& what)
        : Error(what), iterations(iterations), residual(residual) {}
    std::size_t iterations;
    double residual;
};

}  // namespace fls
