#pragma once

#include <cstddef>

// Dense inner-loop kernels shared by the solvers. Scalar reference versions
// are always compiled; an AVX2/FMA variant (x86-64) or a NEON variant
// (aarch64) is selected at runtime when the CPU supports it. The environment
// variable FLS_KERNEL=scalar|avx2|neon forces a backend, which the
// equivalence tests use to compare variants against the scalar reference.

namespace fls::kernels {

enum class Backend { scalar, avx2, neon };

Backend active_backend();
const char* backend_name(Backend b);

// Switches the active backend. Returns false (and leaves the backend
// unchanged) when b is not usable on this CPU. Not thread-safe; intended for
// startup and tests.
bool set_backend(Backend b);
bool backend_available(Backend b);

double dot(const double* a, const double* b, std::size_t n);
// y += alpha * x
void axpy(double alpha, const double* x, double* y, std::size_t n);
// sum_i |w_i| * x_i
double abs_dot(const double* w, const double* x, std::size_t n);
double abs_sum(const double* a, std::size_t n);
// max_i |a_i|; 0 for n == 0
double inf_norm(const double* a, std::size_t n);
double inf_norm_diff(const double* a, const double* b, std::size_t n);

namespace detail {

struct KernelTable {
    double (*dot)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    double (*abs_dot)(const double*, const double*, std::size_t);
    double (*abs_sum)(const double*, std::size_t);
    double (*inf_norm)(const double*, std::size_t);
    double (*inf_norm_diff)(const double*, const double*, std::size_t);
};

const KernelTable& table();

}  // namespace detail

}  // namespace fls::kernels
