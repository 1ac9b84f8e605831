#include "fls/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <initializer_list>

namespace fls::kernels {

namespace {

double scalar_dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void scalar_axpy(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double scalar_abs_dot(const double* w, const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::fabs(w[i]) * x[i];
    return s;
}

double scalar_abs_sum(const double* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::fabs(a[i]);
    return s;
}

double scalar_inf_norm(const double* a, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(a[i]));
    return m;
}

double scalar_inf_norm_diff(const double* a, const double* b, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

constexpr detail::KernelTable scalar_table = {
    scalar_dot, scalar_axpy, scalar_abs_dot,
    scalar_abs_sum, scalar_inf_norm, scalar_inf_norm_diff,
};

}  // namespace

namespace detail {
#ifdef FLS_HAVE_AVX2
extern const KernelTable avx2_table;
#endif
#ifdef FLS_HAVE_NEON
extern const KernelTable neon_table;
#endif
}  // namespace detail

namespace {

bool cpu_supports(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#if defined(FLS_HAVE_AVX2)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Backend::neon:
#if defined(FLS_HAVE_NEON)
            return true;  // baseline on aarch64
#else
            return false;
#endif
    }
    return false;
}

const detail::KernelTable* table_for(Backend b) {
    switch (b) {
        case Backend::scalar:
            return &scalar_table;
#ifdef FLS_HAVE_AVX2
        case Backend::avx2:
            return &detail::avx2_table;
#endif
#ifdef FLS_HAVE_NEON
        case Backend::neon:
            return &detail::neon_table;
#endif
        default:
            return nullptr;
    }
}

struct Dispatch {
    Backend backend;
    const detail::KernelTable* table;
};

Dispatch resolve_initial() {
    if (const char* env = std::getenv("FLS_KERNEL")) {
        for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon}) {
            if (std::strcmp(env, backend_name(b)) == 0 && cpu_supports(b)) {
                return {b, table_for(b)};
            }
        }
    }
    if (cpu_supports(Backend::avx2)) return {Backend::avx2, table_for(Backend::avx2)};
    if (cpu_supports(Backend::neon)) return {Backend::neon, table_for(Backend::neon)};
    return {Backend::scalar, &scalar_table};
}

Dispatch& dispatch() {
    static Dispatch d = resolve_initial();
    return d;
}

}  // namespace

Backend active_backend() { return dispatch().backend; }

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
        case Backend::neon: return "neon";
    }
    return "?";
}

bool backend_available(Backend b) { return cpu_supports(b); }

bool set_backend(Backend b) {
    if (!cpu_supports(b)) return false;
    dispatch() = {b, table_for(b)};
    return true;
}

namespace detail {
const KernelTable& table() { return *dispatch().table; }
}  // namespace detail

double dot(const double* a, const double* b, std::size_t n) {
    return detail::table().dot(a, b, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    detail::table().axpy(alpha, x, y, n);
}

double abs_dot(const double* w, const double* x, std::size_t n) {
    return detail::table().abs_dot(w, x, n);
}

double abs_sum(const double* a, std::size_t n) {
    return detail::table().abs_sum(a, n);
}

double inf_norm(const double* a, std::size_t n) {
    return detail::table().inf_norm(a, n);
}

double inf_norm_diff(const double* a, const double* b, std::size_t n) {
    return detail::table().inf_norm_diff(a, b, n);
}

}  // namespace fls::kernels
