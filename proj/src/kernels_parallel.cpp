#include "cae/kernels.hpp"

#include <cstdint>

#include "kernels_common.hpp"

#if defined(CAE_HAVE_OPENMP)
#include <omp.h>
#endif

namespace cae::kernels {

namespace parallel {

void cim_to_rows(std::span<const double> x, std::span<const double> rows, std::size_t dim,
                 double sigma, std::span<double> out) {
    const std::size_t n = detail::row_count(rows, dim);
    detail::require_size(out.size(), n);
    detail::require_size(x.size(), dim);
    const double tss = cae::detail::two_sigma_sq(sigma);
    const double* xp = x.data();
    const double* rp = rows.data();
    double* op = out.data();
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        op[i] = cae::detail::cim_unchecked(xp, rp + i * static_cast<std::int64_t>(dim), dim, tss);
    }
}

void similarity_matrix(std::span<const double> rows, std::size_t dim, double sigma,
                       std::span<double> out) {
    const std::size_t n = detail::row_count(rows, dim);
    detail::require_size(out.size(), n * n);
    const double tss = cae::detail::two_sigma_sq(sigma);
    const double* rp = rows.data();
    double* op = out.data();
    const auto count = static_cast<std::int64_t>(n);
    // Upper-triangle rows shrink with i; dynamic chunks keep threads balanced.
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < count; ++i) {
        detail::similarity_row(rp, n, dim, tss, static_cast<std::size_t>(i), op);
    }
    detail::mirror_upper(n, op);
}

void nearest_other_cim(std::span<const double> rows, std::size_t dim, double sigma,
                       std::span<double> out) {
    const std::size_t n = detail::row_count(rows, dim);
    detail::require_size(out.size(), n);
    if (n < 2) {
        throw std::invalid_argument("nearest_other_cim: need at least two rows");
    }
    const double tss = cae::detail::two_sigma_sq(sigma);
    const double* rp = rows.data();
    double* op = out.data();
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        op[i] = detail::min_cim_to_others(rp, n, dim, tss, static_cast<std::size_t>(i));
    }
}

void nearest_rows(std::span<const double> points, std::span<const double> rows,
                  std::size_t dim, double sigma, std::span<std::size_t> out) {
    const std::size_t n = detail::row_count(rows, dim);
    const std::size_t m = detail::row_count(points, dim);
    detail::require_size(out.size(), m);
    if (n == 0) {
        throw std::invalid_argument("nearest_rows: no reference rows");
    }
    const double tss = cae::detail::two_sigma_sq(sigma);
    const double* pp = points.data();
    const double* rp = rows.data();
    std::size_t* op = out.data();
    const auto count = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static)
    for (std::int64_t p = 0; p < count; ++p) {
        op[p] = detail::argmin_cim(pp + p * static_cast<std::int64_t>(dim), rp, n, dim, tss);
    }
}

}  // namespace parallel

bool parallel_enabled() noexcept {
#if defined(CAE_HAVE_OPENMP)
    return true;
#else
    return false;
#endif
}

int max_threads() noexcept {
#if defined(CAE_HAVE_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

bool go_parallel(std::size_t work) noexcept {
    return parallel_enabled() && max_threads() > 1 && work >= kParallelWorkThreshold;
}

}  // namespace

void cim_to_rows(std::span<const double> x, std::span<const double> rows, std::size_t dim,
                 double sigma, std::span<double> out) {
    if (go_parallel(rows.size())) {
        parallel::cim_to_rows(x, rows, dim, sigma, out);
    } else {
        serial::cim_to_rows(x, rows, dim, sigma, out);
    }
}

void similarity_matrix(std::span<const double> rows, std::size_t dim, double sigma,
                       std::span<double> out) {
    const std::size_t n = dim == 0 ? 0 : rows.size() / dim;
    if (go_parallel(n * rows.size() / 2)) {
        parallel::similarity_matrix(rows, dim, sigma, out);
    } else {
        serial::similarity_matrix(rows, dim, sigma, out);
    }
}

void nearest_other_cim(std::span<const double> rows, std::size_t dim, double sigma,
                       std::span<double> out) {
    const std::size_t n = dim == 0 ? 0 : rows.size() / dim;
    if (go_parallel(n * rows.size())) {
        parallel::nearest_other_cim(rows, dim, sigma, out);
    } else {
        serial::nearest_other_cim(rows, dim, sigma, out);
    }
}

void nearest_rows(std::span<const double> points, std::span<const double> rows,
                  std::size_t dim, double sigma, std::span<std::size_t> out) {
    const std::size_t m = dim == 0 ? 0 : points.size() / dim;
    if (go_parallel(m * rows.size())) {
        parallel::nearest_rows(points, rows, dim, sigma, out);
    } else {
        serial::nearest_rows(points, rows, dim, sigma, out);
    }
}

}  // namespace cae::kernels
