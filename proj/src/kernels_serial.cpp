#include "cae/kernels.hpp"

#include "kernels_common.hpp"

namespace cae::kernels::serial {

void cim_to_rows(std::span<const double> x, std::span<const double> rows, std::size_t dim,
                 double sigma, std::span<double> out) {
    const std::size_t n = detail::row_count(rows, dim);
    detail::require_size(out.size(), n);
    detail::require_size(x.size(), dim);
    const double tss = cae::detail::two_sigma_sq(sigma);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = cae::detail::cim_unchecked(x.data(), rows.data() + i * dim, dim, tss);
    }
}

void similarity_matrix(std::span<const double> rows, std::size_t dim, double sigma,
                       std::span<double> out) {
    const std::size_t n = detail::row_count(rows, dim);
    detail::require_size(out.size(), n * n);
    const double tss = cae::detail::two_sigma_sq(sigma);
    for (std::size_t i = 0; i < n; ++i) {
        detail::similarity_row(rows.data(), n, dim, tss, i, out.data());
    }
    detail::mirror_upper(n, out.data());
}

void nearest_other_cim(std::span<const double> rows, std::size_t dim, double sigma,
                       std::span<double> out) {
    const std::size_t n = detail::row_count(rows, dim);
    detail::require_size(out.size(), n);
    if (n < 2) {
        throw std::invalid_argument("nearest_other_cim: need at least two rows");
    }
    const double tss = cae::detail::two_sigma_sq(sigma);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = detail::min_cim_to_others(rows.data(), n, dim, tss, i);
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
    for (std::size_t p = 0; p < m; ++p) {
        out[p] = detail::argmin_cim(points.data() + p * dim, rows.data(), n, dim, tss);
    }
}

}  // namespace cae::kernels::serial
