#pragma once

// Per-element bodies shared by the serial and OpenMP kernels.

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>

#include "cae/cim.hpp"

namespace cae::kernels::detail {

inline std::size_t row_count(std::span<const double> rows, std::size_t dim) {
    if (dim == 0 || rows.size() % dim != 0) {
        throw std::invalid_argument("kernel: matrix size is not a multiple of the dimension");
    }
    return rows.size() / dim;
}

inline void require_size(std::size_t have, std::size_t want) {
    if (have != want) {
        throw std::invalid_argument("kernel: output buffer has the wrong size");
    }
}

// Fills row i of the upper triangle (j >= i); diagonal is exp(1 - 0) = e.
inline void similarity_row(const double* rows, std::size_t n, std::size_t dim,
                           double two_sigma_sq, std::size_t i, double* out) {
    const double* yi = rows + i * dim;
    out[i * n + i] = std::exp(1.0);
    for (std::size_t j = i + 1; j < n; ++j) {
        const double c = cae::detail::cim_unchecked(yi, rows + j * dim, dim, two_sigma_sq);
        out[i * n + j] = std::exp(1.0 - c);
    }
}

inline void mirror_upper(std::size_t n, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            out[j * n + i] = out[i * n + j];
        }
    }
}

// CIM is symmetric bit-for-bit (diff*diff is sign-agnostic), so pair (i, j)
// evaluated from either side gives the same value.
inline double min_cim_to_others(const double* rows, std::size_t n, std::size_t dim,
                                double two_sigma_sq, std::size_t i) {
    double best = std::numeric_limits<double>::infinity();
    const double* yi = rows + i * dim;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const double c = cae::detail::cim_unchecked(yi, rows + j * dim, dim, two_sigma_sq);
        if (c < best) best = c;
    }
    return best;
}

inline std::size_t argmin_cim(const double* x, const double* rows, std::size_t n,
                              std::size_t dim, double two_sigma_sq) {
    std::size_t best = 0;
    double best_value = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
        const double c = cae::detail::cim_unchecked(x, rows + j * dim, dim, two_sigma_sq);
        if (c < best_value) {
            best_value = c;
            best = j;
        }
    }
    return best;
}

}  // namespace cae::kernels::detail
