#pragma once

#include <cstddef>
#include <span>

#include "cae/cim.hpp"

namespace cae {

/// Determinant kept as sign and log-magnitude; the raw value over- or
/// underflows for node sets of a few hundred.
struct LogDeterminant {
    int sign = 0;             // -1, 0 or +1; 0 marks an exactly singular matrix
    double log_abs = 0.0;     // ln|det|, -inf when sign == 0

    double value() const noexcept;
};

/// LU factorization with partial pivoting of a row-major n x n matrix.
LogDeterminant log_determinant(std::span<const double> matrix, std::size_t n);

/// Pairwise-similarity determinant of a node set: det(R) with
/// R_ij = exp(1 - CIM(y_i, y_j, sigma)). `nodes` is row-major with `dim` columns.
LogDeterminant diversity_log(std::span<const double> nodes, std::size_t dim, Bandwidth sigma);

/// det(R) as a plain double (may be +-inf or 0 after over/underflow).
double diversity(std::span<const double> nodes, std::size_t dim, Bandwidth sigma);

/// Cut-off below which |det(R)| marks the node set as redundant.
inline constexpr double kDiversityThreshold = 1e-6;

/// |det(R)| < kDiversityThreshold, decided in log space.
bool below_diversity_threshold(const LogDeterminant& det) noexcept;

}  // namespace cae
