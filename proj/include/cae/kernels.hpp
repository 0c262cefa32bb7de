#pragma once

// Data-parallel CIM kernels over row-major matrices.
//
// `serial` is the reference implementation. `parallel` splits the outer loop
// across OpenMP threads; every output element is computed by exactly the same
// expression as in `serial`, so the two are bit-identical. The unqualified
// functions in `cae::kernels` dispatch to `parallel` when the library was
// built with OpenMP and the problem is large enough to amortize thread start.

#include <cstddef>
#include <span>

namespace cae::kernels {

/// Below this many (rows x dim) scalar evaluations the dispatcher stays serial.
inline constexpr std::size_t kParallelWorkThreshold = std::size_t{1} << 15;

namespace serial {

/// out[i] = CIM(x, rows[i], sigma) for each of rows.size()/dim rows.
void cim_to_rows(std::span<const double> x, std::span<const double> rows, std::size_t dim,
                 double sigma, std::span<double> out);

/// n x n matrix R with R[i][j] = exp(1 - CIM(row_i, row_j, sigma)).
void similarity_matrix(std::span<const double> rows, std::size_t dim, double sigma,
                       std::span<double> out);

/// out[i] = min over j != i of CIM(row_i, row_j, sigma). Requires n >= 2.
void nearest_other_cim(std::span<const double> rows, std::size_t dim, double sigma,
                       std::span<double> out);

/// out[p] = index of the row with minimal CIM to point p; lowest index on ties.
void nearest_rows(std::span<const double> points, std::span<const double> rows,
                  std::size_t dim, double sigma, std::span<std::size_t> out);

}  // namespace serial

namespace parallel {

void cim_to_rows(std::span<const double> x, std::span<const double> rows, std::size_t dim,
                 double sigma, std::span<double> out);
void similarity_matrix(std::span<const double> rows, std::size_t dim, double sigma,
                       std::span<double> out);
void nearest_other_cim(std::span<const double> rows, std::size_t dim, double sigma,
                       std::span<double> out);
void nearest_rows(std::span<const double> points, std::span<const double> rows,
                  std::size_t dim, double sigma, std::span<std::size_t> out);

}  // namespace parallel

/// True when the parallel namespace was compiled with OpenMP.
bool parallel_enabled() noexcept;

/// Number of threads the parallel kernels would use.
int max_threads() noexcept;

void cim_to_rows(std::span<const double> x, std::span<const double> rows, std::size_t dim,
                 double sigma, std::span<double> out);
void similarity_matrix(std::span<const double> rows, std::size_t dim, double sigma,
                       std::span<double> out);
void nearest_other_cim(std::span<const double> rows, std::size_t dim, double sigma,
                       std::span<double> out);
void nearest_rows(std::span<const double> points, std::span<const double> rows,
                  std::size_t dim, double sigma, std::span<std::size_t> out);

}  // namespace cae::kernels
