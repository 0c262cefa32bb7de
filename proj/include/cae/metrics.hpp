#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cae {

/// One integer cluster id per point; ids need not be contiguous.
using ClusterLabeling = std::vector<std::int64_t>;

/// Normalized mutual information, I(U;V) / sqrt(H(U) H(V)), natural logs.
/// Two single-cluster labelings score 1; otherwise a zero entropy scores 0.
double nmi(std::span<const std::int64_t> predicted, std::span<const std::int64_t> truth);

/// Adjusted Rand index (Hubert-Arabie). Requires at least two points.
/// When the chance-corrected denominator vanishes, identical partitions
/// score 1 and anything else 0.
double ari(std::span<const std::int64_t> predicted, std::span<const std::int64_t> truth);

/// Number of distinct ids.
std::size_t distinct_labels(std::span<const std::int64_t> labels);

}  // namespace cae
