#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace cae {

using Vector = std::vector<double>;

/// Bandwidth floor used when the rule-of-thumb estimate collapses to zero
/// (all samples identical along the median attribute).
inline constexpr double kMinBandwidth = 1e-6;

/// Positive kernel bandwidth. Construction rejects non-positive or
/// non-finite values.
class Bandwidth {
public:
    explicit Bandwidth(double sigma);

    double value() const noexcept { return sigma_; }

    friend bool operator==(const Bandwidth&, const Bandwidth&) = default;

private:
    double sigma_;
};

/// exp(-(a - b)^2 / (2 sigma^2)), unnormalized so the peak is exactly 1.
double gaussian_kernel(double a, double b, Bandwidth sigma);

/// Correntropy-induced metric between two equal-length vectors.
/// Result lies in [0, 1] and is 0 only for identical inputs.
double cim(std::span<const double> x, std::span<const double> y, Bandwidth sigma);

/// Rule-of-thumb (Silverman) bandwidth over a row-major sample matrix with
/// `dim` columns. Per-attribute population standard deviations are scaled
/// by (4/(2+d))^(1/(4+d)) * n^(-1/(4+d)) and the median of the result is
/// returned; kMinBandwidth if that median is zero.
Bandwidth estimate_bandwidth(std::span<const double> samples, std::size_t dim);
Bandwidth estimate_bandwidth(const std::vector<Vector>& samples);

/// Median with the even-length case averaged over the two middle values.
double median(std::vector<double> values);

namespace detail {

// Shared by the checked entry point and every kernel so that all code paths
// produce bit-identical CIM values. Attributes are summed left to right.
inline double cim_unchecked(const double* x, const double* y, std::size_t dim,
                            double two_sigma_sq) noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        const double diff = x[i] - y[i];
        sum += std::exp(-(diff * diff) / two_sigma_sq);
    }
    const double gap = 1.0 - sum / static_cast<double>(dim);
    return gap > 0.0 ? std::sqrt(gap) : 0.0;
}

inline double two_sigma_sq(double sigma) noexcept { return 2.0 * sigma * sigma; }

}  // namespace detail

}  // namespace cae
