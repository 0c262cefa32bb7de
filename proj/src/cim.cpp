#include "cae/cim.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cae {

namespace {

void require_finite(std::span<const double> values, const char* what) {
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument(std::string(what) + " contains a non-finite value");
        }
    }
}

}  // namespace

Bandwidth::Bandwidth(double sigma) : sigma_(sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("bandwidth must be positive and finite, got " +
                                    std::to_string(sigma));
    }
}

double gaussian_kernel(double a, double b, Bandwidth sigma) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("gaussian_kernel: non-finite argument");
    }
    const double diff = a - b;
    return std::exp(-(diff * diff) / detail::two_sigma_sq(sigma.value()));
}

double cim(std::span<const double> x, std::span<const double> y, Bandwidth sigma) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("cim: dimension mismatch (" + std::to_string(x.size()) +
                                    " vs " + std::to_string(y.size()) + ")");
    }
    if (x.empty()) {
        throw std::invalid_argument("cim: zero-dimensional input");
    }
    require_finite(x, "cim: x");
    require_finite(y, "cim: y");
    return detail::cim_unchecked(x.data(), y.data(), x.size(),
                                 detail::two_sigma_sq(sigma.value()));
}

double median(std::vector<double> values) {
    if (values.empty()) {
        throw std::invalid_argument("median of an empty list");
    }
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) {
        return values[n / 2];
    }
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

Bandwidth estimate_bandwidth(std::span<const double> samples, std::size_t dim) {
    if (dim == 0) {
        throw std::invalid_argument("estimate_bandwidth: zero dimension");
    }
    if (samples.empty() || samples.size() % dim != 0) {
        throw std::invalid_argument("estimate_bandwidth: need a non-empty n x d sample matrix");
    }
    require_finite(samples, "estimate_bandwidth: samples");

    const std::size_t n = samples.size() / dim;
    const double count = static_cast<double>(n);
    const double d = static_cast<double>(dim);
    const double scale =
        std::pow(4.0 / (2.0 + d), 1.0 / (4.0 + d)) * std::pow(count, -1.0 / (4.0 + d));

    std::vector<double> per_attribute(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            mean += samples[i * dim + j];
        }
        mean /= count;
        double sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double dev = samples[i * dim + j] - mean;
            sq += dev * dev;
        }
        per_attribute[j] = scale * std::sqrt(sq / count);
    }

    const double sigma = median(std::move(per_attribute));
    return Bandwidth(sigma > 0.0 ? sigma : kMinBandwidth);
}

Bandwidth estimate_bandwidth(const std::vector<Vector>& samples) {
    if (samples.empty()) {
        throw std::invalid_argument("estimate_bandwidth: empty sample list");
    }
    const std::size_t dim = samples.front().size();
    std::vector<double> flat;
    flat.reserve(samples.size() * dim);
    for (const auto& s : samples) {
        if (s.size() != dim) {
            throw std::invalid_argument("estimate_bandwidth: samples differ in dimension");
        }
        flat.insert(flat.end(), s.begin(), s.end());
    }
    return estimate_bandwidth(flat, dim);
}

}  // namespace cae
