#include "cae/diversity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cae/kernels.hpp"

namespace cae {

double LogDeterminant::value() const noexcept {
    if (sign == 0) return 0.0;
    return static_cast<double>(sign) * std::exp(log_abs);
}

LogDeterminant log_determinant(std::span<const double> matrix, std::size_t n) {
    if (n == 0 || matrix.size() != n * n) {
        throw std::invalid_argument("log_determinant: expected a non-empty square matrix");
    }
    std::vector<double> a(matrix.begin(), matrix.end());
    LogDeterminant det{1, 0.0};
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(a[col * n + col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::abs(a[r * n + col]);
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0.0) {
            return LogDeterminant{0, -std::numeric_limits<double>::infinity()};
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a[col * n + c], a[pivot * n + c]);
            det.sign = -det.sign;
        }
        const double p = a[col * n + col];
        if (p < 0.0) det.sign = -det.sign;
        det.log_abs += std::log(std::abs(p));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = a[r * n + col] / p;
            if (factor == 0.0) continue;
            for (std::size_t c = col + 1; c < n; ++c) {
                a[r * n + c] -= factor * a[col * n + c];
            }
        }
    }
    return det;
}

LogDeterminant diversity_log(std::span<const double> nodes, std::size_t dim, Bandwidth sigma) {
    if (dim == 0 || nodes.empty() || nodes.size() % dim != 0) {
        throw std::invalid_argument("diversity: need a non-empty n x d node matrix");
    }
    const std::size_t n = nodes.size() / dim;
    std::vector<double> r(n * n);
    kernels::similarity_matrix(nodes, dim, sigma.value(), r);
    return log_determinant(r, n);
}

double diversity(std::span<const double> nodes, std::size_t dim, Bandwidth sigma) {
    return diversity_log(nodes, dim, sigma).value();
}

bool below_diversity_threshold(const LogDeterminant& det) noexcept {
    return det.sign == 0 || det.log_abs < std::log(kDiversityThreshold);
}

}  // namespace cae
