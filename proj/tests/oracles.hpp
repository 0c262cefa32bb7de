#pragma once

// Independent reference computations for tests. Nothing here calls into the
// library's numeric paths; each oracle takes a different (usually slower)
// route to the same quantity.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace oracle {

inline long double cim(std::span<const double> x, std::span<const double> y, double sigma) {
    long double acc = 0.0L;
    const long double s = sigma;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const long double diff = static_cast<long double>(x[i]) - y[i];
        acc += std::exp(-(diff * diff) / (2.0L * s * s));
    }
    return std::sqrt(1.0L - acc / static_cast<long double>(x.size()));
}

/// Rule-of-thumb bandwidth: population std per column, Silverman scaling, median.
inline long double silverman(const std::vector<std::vector<double>>& samples) {
    const std::size_t n = samples.size();
    const std::size_t d = samples.front().size();
    std::vector<long double> h;
    for (std::size_t j = 0; j < d; ++j) {
        long double mean = 0.0L;
        for (const auto& s : samples) mean += s[j];
        mean /= n;
        long double var = 0.0L;
        for (const auto& s : samples) var += (s[j] - mean) * (s[j] - mean);
        var /= n;
        h.push_back(std::pow(4.0L / (2.0L + d), 1.0L / (4.0L + d)) * std::sqrt(var) *
                    std::pow(static_cast<long double>(n), -1.0L / (4.0L + d)));
    }
    std::sort(h.begin(), h.end());
    return d % 2 == 1 ? h[d / 2] : (h[d / 2 - 1] + h[d / 2]) / 2.0L;
}

/// Leibniz expansion over all permutations. Only for n <= 8.
inline long double determinant(const std::vector<double>& m, std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    long double total = 0.0L;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        long double term = inversions % 2 == 0 ? 1.0L : -1.0L;
        for (std::size_t i = 0; i < n; ++i) term *= m[i * n + perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Boolean transitive closure (Warshall) of an undirected adjacency matrix.
inline std::vector<std::vector<bool>> reachability(std::vector<std::vector<bool>> adj) {
    const std::size_t n = adj.size();
    for (std::size_t i = 0; i < n; ++i) adj[i][i] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (adj[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (adj[k][j]) adj[i][j] = true;
    return adj;
}

/// Piecewise-linear interpolation through (i/(n-1), sorted_i).
inline double percentile(std::vector<double> v, double p) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    if (n == 1) return v[0];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double a = static_cast<double>(i) / static_cast<double>(n - 1);
        const double b = static_cast<double>(i + 1) / static_cast<double>(n - 1);
        if (p >= a && p <= b) {
            const double t = (p - a) / (b - a);
            return (1.0 - t) * v[i] + t * v[i + 1];
        }
    }
    return v.back();
}

/// ARI from the four pair counts, enumerating all n(n-1)/2 pairs.
inline double ari_pairs(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v) {
    double a = 0, b = 0, c = 0, d = 0;  // same/same, same/diff, diff/same, diff/diff
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            const bool su = u[i] == u[j];
            const bool sv = v[i] == v[j];
            if (su && sv) a += 1;
            else if (su) b += 1;
            else if (sv) c += 1;
            else d += 1;
        }
    }
    const double denom = (a + b) * (b + d) + (a + c) * (c + d);
    if (denom == 0.0) return 1.0;
    return 2.0 * (a * d - b * c) / denom;
}

/// NMI from per-point counts: every point contributes log terms of the sizes
/// of its own cluster, class and intersection. O(n^2).
inline double nmi_points(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v) {
    const std::size_t n = u.size();
    const double nn = static_cast<double>(n);
    double hu = 0, hv = 0, mi = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double cu = 0, cv = 0, cuv = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (u[j] == u[i]) cu += 1;
            if (v[j] == v[i]) cv += 1;
            if (u[j] == u[i] && v[j] == v[i]) cuv += 1;
        }
        hu -= std::log(cu / nn) / nn;
        hv -= std::log(cv / nn) / nn;
        mi += std::log(nn * cuv / (cu * cv)) / nn;
    }
    if (hu == 0.0 && hv == 0.0) return 1.0;
    if (hu == 0.0 || hv == 0.0) return 0.0;
    return mi / std::sqrt(hu * hv);
}

inline bool close_rel(long double got, long double want, long double rel) {
    const long double scale = std::max<long double>(std::abs(want), 1e-300L);
    return std::abs(got - want) <= rel * scale;
}

}  // namespace oracle
