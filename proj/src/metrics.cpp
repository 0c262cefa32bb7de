#include "cae/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace cae {

namespace {

struct Contingency {
    std::map<std::pair<std::int64_t, std::int64_t>, double> cells;
    std::map<std::int64_t, double> rows;  // predicted marginals
    std::map<std::int64_t, double> cols;  // truth marginals
    double n = 0.0;
};

Contingency tabulate(std::span<const std::int64_t> predicted,
                     std::span<const std::int64_t> truth) {
    if (predicted.size() != truth.size()) {
        throw std::invalid_argument("labelings differ in length");
    }
    Contingency t;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        t.cells[{predicted[i], truth[i]}] += 1.0;
        t.rows[predicted[i]] += 1.0;
        t.cols[truth[i]] += 1.0;
    }
    t.n = static_cast<double>(predicted.size());
    return t;
}

double entropy(const std::map<std::int64_t, double>& marginal, double n) {
    double h = 0.0;
    for (const auto& [label, count] : marginal) {
        const double p = count / n;
        h -= p * std::log(p);
    }
    return h;
}

double choose2(double x) { return x * (x - 1.0) / 2.0; }

}  // namespace

double nmi(std::span<const std::int64_t> predicted, std::span<const std::int64_t> truth) {
    const Contingency t = tabulate(predicted, truth);
    if (t.n == 0.0) {
        throw std::invalid_argument("nmi: empty labelings");
    }
    const double hu = entropy(t.rows, t.n);
    const double hv = entropy(t.cols, t.n);
    if (t.rows.size() == 1 && t.cols.size() == 1) return 1.0;
    if (t.rows.size() == 1 || t.cols.size() == 1) return 0.0;

    double mi = 0.0;
    for (const auto& [key, count] : t.cells) {
        const double pu = t.rows.at(key.first);
        const double pv = t.cols.at(key.second);
        mi += (count / t.n) * std::log(count * t.n / (pu * pv));
    }
    const double value = mi / std::sqrt(hu * hv);
    return std::clamp(value, 0.0, 1.0);
}

double ari(std::span<const std::int64_t> predicted, std::span<const std::int64_t> truth) {
    const Contingency t = tabulate(predicted, truth);
    if (t.n < 2.0) {
        throw std::invalid_argument("ari: need at least two points");
    }
    double index = 0.0;
    for (const auto& [key, count] : t.cells) index += choose2(count);
    double sum_rows = 0.0;
    for (const auto& [label, count] : t.rows) sum_rows += choose2(count);
    double sum_cols = 0.0;
    for (const auto& [label, count] : t.cols) sum_cols += choose2(count);

    const double expected = sum_rows * sum_cols / choose2(t.n);
    const double max_index = 0.5 * (sum_rows + sum_cols);
    const double denom = max_index - expected;
    if (denom == 0.0) {
        // Both all-one-cluster or both all-singletons.
        return index == max_index ? 1.0 : 0.0;
    }
    return (index - expected) / denom;
}

std::size_t distinct_labels(std::span<const std::int64_t> labels) {
    return std::set<std::int64_t>(labels.begin(), labels.end()).size();
}

}  // namespace cae
