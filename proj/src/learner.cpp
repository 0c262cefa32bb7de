#include "cae/learner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "cae/kernels.hpp"

namespace cae {

// ---------------------------------------------------------------------------
// ActiveNodeSet

void ActiveNodeSet::touch(NodeId id) {
    const auto it = std::find(entries_.begin(), entries_.end(), id);
    if (it != entries_.end()) {
        entries_.erase(it);
        entries_.push_back(id);
        return;
    }
    entries_.push_back(id);
    while (entries_.size() > capacity_) entries_.pop_front();
}

bool ActiveNodeSet::remove(NodeId id) {
    const auto it = std::find(entries_.begin(), entries_.end(), id);
    if (it == entries_.end()) return false;
    entries_.erase(it);
    return true;
}

bool ActiveNodeSet::contains(NodeId id) const noexcept {
    return std::find(entries_.begin(), entries_.end(), id) != entries_.end();
}

void ActiveNodeSet::set_capacity(std::size_t capacity) {
    capacity_ = capacity;
    while (entries_.size() > capacity_) entries_.pop_front();
}

// ---------------------------------------------------------------------------

namespace {

void require_dimension(const LearnerState& state, std::span<const double> x) {
    if (x.size() != state.dimension) {
        throw std::invalid_argument("data point has dimension " + std::to_string(x.size()) +
                                    ", learner expects " + std::to_string(state.dimension));
    }
    for (double v : x) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("data point contains a non-finite value");
        }
    }
}

std::vector<double> gather_weights(const TopoNetwork& net, const ActiveNodeSet& active) {
    std::vector<double> rows;
    rows.reserve(active.size() * net.dimension());
    for (NodeId id : active.entries()) {
        const auto w = net.weight(id);
        rows.insert(rows.end(), w.begin(), w.end());
    }
    return rows;
}

}  // namespace

double diversity(const std::vector<Vector>& nodes, Bandwidth sigma) {
    if (nodes.empty()) {
        throw std::invalid_argument("diversity: empty node set");
    }
    const std::size_t dim = nodes.front().size();
    std::vector<double> flat;
    flat.reserve(nodes.size() * dim);
    for (const auto& v : nodes) {
        if (v.size() != dim) throw std::invalid_argument("diversity: ragged node set");
        flat.insert(flat.end(), v.begin(), v.end());
    }
    return diversity(flat, dim, sigma);
}

std::optional<std::size_t> estimate_lambda(LearnerState& state) {
    const TopoNetwork& net = state.net;
    if (net.empty()) {
        state.lambda.reset();
        state.v_threshold.reset();
        return state.lambda;
    }
    const Bandwidth sigma = estimate_bandwidth(net.weights(), net.dimension());
    const LogDeterminant det = diversity_log(net.weights(), net.dimension(), sigma);
    if (!below_diversity_threshold(det)) {
        state.lambda.reset();
        state.v_threshold.reset();
        return state.lambda;
    }

    const std::size_t lambda = 2 * net.size();
    state.lambda = lambda;
    state.net.set_all_sigmas(sigma);
    state.active = ActiveNodeSet(lambda);
    for (NodeId id : net.ids()) state.active.touch(id);
    state.v_threshold = compute_similarity_threshold(state.net, state.active);
    return state.lambda;
}

double compute_similarity_threshold(const TopoNetwork& net, const ActiveNodeSet& active) {
    if (active.size() < 2) {
        throw std::logic_error("similarity threshold needs at least two active nodes");
    }
    const std::vector<double> rows = gather_weights(net, active);
    double sigma_sum = 0.0;
    for (NodeId id : active.entries()) sigma_sum += net.sigma(id);
    const double sigma = sigma_sum / static_cast<double>(active.size());

    std::vector<double> nearest(active.size());
    kernels::nearest_other_cim(rows, net.dimension(), sigma, nearest);
    double total = 0.0;
    for (double v : nearest) total += v;
    return total / static_cast<double>(active.size());
}

Winners select_winners(const LearnerState& state, std::span<const double> x) {
    const TopoNetwork& net = state.net;
    if (net.empty()) {
        throw std::logic_error("select_winners: network has no nodes");
    }
    require_dimension(state, x);
    std::vector<double> scores(net.size());
    kernels::cim_to_rows(x, net.weights(), net.dimension(), net.mean_sigma(), scores);

    constexpr double inf = std::numeric_limits<double>::infinity();
    std::size_t first = 0;
    std::size_t second = 0;
    double v1 = inf;
    double v2 = inf;
    bool have_second = false;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        const double v = scores[i];
        if (i == 0 || v < v1) {
            if (i != 0) {
                second = first;
                v2 = v1;
                have_second = true;
            }
            first = i;
            v1 = v;
        } else if (!have_second || v < v2) {
            second = i;
            v2 = v;
            have_second = true;
        }
    }

    Winners w{net.ids()[first], v1, std::nullopt, std::nullopt};
    if (have_second) {
        w.s2 = net.ids()[second];
        w.v_s2 = v2;
    }
    return w;
}

VigilanceCase vigilance_case(double v_s1, std::optional<double> v_s2,
                             double v_threshold) noexcept {
    if (v_threshold < v_s1) return VigilanceCase::kNewNode;
    if (!v_s2 || v_threshold < *v_s2) return VigilanceCase::kUpdateWinner;
    return VigilanceCase::kUpdateAndLink;
}

double percentile(std::vector<double> values, double p) {
    if (values.empty()) {
        throw std::invalid_argument("percentile of an empty list");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("percentile fraction must lie in [0, 1]");
    }
    std::sort(values.begin(), values.end());
    const double pos = p * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const double frac = pos - static_cast<double>(lo);
    if (lo + 1 >= values.size() || frac == 0.0) return values[lo];
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

double estimate_edge_threshold(std::span<const EdgeAge> alpha, const DeletedEdgeStats& stats) {
    if (alpha.empty()) {
        throw std::invalid_argument("estimate_edge_threshold: no incident edges");
    }
    std::vector<double> ages(alpha.begin(), alpha.end());
    const double p75 = percentile(ages, 0.75);
    const double p25 = percentile(std::move(ages), 0.25);
    const double a_thr = p75 + (p75 - p25);
    const double deleted = static_cast<double>(stats.count);
    const double w = deleted / (deleted + static_cast<double>(alpha.size()));
    return stats.mean_age * w + a_thr * (1.0 - w);
}

std::size_t delete_over_age_edges(LearnerState& state, NodeId s1, double a_max,
                                  TrainObserver* observer) {
    std::size_t removed = 0;
    for (NodeId k : state.net.neighbors(s1)) {
        const EdgeAge age = *state.net.edge_age(s1, k);
        if (static_cast<double>(age) > a_max) {
            state.net.delete_edge(s1, k);
            state.deleted.record(static_cast<double>(age));
            if (observer) observer->edge_deleted(s1, k, age);
            ++removed;
        }
    }
    return removed;
}

void apply_case(LearnerState& state, std::span<const double> x, const Winners& winners,
                VigilanceCase which, TrainObserver* observer) {
    require_dimension(state, x);
    TopoNetwork& net = state.net;

    if (which == VigilanceCase::kNewNode) {
        const Bandwidth sigma = state.active.empty()
                                    ? Bandwidth(net.mean_sigma())
                                    : estimate_bandwidth(gather_weights(net, state.active),
                                                         net.dimension());
        const NodeId id = net.add_node(x, sigma);
        state.active.touch(id);
        return;
    }

    const NodeId s1 = winners.s1;
    const std::uint64_t m = net.win_count(s1) + 1;
    net.set_win_count(s1, m);
    auto y = net.weight_mut(s1);
    for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] += (x[i] - y[i]) / static_cast<double>(m);
    }
    state.active.touch(s1);
    net.increment_edge_ages(s1);

    if (which == VigilanceCase::kUpdateAndLink) {
        if (!winners.s2) {
            throw std::logic_error("apply_case: link case without a second winner");
        }
        for (NodeId k : net.neighbors(s1)) {
            const double scale = 10.0 * static_cast<double>(net.win_count(k));
            auto yk = net.weight_mut(k);
            for (std::size_t i = 0; i < yk.size(); ++i) {
                yk[i] += (x[i] - yk[i]) / scale;
            }
        }
        net.set_edge(s1, *winners.s2);
    }

    const std::vector<EdgeAge> alpha = net.incident_ages(s1);
    if (alpha.empty()) return;
    const double a_max = estimate_edge_threshold(alpha, state.deleted);
    if (observer) observer->edge_threshold(alpha, a_max);
    delete_over_age_edges(state, s1, a_max, observer);
}

void train_point(LearnerState& state, std::span<const double> x, TrainObserver* observer) {
    require_dimension(state, x);
    ++state.presented_count;

    const bool initializing = !state.lambda || state.net.size() < *state.lambda / 2 ||
                              !state.v_threshold;
    if (initializing) {
        const Bandwidth sigma =
            state.net.empty() ? Bandwidth(kMinBandwidth) : Bandwidth(state.net.mean_sigma());
        state.net.add_node(x, sigma);
        estimate_lambda(state);
    } else {
        const Winners winners = select_winners(state, x);
        apply_case(state, x, winners,
                   vigilance_case(winners.v_s1, winners.v_s2, *state.v_threshold), observer);
    }

    if (state.lambda && state.presented_count % *state.lambda == 0) {
        for (NodeId id : state.net.delete_isolated_nodes()) state.active.remove(id);
    }
}

void train(LearnerState& state, std::span<const double> rows) {
    if (state.dimension == 0 || rows.size() % state.dimension != 0) {
        throw std::invalid_argument("train: row matrix does not match learner dimension");
    }
    for (std::size_t off = 0; off < rows.size(); off += state.dimension) {
        train_point(state, rows.subspan(off, state.dimension));
    }
}

std::vector<NodeId> label_points(const LearnerState& state, std::span<const double> rows) {
    const TopoNetwork& net = state.net;
    if (net.empty()) {
        throw std::logic_error("label_points: network has no nodes");
    }
    if (rows.size() % net.dimension() != 0) {
        throw std::invalid_argument("label_points: row matrix does not match network dimension");
    }
    for (double v : rows) {
        if (!std::isfinite(v)) throw std::invalid_argument("label_points: non-finite value");
    }
    const std::size_t m = rows.size() / net.dimension();
    std::vector<std::size_t> nearest(m);
    kernels::nearest_rows(rows, net.weights(), net.dimension(), net.mean_sigma(), nearest);
    const std::vector<NodeId> components = net.component_labels();
    std::vector<NodeId> labels(m);
    for (std::size_t p = 0; p < m; ++p) labels[p] = components[nearest[p]];
    return labels;
}

}  // namespace cae
