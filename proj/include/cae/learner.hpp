#pragma once

// Parameter-free ART topological clustering: initialization by diversity
// driven active-set sizing, similarity-threshold estimation, CIM winner
// selection, three-way vigilance test, node/edge updates, adaptive edge
// deletion and periodic isolated-node pruning.

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "cae/cim.hpp"
#include "cae/diversity.hpp"
#include "cae/network.hpp"

namespace cae {

/// Recency-ordered set of node ids (oldest first) bounded by a capacity.
class ActiveNodeSet {
public:
    ActiveNodeSet() = default;
    explicit ActiveNodeSet(std::size_t capacity) : capacity_(capacity) {}

    /// Moves an existing member to the newest position, or appends a new one
    /// and evicts the oldest when the capacity is exceeded.
    void touch(NodeId id);
    bool remove(NodeId id);
    bool contains(NodeId id) const noexcept;

    /// Changes the capacity, dropping oldest entries if needed.
    void set_capacity(std::size_t capacity);
    void clear() noexcept { entries_.clear(); }

    std::size_t capacity() const noexcept { return capacity_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const std::deque<NodeId>& entries() const noexcept { return entries_; }

    friend bool operator==(const ActiveNodeSet&, const ActiveNodeSet&) = default;

private:
    std::size_t capacity_ = 0;
    std::deque<NodeId> entries_;
};

/// Running count and mean of every edge age ever deleted.
struct DeletedEdgeStats {
    std::uint64_t count = 0;
    double mean_age = 0.0;

    void record(double age) noexcept {
        ++count;
        mean_age += (age - mean_age) / static_cast<double>(count);
    }

    friend bool operator==(const DeletedEdgeStats&, const DeletedEdgeStats&) = default;
};

struct LearnerState {
    std::size_t dimension = 0;
    TopoNetwork net;
    ActiveNodeSet active;
    std::optional<std::size_t> lambda;
    std::optional<double> v_threshold;
    DeletedEdgeStats deleted;
    std::uint64_t presented_count = 0;

    LearnerState() = default;
    explicit LearnerState(std::size_t dim) : dimension(dim), net(dim) {}

    friend bool operator==(const LearnerState&, const LearnerState&) = default;
};

enum class VigilanceCase { kNewNode, kUpdateWinner, kUpdateAndLink };

/// Optional hooks fired during training (used by tests and diagnostics).
class TrainObserver {
public:
    virtual ~TrainObserver() = default;
    virtual void edge_threshold(std::span<const EdgeAge> /*alpha*/, double /*a_max*/) {}
    virtual void edge_deleted(NodeId /*a*/, NodeId /*b*/, EdgeAge /*age*/) {}
};

struct Winners {
    NodeId s1;
    double v_s1;
    std::optional<NodeId> s2;
    std::optional<double> v_s2;
};

/// det(R) over `nodes` for the given bandwidth.
double diversity(const std::vector<Vector>& nodes, Bandwidth sigma);

/// One initialization step: if the node set is redundant (|det R| < 1e-6)
/// set lambda = 2|Y|, give every node the rule-of-thumb bandwidth of the
/// node set, refill the active set with all nodes and compute the
/// similarity threshold. Otherwise clear lambda and the threshold.
/// Returns the resulting lambda.
std::optional<std::size_t> estimate_lambda(LearnerState& state);

/// Mean over active nodes of the CIM to their nearest other active node,
/// using the mean bandwidth of the active nodes.
double compute_similarity_threshold(const TopoNetwork& net, const ActiveNodeSet& active);

Winners select_winners(const LearnerState& state, std::span<const double> x);

VigilanceCase vigilance_case(double v_s1, std::optional<double> v_s2, double v_threshold) noexcept;

/// Linear interpolation at fractional rank p*(n-1) of the sorted values.
double percentile(std::vector<double> values, double p);

/// a_max = mean_del * w + (P75 + IQR) * (1 - w), w = |del| / (|del| + |alpha|).
double estimate_edge_threshold(std::span<const EdgeAge> alpha, const DeletedEdgeStats& stats);

/// Removes edges at s1 whose age is strictly above a_max, recording each age.
std::size_t delete_over_age_edges(LearnerState& state, NodeId s1, double a_max,
                                  TrainObserver* observer = nullptr);

/// Node and edge updates for the vigilance outcome, followed (for the two
/// update cases) by edge-threshold estimation and deletion at s1.
void apply_case(LearnerState& state, std::span<const double> x, const Winners& winners,
                VigilanceCase which, TrainObserver* observer = nullptr);

/// Consumes one data point.
void train_point(LearnerState& state, std::span<const double> x,
                 TrainObserver* observer = nullptr);

/// Trains on every row of a row-major matrix, in order.
void train(LearnerState& state, std::span<const double> rows);

/// Connected-component label of each point's nearest node.
std::vector<NodeId> label_points(const LearnerState& state, std::span<const double> rows);

}  // namespace cae
