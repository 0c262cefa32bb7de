#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cae/cim.hpp"

namespace cae {

using NodeId = std::uint64_t;
using EdgeAge = std::uint64_t;

struct Edge {
    NodeId a;  // a < b
    NodeId b;
    EdgeAge age;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Node snapshot used when rebuilding a network from persisted state.
struct NodeRecord {
    NodeId id;
    Vector weight;
    std::uint64_t win_count;
    double sigma;
};

/// Nodes with prototype weights, winning counts and per-node bandwidths,
/// joined by undirected aged edges.
///
/// Nodes are kept in ascending id order in dense parallel arrays so the
/// winner search can stream over one contiguous weight matrix. Ids are issued
/// monotonically and never reused.
class TopoNetwork {
public:
    TopoNetwork() = default;
    explicit TopoNetwork(std::size_t dim);

    /// Appends a node with win_count 1. Fixes the dimension on first use.
    NodeId add_node(std::span<const double> weight, Bandwidth sigma);

    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    std::size_t dimension() const noexcept { return dim_; }
    NodeId next_id() const noexcept { return next_id_; }
    bool contains(NodeId id) const noexcept { return index_of(id).has_value(); }

    /// Dense position of `id` in the arrays below, if present.
    std::optional<std::size_t> index_of(NodeId id) const noexcept;

    std::span<const NodeId> ids() const noexcept { return ids_; }
    std::span<const double> weights() const noexcept { return weights_; }
    std::span<const double> sigmas() const noexcept { return sigmas_; }
    std::span<const std::uint64_t> win_counts() const noexcept { return win_counts_; }

    std::span<const double> weight(NodeId id) const;
    std::span<double> weight_mut(NodeId id);
    std::uint64_t win_count(NodeId id) const;
    void set_win_count(NodeId id, std::uint64_t count);
    double sigma(NodeId id) const;
    void set_sigma(NodeId id, Bandwidth sigma);
    void set_all_sigmas(Bandwidth sigma);

    /// Arithmetic mean of all node bandwidths, summed in id order.
    double mean_sigma() const;

    /// Neighbor ids in ascending order.
    std::vector<NodeId> neighbors(NodeId id) const;
    std::size_t degree(NodeId id) const;

    std::optional<EdgeAge> edge_age(NodeId k, NodeId l) const;

    /// Creates the edge or resets its age to 1.
    void set_edge(NodeId k, NodeId l);

    /// Increments every edge at `k`; returns (neighbor, new age) in neighbor order.
    std::vector<std::pair<NodeId, EdgeAge>> increment_edge_ages(NodeId k);

    /// Ages of the edges at `k` in neighbor order.
    std::vector<EdgeAge> incident_ages(NodeId k) const;

    /// Removes an existing edge and returns its age at removal time.
    EdgeAge delete_edge(NodeId k, NodeId l);

    /// Removes every node without edges; returns removed ids ascending.
    std::vector<NodeId> delete_isolated_nodes();

    std::size_t edge_count() const noexcept;
    std::vector<Edge> edges() const;

    /// Component label (smallest member id) for each node, aligned with ids().
    std::vector<NodeId> component_labels() const;
    std::map<NodeId, NodeId> connected_components() const;
    std::size_t component_count() const;

    /// Rebuilds a network from persisted parts, validating every invariant.
    static TopoNetwork restore(std::size_t dim, NodeId next_id, std::vector<NodeRecord> nodes,
                               const std::vector<Edge>& edges);

    friend bool operator==(const TopoNetwork&, const TopoNetwork&) = default;

private:
    std::size_t require_index(NodeId id) const;

    std::size_t dim_ = 0;
    NodeId next_id_ = 0;
    std::vector<NodeId> ids_;
    std::vector<double> weights_;
    std::vector<std::uint64_t> win_counts_;
    std::vector<double> sigmas_;
    std::vector<std::map<NodeId, EdgeAge>> adjacency_;
};

}  // namespace cae
