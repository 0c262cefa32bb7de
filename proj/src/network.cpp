#include "cae/network.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cae {

namespace {

// Union-find with path halving; roots are not rank-balanced because the
// final label is recomputed as the minimum member id anyway.
std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
    while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    return i;
}

std::string id_str(NodeId id) { return std::to_string(id); }

}  // namespace

TopoNetwork::TopoNetwork(std::size_t dim) : dim_(dim) {}

std::optional<std::size_t> TopoNetwork::index_of(NodeId id) const noexcept {
    const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t TopoNetwork::require_index(NodeId id) const {
    if (auto idx = index_of(id)) return *idx;
    throw std::out_of_range("unknown node id " + id_str(id));
}

NodeId TopoNetwork::add_node(std::span<const double> weight, Bandwidth sigma) {
    if (weight.empty()) {
        throw std::invalid_argument("add_node: empty weight vector");
    }
    if (dim_ == 0) {
        dim_ = weight.size();
    } else if (weight.size() != dim_) {
        throw std::invalid_argument("add_node: dimension " + std::to_string(weight.size()) +
                                    " does not match network dimension " +
                                    std::to_string(dim_));
    }
    const NodeId id = next_id_++;
    ids_.push_back(id);
    weights_.insert(weights_.end(), weight.begin(), weight.end());
    win_counts_.push_back(1);
    sigmas_.push_back(sigma.value());
    adjacency_.emplace_back();
    return id;
}

std::span<const double> TopoNetwork::weight(NodeId id) const {
    return std::span<const double>(weights_).subspan(require_index(id) * dim_, dim_);
}

std::span<double> TopoNetwork::weight_mut(NodeId id) {
    return std::span<double>(weights_).subspan(require_index(id) * dim_, dim_);
}

std::uint64_t TopoNetwork::win_count(NodeId id) const { return win_counts_[require_index(id)]; }

void TopoNetwork::set_win_count(NodeId id, std::uint64_t count) {
    if (count == 0) {
        throw std::invalid_argument("win count must be at least 1");
    }
    win_counts_[require_index(id)] = count;
}

double TopoNetwork::sigma(NodeId id) const { return sigmas_[require_index(id)]; }

void TopoNetwork::set_sigma(NodeId id, Bandwidth sigma) {
    sigmas_[require_index(id)] = sigma.value();
}

void TopoNetwork::set_all_sigmas(Bandwidth sigma) {
    std::fill(sigmas_.begin(), sigmas_.end(), sigma.value());
}

double TopoNetwork::mean_sigma() const {
    if (sigmas_.empty()) {
        throw std::logic_error("mean_sigma: network is empty");
    }
    double sum = 0.0;
    for (double s : sigmas_) sum += s;
    return sum / static_cast<double>(sigmas_.size());
}

std::vector<NodeId> TopoNetwork::neighbors(NodeId id) const {
    const auto& adj = adjacency_[require_index(id)];
    std::vector<NodeId> out;
    out.reserve(adj.size());
    for (const auto& [other, age] : adj) out.push_back(other);
    return out;
}

std::size_t TopoNetwork::degree(NodeId id) const { return adjacency_[require_index(id)].size(); }

std::optional<EdgeAge> TopoNetwork::edge_age(NodeId k, NodeId l) const {
    const auto& adj = adjacency_[require_index(k)];
    require_index(l);
    const auto it = adj.find(l);
    if (it == adj.end()) return std::nullopt;
    return it->second;
}

void TopoNetwork::set_edge(NodeId k, NodeId l) {
    if (k == l) {
        throw std::invalid_argument("set_edge: self-loop on node " + id_str(k));
    }
    const auto ik = index_of(k);
    const auto il = index_of(l);
    if (!ik || !il) {
        throw std::invalid_argument("set_edge: unknown node id");
    }
    adjacency_[*ik][l] = 1;
    adjacency_[*il][k] = 1;
}

std::vector<std::pair<NodeId, EdgeAge>> TopoNetwork::increment_edge_ages(NodeId k) {
    auto& adj = adjacency_[require_index(k)];
    std::vector<std::pair<NodeId, EdgeAge>> touched;
    touched.reserve(adj.size());
    for (auto& [other, age] : adj) {
        ++age;
        adjacency_[require_index(other)][k] = age;
        touched.emplace_back(other, age);
    }
    return touched;
}

std::vector<EdgeAge> TopoNetwork::incident_ages(NodeId k) const {
    const auto& adj = adjacency_[require_index(k)];
    std::vector<EdgeAge> ages;
    ages.reserve(adj.size());
    for (const auto& [other, age] : adj) ages.push_back(age);
    return ages;
}

EdgeAge TopoNetwork::delete_edge(NodeId k, NodeId l) {
    const auto ik = index_of(k);
    const auto il = index_of(l);
    if (!ik || !il) {
        throw std::out_of_range("delete_edge: unknown node id");
    }
    auto it = adjacency_[*ik].find(l);
    if (it == adjacency_[*ik].end()) {
        throw std::out_of_range("delete_edge: no edge between " + id_str(k) + " and " +
                                id_str(l));
    }
    const EdgeAge age = it->second;
    adjacency_[*ik].erase(it);
    adjacency_[*il].erase(k);
    return age;
}

std::vector<NodeId> TopoNetwork::delete_isolated_nodes() {
    std::vector<NodeId> removed;
    std::size_t keep = 0;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (adjacency_[i].empty()) {
            removed.push_back(ids_[i]);
            continue;
        }
        if (keep != i) {
            ids_[keep] = ids_[i];
            std::copy_n(weights_.begin() + static_cast<std::ptrdiff_t>(i * dim_), dim_,
                        weights_.begin() + static_cast<std::ptrdiff_t>(keep * dim_));
            win_counts_[keep] = win_counts_[i];
            sigmas_[keep] = sigmas_[i];
            adjacency_[keep] = std::move(adjacency_[i]);
        }
        ++keep;
    }
    ids_.resize(keep);
    weights_.resize(keep * dim_);
    win_counts_.resize(keep);
    sigmas_.resize(keep);
    adjacency_.resize(keep);
    return removed;
}

std::size_t TopoNetwork::edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& adj : adjacency_) twice += adj.size();
    return twice / 2;
}

std::vector<Edge> TopoNetwork::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        for (const auto& [other, age] : adjacency_[i]) {
            if (ids_[i] < other) out.push_back(Edge{ids_[i], other, age});
        }
    }
    return out;
}

std::vector<NodeId> TopoNetwork::component_labels() const {
    const std::size_t n = ids_.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [other, age] : adjacency_[i]) {
            const std::size_t j = *index_of(other);
            const std::size_t ri = find_root(parent, i);
            const std::size_t rj = find_root(parent, j);
            // Keep the lower index as root: ids ascend with index, so the root
            // is always the smallest member id.
            if (ri < rj) {
                parent[rj] = ri;
            } else if (rj < ri) {
                parent[ri] = rj;
            }
        }
    }
    std::vector<NodeId> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = ids_[find_root(parent, i)];
    return labels;
}

std::map<NodeId, NodeId> TopoNetwork::connected_components() const {
    const auto labels = component_labels();
    std::map<NodeId, NodeId> out;
    for (std::size_t i = 0; i < ids_.size(); ++i) out.emplace(ids_[i], labels[i]);
    return out;
}

std::size_t TopoNetwork::component_count() const {
    const auto labels = component_labels();
    std::size_t count = 0;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (labels[i] == ids_[i]) ++count;
    }
    return count;
}

TopoNetwork TopoNetwork::restore(std::size_t dim, NodeId next_id, std::vector<NodeRecord> nodes,
                                 const std::vector<Edge>& edges) {
    if (dim == 0) {
        throw std::invalid_argument("restore: zero dimension");
    }
    std::sort(nodes.begin(), nodes.end(),
              [](const NodeRecord& a, const NodeRecord& b) { return a.id < b.id; });
    TopoNetwork net(dim);
    for (const auto& rec : nodes) {
        if (!net.ids_.empty() && net.ids_.back() == rec.id) {
            throw std::invalid_argument("restore: duplicate node id " + id_str(rec.id));
        }
        if (rec.id >= next_id) {
            throw std::invalid_argument("restore: node id " + id_str(rec.id) +
                                        " not below next_id");
        }
        if (rec.weight.size() != dim) {
            throw std::invalid_argument("restore: node weight dimension mismatch");
        }
        if (rec.win_count == 0) {
            throw std::invalid_argument("restore: win count must be at least 1");
        }
        for (double v : rec.weight) {
            if (!std::isfinite(v)) throw std::invalid_argument("restore: non-finite weight");
        }
        const Bandwidth sigma(rec.sigma);
        net.ids_.push_back(rec.id);
        net.weights_.insert(net.weights_.end(), rec.weight.begin(), rec.weight.end());
        net.win_counts_.push_back(rec.win_count);
        net.sigmas_.push_back(sigma.value());
        net.adjacency_.emplace_back();
    }
    net.next_id_ = next_id;
    for (const auto& e : edges) {
        if (e.age == 0) {
            throw std::invalid_argument("restore: edge age must be at least 1");
        }
        const auto ia = net.index_of(e.a);
        const auto ib = net.index_of(e.b);
        if (e.a == e.b || !ia || !ib) {
            throw std::invalid_argument("restore: edge references an invalid node pair");
        }
        if (net.adjacency_[*ia].count(e.b) != 0) {
            throw std::invalid_argument("restore: duplicate edge");
        }
        net.adjacency_[*ia][e.b] = e.age;
        net.adjacency_[*ib][e.a] = e.age;
    }
    return net;
}

}  // namespace cae
