#include "robustcurve/graph.hpp"

#include <algorithm>
#include <string>

#include "robustcurve/dsu.hpp"
#include "robustcurve/errors.hpp"

namespace robustcurve {

Graph::Graph(std::size_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        if (e.u == e.v) throw ParameterError("self-loop on node " + std::to_string(e.u));
        e = make_edge(e.u, e.v);
        if (e.v >= node_count_) {
            throw ParameterError("edge endpoint " + std::to_string(e.v) + " out of range for " +
                                 std::to_string(node_count_) + " nodes");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw ParameterError("duplicate edge");
    }

    offsets_.assign(node_count_ + 1, 0);
    for (const auto& e : edges_) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    for (std::size_t v = 0; v < node_count_; ++v) offsets_[v + 1] += offsets_[v];

    neighbors_.resize(2 * edges_.size());
    incident_.resize(2 * edges_.size());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    // Smaller neighbors first, then larger ones: with edges sorted this leaves
    // every neighbor list ascending.
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        const auto& e = edges_[id];
        neighbors_[cursor[e.v]] = e.u;
        incident_[cursor[e.v]++] = id;
    }
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        const auto& e = edges_[id];
        neighbors_[cursor[e.u]] = e.v;
        incident_[cursor[e.u]++] = id;
    }
}

double Graph::mean_degree() const noexcept {
    if (node_count_ == 0) return 0.0;
    return 2.0 * static_cast<double>(edges_.size()) / static_cast<double>(node_count_);
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
    return std::span<const NodeId>(neighbors_).subspan(offsets_.at(v), degree(v));
}

std::span<const EdgeId> Graph::incident_edges(NodeId v) const {
    return std::span<const EdgeId>(incident_).subspan(offsets_.at(v), degree(v));
}

std::optional<EdgeId> Graph::find_edge(NodeId a, NodeId b) const {
    if (a >= node_count_ || b >= node_count_ || a == b) return std::nullopt;
    const auto key = make_edge(a, b);
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
}

std::uint64_t edge_degree(const Graph& g, EdgeId e) {
    if (e >= g.edge_count()) throw LookupError("edge id " + std::to_string(e) + " out of range");
    const auto& edge = g.edge(e);
    return static_cast<std::uint64_t>(g.degree(edge.u)) * g.degree(edge.v);
}

std::uint64_t edge_degree(const Graph& g, NodeId a, NodeId b) {
    const auto id = g.find_edge(a, b);
    if (!id) {
        throw LookupError("(" + std::to_string(a) + ", " + std::to_string(b) + ") is not an edge");
    }
    return edge_degree(g, *id);
}

std::size_t lcc_size(const Graph& g, const std::vector<bool>& active_nodes,
                     const std::vector<bool>& active_edges) {
    if (active_nodes.size() != g.node_count() || active_edges.size() != g.edge_count()) {
        throw ParameterError("activity masks do not match the graph size");
    }
    DsuForest forest(g.node_count(), false);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (active_nodes[v]) forest.activate(v);
    }
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const auto& e = g.edge(id);
        if (active_edges[id] && active_nodes[e.u] && active_nodes[e.v]) forest.unite(e.u, e.v);
    }
    return forest.max_size();
}

std::size_t lcc_size(const Graph& g) {
    DsuForest forest(g.node_count());
    for (const auto& e : g.edges()) forest.unite(e.u, e.v);
    return forest.max_size();
}

}  // namespace robustcurve
