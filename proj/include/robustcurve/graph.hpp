#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace robustcurve {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Unordered node pair stored with u < v.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Normalizes (a, b) so that the smaller id comes first.
constexpr Edge make_edge(NodeId a, NodeId b) noexcept {
    return a < b ? Edge{a, b} : Edge{b, a};
}

/// Immutable undirected simple graph.
///
/// Edges are kept sorted lexicographically, so an EdgeId is the rank of the
/// pair (min, max) among all edges. Adjacency is stored in CSR form with
/// neighbors sorted ascending; each neighbor slot also records the id of the
/// connecting edge.
class Graph {
  public:
    Graph() = default;

    /// Throws ParameterError on self-loops, duplicate edges or out-of-range ids.
    Graph(std::size_t node_count, std::vector<Edge> edges);

    std::size_t node_count() const noexcept { return node_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// 2M / N, or 0 for the empty graph.
    double mean_degree() const noexcept;

    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }

    std::size_t degree(NodeId v) const { return offsets_.at(v + 1) - offsets_[v]; }
    std::span<const NodeId> neighbors(NodeId v) const;
    /// Edge ids parallel to neighbors(v).
    std::span<const EdgeId> incident_edges(NodeId v) const;

    std::optional<EdgeId> find_edge(NodeId a, NodeId b) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
    }

  private:
    std::size_t node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_ = {0};
    std::vector<NodeId> neighbors_;
    std::vector<EdgeId> incident_;
};

/// Edge degree k_u * k_v of an edge, evaluated on g.
std::uint64_t edge_degree(const Graph& g, EdgeId e);
/// Throws LookupError if {a, b} is not an edge of g.
std::uint64_t edge_degree(const Graph& g, NodeId a, NodeId b);

/// Size of the largest connected component of the subgraph induced by the
/// active nodes and the active edges. An active edge touching an inactive node
/// is ignored. Masks must have node_count() and edge_count() entries.
std::size_t lcc_size(const Graph& g, const std::vector<bool>& active_nodes,
                     const std::vector<bool>& active_edges);

/// Largest component of the full graph.
std::size_t lcc_size(const Graph& g);

}  // namespace robustcurve
