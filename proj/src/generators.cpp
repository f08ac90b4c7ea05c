#include "robustcurve/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>
#include <vector>

#include "robustcurve/errors.hpp"
#include "robustcurve/rng.hpp"

namespace robustcurve {
namespace {

std::uint64_t pair_key(Edge e, std::size_t n) { return static_cast<std::uint64_t>(e.u) * n + e.v; }

// Draws `count` distinct unordered pairs uniformly, in draw order.
std::vector<Edge> sample_distinct_pairs(std::size_t n, std::size_t count, Rng& rng) {
    std::vector<Edge> picked;
    picked.reserve(count);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(2 * count);
    while (picked.size() < count) {
        const auto a = static_cast<NodeId>(rng.uniform_below(n));
        const auto b = static_cast<NodeId>(rng.uniform_below(n));
        if (a == b) continue;
        const auto e = make_edge(a, b);
        if (seen.insert(pair_key(e, n)).second) picked.push_back(e);
    }
    return picked;
}

}  // namespace

Graph generate_er(std::size_t n, double mean_degree, std::uint64_t seed) {
    if (n < 2) throw ParameterError("ER graph needs at least 2 nodes");
    if (!(mean_degree >= 0.0) || !std::isfinite(mean_degree)) {
        throw ParameterError("mean degree must be a finite non-negative number");
    }
    const std::uint64_t max_edges = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const double target = std::round(static_cast<double>(n) * mean_degree / 2.0);
    if (target > static_cast<double>(max_edges)) {
        throw ParameterError("mean degree " + std::to_string(mean_degree) + " is infeasible for " +
                             std::to_string(n) + " nodes");
    }
    const auto edge_target = static_cast<std::size_t>(target);

    Rng rng(seed, Rng::kGeneratorStream);
    if (2 * edge_target <= max_edges) {
        return Graph(n, sample_distinct_pairs(n, edge_target, rng));
    }
    // Dense case: sample the complement instead, then enumerate the rest.
    const auto excluded = sample_distinct_pairs(n, max_edges - edge_target, rng);
    std::unordered_set<std::uint64_t> skip;
    for (const auto& e : excluded) skip.insert(pair_key(e, n));
    std::vector<Edge> edges;
    edges.reserve(edge_target);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (!skip.contains(pair_key({u, v}, n))) edges.push_back({u, v});
        }
    }
    return Graph(n, std::move(edges));
}

Graph generate_ba(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (m < 1) throw ParameterError("BA attachment count m must be at least 1");
    if (n <= m) throw ParameterError("BA graph needs n > m");

    std::vector<Edge> edges;
    edges.reserve(m * (m - 1) / 2 + (n - m) * m);
    // Every edge endpoint appears once here, so a uniform pick is degree-proportional.
    std::vector<NodeId> endpoints;
    endpoints.reserve(2 * edges.capacity());
    for (NodeId u = 0; u < m; ++u) {
        for (NodeId v = u + 1; v < m; ++v) {
            edges.push_back({u, v});
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    }

    Rng rng(seed, Rng::kGeneratorStream);
    std::vector<NodeId> targets;
    targets.reserve(m);
    for (auto fresh = static_cast<NodeId>(m); fresh < n; ++fresh) {
        targets.clear();
        while (targets.size() < m) {
            // Only reachable for m = 1 on the single-node seed, which has no edges yet.
            const NodeId pick =
                endpoints.empty() ? static_cast<NodeId>(rng.uniform_below(fresh))
                                  : endpoints[rng.uniform_below(endpoints.size())];
            if (std::find(targets.begin(), targets.end(), pick) == targets.end()) {
                targets.push_back(pick);
            }
        }
        for (const NodeId t : targets) {
            edges.push_back(make_edge(t, fresh));
            endpoints.push_back(t);
            endpoints.push_back(fresh);
        }
    }
    return Graph(n, std::move(edges));
}

}  // namespace robustcurve
