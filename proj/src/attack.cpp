#include "robustcurve/attack.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "robustcurve/dsu.hpp"
#include "robustcurve/errors.hpp"
#include "robustcurve/parallel.hpp"
#include "robustcurve/rng.hpp"

namespace robustcurve {
namespace {

std::size_t population(const Graph& g, RemovalTarget target) {
    return target == RemovalTarget::Nodes ? g.node_count() : g.edge_count();
}

void check_order(const Graph& g, const RemovalOrder& order) {
    if (g.node_count() == 0) throw ParameterError("graph has no nodes");
    const auto count = population(g, order.target);
    if (order.items.size() != count) throw ParameterError("removal order has the wrong length");
    std::vector<bool> seen(count, false);
    for (const auto item : order.items) {
        if (item >= count || seen[item]) throw ParameterError("removal order is not a permutation");
        seen[item] = true;
    }
}

std::vector<std::uint32_t> identity(std::size_t count) {
    std::vector<std::uint32_t> items(count);
    std::iota(items.begin(), items.end(), 0u);
    return items;
}

std::vector<std::uint32_t> static_degree_order(const Graph& g) {
    auto items = identity(g.node_count());
    std::stable_sort(items.begin(), items.end(),
                     [&](NodeId a, NodeId b) { return g.degree(a) > g.degree(b); });
    return items;
}

std::vector<std::uint32_t> static_edge_degree_order(const Graph& g) {
    std::vector<std::uint64_t> weight(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) weight[e] = edge_degree(g, e);
    // Edge ids are already ranked by (min, max) endpoint, which settles ties.
    auto items = identity(g.edge_count());
    std::stable_sort(items.begin(), items.end(),
                     [&](EdgeId a, EdgeId b) { return weight[a] > weight[b]; });
    return items;
}

// Key (-degree, id) so that set::begin() is the next removal.
using RankKey = std::pair<std::int64_t, std::uint32_t>;

std::vector<std::uint32_t> adaptive_degree_order(const Graph& g) {
    std::vector<std::int64_t> degree(g.node_count());
    std::set<RankKey> queue;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        degree[v] = static_cast<std::int64_t>(g.degree(v));
        queue.emplace(-degree[v], v);
    }
    std::vector<bool> removed(g.node_count(), false);
    std::vector<std::uint32_t> items;
    items.reserve(g.node_count());
    while (!queue.empty()) {
        const NodeId v = queue.begin()->second;
        queue.erase(queue.begin());
        removed[v] = true;
        items.push_back(v);
        for (const NodeId w : g.neighbors(v)) {
            if (removed[w]) continue;
            queue.erase({-degree[w], w});
            --degree[w];
            queue.emplace(-degree[w], w);
        }
    }
    return items;
}

std::vector<std::uint32_t> adaptive_edge_degree_order(const Graph& g) {
    std::vector<std::int64_t> degree(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) degree[v] = static_cast<std::int64_t>(g.degree(v));
    auto weight = [&](EdgeId e) { return degree[g.edge(e).u] * degree[g.edge(e).v]; };

    std::vector<std::int64_t> key(g.edge_count());
    std::set<RankKey> queue;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        key[e] = weight(e);
        queue.emplace(-key[e], e);
    }
    std::vector<bool> removed(g.edge_count(), false);
    std::vector<std::uint32_t> items;
    items.reserve(g.edge_count());
    while (!queue.empty()) {
        const EdgeId e = queue.begin()->second;
        queue.erase(queue.begin());
        removed[e] = true;
        items.push_back(e);
        const auto [u, v] = g.edge(e);
        --degree[u];
        --degree[v];
        for (const NodeId end : {u, v}) {
            for (const EdgeId f : g.incident_edges(end)) {
                if (removed[f]) continue;
                queue.erase({-key[f], f});
                key[f] = weight(f);
                queue.emplace(-key[f], f);
            }
        }
    }
    return items;
}

// Largest component of the residual graph after removing the flagged items.
std::size_t residual_lcc_bfs(const Graph& g, RemovalTarget target, const std::vector<bool>& removed) {
    const auto n = g.node_count();
    std::vector<std::vector<NodeId>> adjacency(n);
    std::vector<bool> present(n, true);
    if (target == RemovalTarget::Nodes) {
        for (NodeId v = 0; v < n; ++v) present[v] = !removed[v];
    }
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const auto& e = g.edge(id);
        const bool keep = target == RemovalTarget::Nodes ? present[e.u] && present[e.v] : !removed[id];
        if (!keep) continue;
        adjacency[e.u].push_back(e.v);
        adjacency[e.v].push_back(e.u);
    }

    std::vector<bool> visited(n, false);
    std::size_t best = 0;
    std::queue<NodeId> frontier;
    for (NodeId root = 0; root < n; ++root) {
        if (!present[root] || visited[root]) continue;
        std::size_t size = 0;
        visited[root] = true;
        frontier.push(root);
        while (!frontier.empty()) {
            const NodeId v = frontier.front();
            frontier.pop();
            ++size;
            for (const NodeId w : adjacency[v]) {
                if (!visited[w]) {
                    visited[w] = true;
                    frontier.push(w);
                }
            }
        }
        best = std::max(best, size);
    }
    return best;
}

}  // namespace

std::string_view to_string(Scenario s) noexcept {
    switch (s) {
        case Scenario::Rnf: return "rnf";
        case Scenario::Hdaa: return "hdaa";
        case Scenario::Ref: return "ref";
        case Scenario::Hedaa: return "hedaa";
    }
    return "unknown";
}

Scenario parse_scenario(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (const auto s : {Scenario::Rnf, Scenario::Hdaa, Scenario::Ref, Scenario::Hedaa}) {
        if (lower == to_string(s)) return s;
    }
    throw ParameterError("unknown scenario '" + std::string(text) + "'");
}

Scenario scenario_from_code(std::uint8_t code) {
    if (code > 3) throw FormatError("unknown scenario code " + std::to_string(code));
    return static_cast<Scenario>(code);
}

CurveSpec::CurveSpec(std::size_t steps) : steps_(steps) {
    if (steps == 0) throw ParameterError("curve needs at least one step");
}

RemovalOrder removal_order(const Graph& g, Scenario scenario, std::uint64_t seed,
                           AttackOptions options) {
    if (g.node_count() == 0) throw ParameterError("graph has no nodes");
    RemovalOrder order{target_of(scenario), {}};
    switch (scenario) {
        case Scenario::Rnf:
        case Scenario::Ref: {
            order.items = identity(population(g, order.target));
            Rng rng(seed, Rng::kOrderStream);
            rng.shuffle(std::span(order.items));
            break;
        }
        case Scenario::Hdaa:
            order.items = options.adaptive ? adaptive_degree_order(g) : static_degree_order(g);
            break;
        case Scenario::Hedaa:
            order.items =
                options.adaptive ? adaptive_edge_degree_order(g) : static_edge_degree_order(g);
            break;
    }
    return order;
}

AttackCurve attack_curve(const Graph& g, const RemovalOrder& order, const CurveSpec& spec) {
    check_order(g, order);
    const auto n = static_cast<double>(g.node_count());
    const auto total = order.items.size();
    const bool nodes = order.target == RemovalTarget::Nodes;

    AttackCurve values(spec.steps());
    DsuForest forest(g.node_count(), !nodes);
    std::size_t restored = 0;
    for (std::size_t j = spec.steps(); j-- > 0;) {
        const auto keep = total - spec.removal_count(j, total);
        for (; restored < keep; ++restored) {
            const auto item = order.items[total - 1 - restored];
            if (nodes) {
                forest.activate(item);
                for (const NodeId w : g.neighbors(item)) {
                    if (forest.is_active(w)) forest.unite(item, w);
                }
            } else {
                const auto& e = g.edge(item);
                forest.unite(e.u, e.v);
            }
        }
        values[j] = static_cast<double>(forest.max_size()) / n;
    }
    return values;
}

AttackCurve naive_attack_curve(const Graph& g, const RemovalOrder& order, const CurveSpec& spec) {
    check_order(g, order);
    const auto n = static_cast<double>(g.node_count());
    const auto total = order.items.size();

    AttackCurve values(spec.steps());
    for (std::size_t j = 0; j < spec.steps(); ++j) {
        std::vector<bool> removed(total, false);
        const auto count = spec.removal_count(j, total);
        for (std::size_t i = 0; i < count; ++i) removed[order.items[i]] = true;
        values[j] = static_cast<double>(residual_lcc_bfs(g, order.target, removed)) / n;
    }
    return values;
}

AttackCurve resampled_attack_curve(const Graph& g, Scenario scenario, const CurveSpec& spec,
                                   std::uint64_t seed) {
    if (!is_random(scenario)) return attack_curve(g, removal_order(g, scenario, seed), spec);
    if (g.node_count() == 0) throw ParameterError("graph has no nodes");

    const bool nodes = target_of(scenario) == RemovalTarget::Nodes;
    const auto total = population(g, target_of(scenario));
    const auto n = static_cast<double>(g.node_count());
    Rng rng(seed, Rng::kOrderStream);
    auto pool = identity(total);

    AttackCurve values(spec.steps());
    for (std::size_t j = 0; j < spec.steps(); ++j) {
        const auto count = spec.removal_count(j, total);
        // Partial Fisher-Yates: the first `count` slots become a uniform subset.
        for (std::size_t i = 0; i < count; ++i) {
            const auto k = i + static_cast<std::size_t>(rng.uniform_below(total - i));
            std::swap(pool[i], pool[k]);
        }
        std::vector<bool> active_nodes(g.node_count(), true);
        std::vector<bool> active_edges(g.edge_count(), true);
        auto& mask = nodes ? active_nodes : active_edges;
        for (std::size_t i = 0; i < count; ++i) mask[pool[i]] = false;
        values[j] = static_cast<double>(lcc_size(g, active_nodes, active_edges)) / n;
    }
    return values;
}

std::vector<AttackCurve> curve_ensemble(const Graph& g, Scenario scenario, const CurveSpec& spec,
                                        std::size_t realizations, std::uint64_t seed,
                                        EnsembleOptions options) {
    if (realizations == 0) throw ParameterError("ensemble needs at least one realization");
    if (!is_random(scenario)) realizations = 1;

    std::vector<AttackCurve> curves(realizations);
    parallel_for(realizations, options.threads, [&](std::size_t r) {
        curves[r] = options.resample
                        ? resampled_attack_curve(g, scenario, spec, seed + r)
                        : simulate(g, scenario, spec, seed + r, {.adaptive = options.adaptive});
    });
    return curves;
}

AttackCurve simulate(const Graph& g, Scenario scenario, const CurveSpec& spec, std::uint64_t seed,
                     AttackOptions options) {
    return attack_curve(g, removal_order(g, scenario, seed, options), spec);
}

}  // namespace robustcurve
