#pragma once

// Test-only reference computations. Nothing here calls into the library's
// union-find or residual-graph code.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace oracle {

/// Largest component by depth-first search over an explicit edge list.
inline std::size_t largest_component(std::size_t n, const std::vector<bool>& alive,
                                     const std::vector<std::pair<unsigned, unsigned>>& edges) {
    std::vector<std::vector<unsigned>> adj(n);
    for (const auto& [a, b] : edges) {
        if (!alive[a] || !alive[b]) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(n, 0);
    std::size_t best = 0;
    for (unsigned root = 0; root < n; ++root) {
        if (!alive[root] || seen[root]) continue;
        std::size_t size = 0;
        std::vector<unsigned> stack{root};
        seen[root] = 1;
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            ++size;
            for (const auto w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        best = std::max(best, size);
    }
    return best;
}

/// Half-up rounding of j * population / steps by floating arithmetic,
/// only valid for the small sizes used in tests.
inline std::size_t removal_count(std::size_t j, std::size_t population, std::size_t steps) {
    return static_cast<std::size_t>(static_cast<double>(j) * population / steps + 0.5 + 1e-12);
}

}  // namespace oracle
