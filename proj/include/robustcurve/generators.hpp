#pragma once

#include <cstddef>
#include <cstdint>

#include "robustcurve/graph.hpp"

namespace robustcurve {

/// Erdos-Renyi G(n, M) graph with M = round(n * mean_degree / 2) edges drawn
/// uniformly without replacement.
Graph generate_er(std::size_t n, double mean_degree, std::uint64_t seed);

/// Barabasi-Albert graph: a complete seed graph on m nodes, then every new
/// node attaches to m distinct existing nodes chosen with probability
/// proportional to degree. M = m(m-1)/2 + (n-m)m.
Graph generate_ba(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace robustcurve
