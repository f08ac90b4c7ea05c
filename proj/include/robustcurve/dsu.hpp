#pragma once

#include <cstddef>
#include <vector>

#include "robustcurve/graph.hpp"

namespace robustcurve {

/// Union-find over a fixed node universe where nodes can be switched on
/// one at a time. Tracks the largest component size among active nodes.
class DsuForest {
  public:
    /// With all_active = false every node starts absent (size 0) and must be
    /// activate()d before it takes part in unions.
    explicit DsuForest(std::size_t node_count, bool all_active = true);

    void activate(NodeId v);
    bool is_active(NodeId v) const { return active_[v]; }

    NodeId find(NodeId v);

    /// Merges the components of a and b. Both must be active.
    /// Returns false when they were already connected.
    bool unite(NodeId a, NodeId b);

    std::size_t component_size(NodeId v) { return size_[find(v)]; }
    std::size_t max_size() const noexcept { return max_size_; }

  private:
    std::vector<NodeId> parent_;
    std::vector<std::size_t> size_;
    std::vector<bool> active_;
    std::size_t max_size_ = 0;
};

}  // namespace robustcurve
