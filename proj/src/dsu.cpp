#include "robustcurve/dsu.hpp"

#include <numeric>

namespace robustcurve {

DsuForest::DsuForest(std::size_t node_count, bool all_active)
    : parent_(node_count), size_(node_count, all_active ? 1 : 0), active_(node_count, all_active),
      max_size_(all_active && node_count > 0 ? 1 : 0) {
    std::iota(parent_.begin(), parent_.end(), NodeId{0});
}

void DsuForest::activate(NodeId v) {
    if (active_[v]) return;
    active_[v] = true;
    size_[v] = 1;
    if (max_size_ == 0) max_size_ = 1;
}

NodeId DsuForest::find(NodeId v) {
    // Path halving.
    while (parent_[v] != v) {
        parent_[v] = parent_[parent_[v]];
        v = parent_[v];
    }
    return v;
}

bool DsuForest::unite(NodeId a, NodeId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    if (size_[a] > max_size_) max_size_ = size_[a];
    return true;
}

}  // namespace robustcurve
