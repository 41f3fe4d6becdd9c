#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "phylocons/flat_tree.hpp"

namespace phylocons {

/// Constant-time lowest common ancestor queries over a FlatTree.
///
/// Uses the preorder property: for u < v with v outside u's subtree, the lca
/// is the parent of the shallowest node with id in (u, v].
class LcaIndex {
 public:
  explicit LcaIndex(const FlatTree& t);

  NodeId lca(NodeId u, NodeId v) const;
  /// Folds pairwise lca left to right; throws std::invalid_argument if empty.
  NodeId lca(std::span<const NodeId> nodes) const;

 private:
  NodeId shallowest(NodeId lo, NodeId hi) const;  // inclusive range

  const FlatTree* tree_;
  std::vector<std::vector<NodeId>> table_;
};

/// Maximum weight along vertical paths, by ancestor doubling.
class PathMaxIndex {
 public:
  /// Weights are indexed by node id; they need not be the tree's own weights.
  PathMaxIndex(const FlatTree& t, std::span<const int> weights);
  explicit PathMaxIndex(const FlatTree& t) : PathMaxIndex(t, t.weight) {}

  /// Max over the path from `anc` down to `desc`, both included.
  int path_max(NodeId anc, NodeId desc) const;
  /// As path_max but without `anc`; 0 when anc == desc.
  int path_max_below(NodeId anc, NodeId desc) const;
  /// Without either endpoint; 0 when the path has no interior.
  int max_strictly_between(NodeId anc, NodeId desc) const;

 private:
  int climb(NodeId v, int count) const;  // max over v and its next count-1 ancestors
  void require_ancestor(NodeId anc, NodeId desc) const;

  const FlatTree* tree_;
  std::vector<std::vector<NodeId>> up_;
  std::vector<std::vector<int>> max_;
};

/// Ordered multiset of (key, handle) pairs with removal by handle. Handles are
/// node ids below the bound given at construction.
class MaxMultiset {
 public:
  explicit MaxMultiset(std::size_t handle_bound) : key_(handle_bound, 0), present_(handle_bound, 0) {}

  void insert(NodeId handle, int key);
  /// Throws std::logic_error if the handle is absent.
  void remove(NodeId handle);
  bool contains(NodeId handle) const { return present_[static_cast<std::size_t>(handle)] != 0; }
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  /// Largest key; throws std::logic_error when empty.
  int max() const;

 private:
  std::set<std::pair<int, NodeId>> items_;
  std::vector<int> key_;
  std::vector<std::uint8_t> present_;
};

}  // namespace phylocons
