#pragma once

#include <cstdint>
#include <vector>

#include "phylocons/flat_tree.hpp"

namespace phylocons {

/// Day's cluster table: answers "does this cluster occur in the reference
/// tree" in O(1) after O(n) preprocessing.
///
/// Leaves are ranked in the reference's preorder. A reference cluster is then
/// an interval [l, r]; it is stored in row r if its node is the first child of
/// its parent and in row l otherwise, so no row holds two intervals.
class ClusterTable {
 public:
  explicit ClusterTable(const FlatTree& reference);
  explicit ClusterTable(const Tree& reference) : ClusterTable(flatten(reference)) {}

  std::size_t universe_size() const { return rank_.size(); }
  int rank(Label label) const { return rank_[static_cast<std::size_t>(label)]; }
  /// Interval [lo, hi] of `size` leaf ranks.
  bool contains(int lo, int hi, int size) const;

 private:
  std::vector<int> rank_;
  std::vector<int> left_;
  std::vector<int> right_;
};

ClusterTable build_cluster_table(const Tree& reference);

/// flag[v] == 1 iff the cluster of v occurs in the table's reference tree.
std::vector<std::uint8_t> mark_common_clusters(const FlatTree& t, const ClusterTable& table);
/// Indexed by Tree node id; holes get 0.
std::vector<std::uint8_t> mark_common_clusters(const Tree& t, const ClusterTable& table);

}  // namespace phylocons
