#pragma once

#include <cstdint>
#include <vector>

#include "phylocons/flat_tree.hpp"

namespace phylocons {

/// Where a cluster of `probe` sits relative to `host`.
struct Placement {
  enum class Kind : std::uint8_t { kIncompatible, kEqual, kSpan };
  Kind kind = Kind::kIncompatible;
  NodeId node = kNoNode;  // kEqual: the host node; kSpan: the host parent
  int first = 0;          // kSpan: child positions [first, last] in host order
  int last = 0;
};

/// Locates every cluster of `probe` in `host` in O(n).
///
/// Host children are reordered by the smallest probe-preorder rank of their
/// leaves. A probe cluster is then compatible with the host iff its leaves are
/// contiguous in host leaf order and start and end at the edges of either one
/// host node or a run of siblings.
class Embedding {
 public:
  Embedding(const FlatTree& host, const FlatTree& probe);

  const std::vector<Placement>& placements() const { return place_; }
  /// Host children in the reordered sequence.
  std::span<const NodeId> children(NodeId v) const {
    const auto b = static_cast<std::size_t>(offset_[static_cast<std::size_t>(v)]);
    const auto e = static_cast<std::size_t>(offset_[static_cast<std::size_t>(v) + 1]);
    return {kids_.data() + b, e - b};
  }

 private:
  std::vector<NodeId> offset_;
  std::vector<NodeId> kids_;
  std::vector<Placement> place_;
};

/// keep[v] == 1 iff the cluster of a's node v is compatible with every cluster of b.
std::vector<std::uint8_t> compatible_mask(const FlatTree& a, const FlatTree& b);

/// Tree with the clusters of `a` that are compatible with `b`. Weights of a are kept.
FlatTree one_way_compatible(const FlatTree& a, const FlatTree& b);
Tree one_way_compatible(const Tree& a, const Tree& b);

/// Tree whose cluster collection is C(a) ∪ C(b). Shared clusters take a's
/// weight, the others b's. Throws IncompatibleClusters when some cluster of b
/// crosses a cluster of a.
FlatTree merge_trees(const FlatTree& a, const FlatTree& b);
Tree merge_trees(const Tree& a, const Tree& b);

}  // namespace phylocons
