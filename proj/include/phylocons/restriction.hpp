#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "phylocons/cluster.hpp"
#include "phylocons/flat_tree.hpp"
#include "phylocons/indexes.hpp"

namespace phylocons {

/// Root-to-leaf heavy path of a tree and the subtrees hanging off it.
struct CentroidDecomposition {
  std::vector<NodeId> path;        // p_alpha (root) ... p_1 (a leaf)
  std::vector<NodeId> side_roots;  // roots of the side trees
  std::vector<NodeId> attachment;  // path node each side root hangs from
};

/// Descends into a child with the most leaves, leftmost on ties.
CentroidDecomposition centroid_decompose(const Tree& t);

/// Builds induced subtrees T|C and weighted restrictions T||C of one tree.
///
/// Setup is O(m log m); each call costs O(|C| log |C|). Output `source`
/// entries are node ids of the input FlatTree (kNoNode for special nodes).
///
/// A node x of the output is marked open when its originating cluster has
/// leaves outside the output's leaf set. For C inside the leaf set, an open
/// node is incompatible with C iff C meets x and C is not inside x. Special
/// nodes are always open.
class Restrictor {
 public:
  explicit Restrictor(const FlatTree& t);

  /// `leaves`: distinct leaf node ids of the input tree, in any order.
  FlatTree induced(std::vector<NodeId> leaves) const { return build(std::move(leaves), false); }
  FlatTree restrict(std::vector<NodeId> leaves) const { return build(std::move(leaves), true); }

  const LcaIndex& lca() const { return lca_; }

 private:
  FlatTree build(std::vector<NodeId> leaves, bool with_specials) const;

  const FlatTree* tree_;
  LcaIndex lca_;
  PathMaxIndex path_max_;
};

struct InducedSubtree {
  Tree tree;
  std::vector<NodeId> source;  // induced node id -> node id of the input Tree
};

/// T|C. Throws std::invalid_argument for an empty cluster.
InducedSubtree induced_subtree(const Tree& t, const Cluster& c);

struct RestrictedTree {
  Tree tree;  // unary special nodes allowed; values hold the weights
  std::vector<int> weight;
  std::vector<std::uint8_t> special;
  std::vector<std::uint8_t> open;
  std::vector<NodeId> source;  // node id of the input Tree, kNoNode for special nodes
};

/// T||C with `weights` indexed by the node ids of t.
RestrictedTree weighted_restriction(const Tree& t, const Cluster& c, std::span<const int> weights);

/// Incompatibility of C with a node of a restricted tree whose restricted
/// cluster is `node_cluster`.
bool restricted_node_incompatible(const Cluster& node_cluster, bool open, const Cluster& c);

}  // namespace phylocons
