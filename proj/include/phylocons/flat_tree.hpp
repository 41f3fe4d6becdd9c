#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "phylocons/tree.hpp"

namespace phylocons {

/// Immutable, preorder-numbered tree used by the algorithm kernels.
///
/// Node 0 is the root and the subtree of v occupies ids [v, subtree_end[v]).
/// Children are stored in CSR form. Unary nodes are allowed (special nodes of
/// restricted trees). `open` marks nodes whose originating cluster had leaves
/// outside this tree's leaf set; only restrictions produce open nodes.
struct FlatTree {
  UniversePtr universe;
  std::vector<NodeId> parent;
  std::vector<NodeId> child_offset;  // size() + 1 entries
  std::vector<NodeId> child_list;
  std::vector<Label> label;
  std::vector<int> weight;
  std::vector<int> leaf_count;
  std::vector<NodeId> subtree_end;
  std::vector<int> depth;
  std::vector<std::uint8_t> open;
  std::vector<std::uint8_t> special;
  std::vector<NodeId> source;  // id in whatever tree this one was derived from

  std::size_t size() const { return parent.size(); }
  std::size_t leaves() const { return static_cast<std::size_t>(leaf_count.empty() ? 0 : leaf_count[0]); }
  bool is_leaf(NodeId v) const { return label[static_cast<std::size_t>(v)] != kNoLabel; }
  std::span<const NodeId> children(NodeId v) const {
    const auto b = static_cast<std::size_t>(child_offset[static_cast<std::size_t>(v)]);
    const auto e = static_cast<std::size_t>(child_offset[static_cast<std::size_t>(v) + 1]);
    return {child_list.data() + b, e - b};
  }
  bool is_ancestor(NodeId anc, NodeId v) const {
    return anc <= v && v < subtree_end[static_cast<std::size_t>(anc)];
  }
};

/// Raw node list in any order; parents need not precede children. Exactly one
/// node has parent kNoNode. Children keep their relative input order.
struct FlatBuilder {
  std::vector<NodeId> parent;
  std::vector<Label> label;
  std::vector<int> weight;
  std::vector<std::uint8_t> open;
  std::vector<std::uint8_t> special;
  std::vector<NodeId> source;

  NodeId add(NodeId parent_id, Label leaf_label, int w, NodeId src, bool is_open = false, bool is_special = false);
  FlatTree build(UniversePtr universe) const;
};

/// Node values become weights; `source` holds the Tree node id.
FlatTree flatten(const Tree& t);
/// Weights become node values. Unary nodes are kept.
Tree unflatten(const FlatTree& f);

/// Removes every internal non-root node v with keep[v] == 0.
FlatTree contract(const FlatTree& f, std::span<const std::uint8_t> keep);

/// label -> node id, kNoNode where absent; sized by the universe.
std::vector<NodeId> leaf_index(const FlatTree& f);

}  // namespace phylocons
