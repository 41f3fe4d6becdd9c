#include "phylocons/restriction.hpp"

#include <algorithm>
#include <stdexcept>

namespace phylocons {

CentroidDecomposition centroid_decompose(const Tree& t) {
  const FlatTree f = flatten(t);
  CentroidDecomposition out;
  NodeId v = 0;
  out.path.push_back(f.source[0]);
  while (!f.is_leaf(v)) {
    const auto ks = f.children(v);
    NodeId heavy = ks[0];
    for (NodeId c : ks) {
      if (f.leaf_count[static_cast<std::size_t>(c)] > f.leaf_count[static_cast<std::size_t>(heavy)]) heavy = c;
    }
    for (NodeId c : ks) {
      if (c == heavy) continue;
      out.side_roots.push_back(f.source[static_cast<std::size_t>(c)]);
      out.attachment.push_back(f.source[static_cast<std::size_t>(v)]);
    }
    v = heavy;
    out.path.push_back(f.source[static_cast<std::size_t>(v)]);
  }
  return out;
}

Restrictor::Restrictor(const FlatTree& t) : tree_(&t), lca_(t), path_max_(t) {}

FlatTree Restrictor::build(std::vector<NodeId> leaves, bool with_specials) const {
  if (leaves.empty()) throw std::invalid_argument("restriction to an empty leaf set");
  const FlatTree& t = *tree_;
  std::sort(leaves.begin(), leaves.end());
  std::vector<NodeId> nodes = leaves;
  for (std::size_t i = 0; i + 1 < leaves.size(); ++i) nodes.push_back(lca_.lca(leaves[i], leaves[i + 1]));
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  FlatBuilder b;
  std::vector<std::pair<NodeId, NodeId>> stack;  // (input node, output id)
  for (NodeId v : nodes) {
    const auto vi = static_cast<std::size_t>(v);
    while (!stack.empty() && !t.is_ancestor(stack.back().first, v)) stack.pop_back();
    NodeId parent = kNoNode;
    if (!stack.empty()) {
      const NodeId up = stack.back().first;
      parent = stack.back().second;
      if (with_specials && t.depth[vi] - t.depth[static_cast<std::size_t>(up)] > 1) {
        parent = b.add(parent, kNoLabel, path_max_.max_strictly_between(up, v), kNoNode, true, true);
      }
    }
    const auto below = std::lower_bound(leaves.begin(), leaves.end(), t.subtree_end[vi]) -
                       std::lower_bound(leaves.begin(), leaves.end(), v);
    const bool open = t.open[vi] != 0 || t.leaf_count[vi] > below;
    stack.emplace_back(v, b.add(parent, t.label[vi], t.weight[vi], v, open));
  }
  return b.build(t.universe);
}

namespace {

std::vector<NodeId> leaves_of(const FlatTree& f, const Cluster& c) {
  if (c.empty()) throw std::invalid_argument("restriction to an empty cluster");
  const auto index = leaf_index(f);
  std::vector<NodeId> out;
  for (Label l : c.labels()) {
    const NodeId v = index.at(static_cast<std::size_t>(l));
    if (v == kNoNode) throw std::invalid_argument("cluster label missing from the tree");
    out.push_back(v);
  }
  return out;
}

}  // namespace

InducedSubtree induced_subtree(const Tree& t, const Cluster& c) {
  const FlatTree f = flatten(t);
  const FlatTree sub = Restrictor(f).induced(leaves_of(f, c));
  InducedSubtree out{unflatten(sub), {}};
  for (NodeId s : sub.source) out.source.push_back(f.source[static_cast<std::size_t>(s)]);
  return out;
}

RestrictedTree weighted_restriction(const Tree& t, const Cluster& c, std::span<const int> weights) {
  FlatTree f = flatten(t);
  for (std::size_t v = 0; v < f.size(); ++v) f.weight[v] = weights[static_cast<std::size_t>(f.source[v])];
  const FlatTree sub = Restrictor(f).restrict(leaves_of(f, c));
  RestrictedTree out{unflatten(sub), sub.weight, sub.special, sub.open, {}};
  for (NodeId s : sub.source) out.source.push_back(s == kNoNode ? kNoNode : f.source[static_cast<std::size_t>(s)]);
  return out;
}

bool restricted_node_incompatible(const Cluster& node_cluster, bool open, const Cluster& c) {
  if (open) return c.intersects(node_cluster) && !c.subset_of(node_cluster);
  return !clusters_compatible(c, node_cluster);
}

}  // namespace phylocons
