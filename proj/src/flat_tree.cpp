#include "phylocons/flat_tree.hpp"

#include <stdexcept>

namespace phylocons {

NodeId FlatBuilder::add(NodeId parent_id, Label leaf_label, int w, NodeId src, bool is_open, bool is_special) {
  parent.push_back(parent_id);
  label.push_back(leaf_label);
  weight.push_back(w);
  open.push_back(is_open ? 1 : 0);
  special.push_back(is_special ? 1 : 0);
  source.push_back(src);
  return static_cast<NodeId>(parent.size() - 1);
}

FlatTree FlatBuilder::build(UniversePtr universe) const {
  const std::size_t m = parent.size();
  if (m == 0) throw std::invalid_argument("cannot build an empty tree");

  NodeId root = kNoNode;
  std::vector<NodeId> offset(m + 1, 0);
  for (std::size_t v = 0; v < m; ++v) {
    if (parent[v] == kNoNode) {
      if (root != kNoNode) throw std::invalid_argument("more than one root");
      root = static_cast<NodeId>(v);
    } else {
      ++offset[static_cast<std::size_t>(parent[v]) + 1];
    }
  }
  if (root == kNoNode) throw std::invalid_argument("no root");
  for (std::size_t v = 0; v < m; ++v) offset[v + 1] += offset[v];
  std::vector<NodeId> kids(m > 0 ? m - 1 : 0);
  {
    std::vector<NodeId> fill(offset.begin(), offset.end() - 1);
    for (std::size_t v = 0; v < m; ++v) {
      if (parent[v] != kNoNode) kids[static_cast<std::size_t>(fill[static_cast<std::size_t>(parent[v])]++)] = static_cast<NodeId>(v);
    }
  }

  // Preorder renumbering.
  std::vector<NodeId> order;
  order.reserve(m);
  std::vector<NodeId> stack{root};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    const auto vi = static_cast<std::size_t>(v);
    for (NodeId i = offset[vi + 1]; i-- > offset[vi];) stack.push_back(kids[static_cast<std::size_t>(i)]);
  }
  if (order.size() != m) throw std::invalid_argument("nodes unreachable from the root");
  std::vector<NodeId> id(m);
  for (std::size_t i = 0; i < m; ++i) id[static_cast<std::size_t>(order[i])] = static_cast<NodeId>(i);

  FlatTree f;
  f.universe = std::move(universe);
  f.parent.resize(m);
  f.label.resize(m);
  f.weight.resize(m);
  f.open.resize(m);
  f.special.resize(m);
  f.source.resize(m);
  f.depth.resize(m);
  f.child_offset.assign(m + 1, 0);
  f.child_list.resize(kids.size());
  for (std::size_t i = 0; i < m; ++i) {
    const auto old = static_cast<std::size_t>(order[i]);
    f.parent[i] = parent[old] == kNoNode ? kNoNode : id[static_cast<std::size_t>(parent[old])];
    f.label[i] = label[old];
    f.weight[i] = weight[old];
    f.open[i] = open[old];
    f.special[i] = special[old];
    f.source[i] = source[old];
    f.depth[i] = f.parent[i] == kNoNode ? 0 : f.depth[static_cast<std::size_t>(f.parent[i])] + 1;
    const auto degree = offset[old + 1] - offset[old];
    f.child_offset[i + 1] = f.child_offset[i] + degree;
    for (NodeId k = 0; k < degree; ++k) {
      f.child_list[static_cast<std::size_t>(f.child_offset[i] + k)] =
          id[static_cast<std::size_t>(kids[static_cast<std::size_t>(offset[old] + k)])];
    }
    if (label[old] == kNoLabel && degree == 0) throw std::invalid_argument("internal node without children");
    if (label[old] != kNoLabel && degree != 0) throw std::invalid_argument("leaf with children");
  }
  f.leaf_count.assign(m, 0);
  f.subtree_end.assign(m, 0);
  for (std::size_t i = m; i-- > 0;) {
    if (f.label[i] != kNoLabel) f.leaf_count[i] = 1;
    if (f.subtree_end[i] == 0) f.subtree_end[i] = static_cast<NodeId>(i + 1);
    const NodeId p = f.parent[i];
    if (p != kNoNode) {
      const auto pi = static_cast<std::size_t>(p);
      f.leaf_count[pi] += f.leaf_count[i];
      if (f.subtree_end[pi] < f.subtree_end[i]) f.subtree_end[pi] = f.subtree_end[i];
    }
  }
  return f;
}

FlatTree flatten(const Tree& t) {
  FlatBuilder b;
  const auto order = t.preorder();
  std::vector<NodeId> id(t.id_bound(), kNoNode);
  for (NodeId v : order) {
    const NodeId p = t.parent(v);
    id[static_cast<std::size_t>(v)] =
        b.add(p == kNoNode ? kNoNode : id[static_cast<std::size_t>(p)], t.label(v), t.value(v), v);
  }
  return b.build(t.universe_ptr());
}

Tree unflatten(const FlatTree& f) {
  Tree t(f.universe);
  for (std::size_t v = 0; v < f.size(); ++v) {
    const NodeId p = f.parent[v];
    const NodeId id = f.label[v] != kNoLabel ? t.add_leaf(p, f.label[v]) : t.add_node(p);
    t.set_value(id, f.weight[v]);
  }
  return t;
}

FlatTree contract(const FlatTree& f, std::span<const std::uint8_t> keep) {
  const std::size_t m = f.size();
  if (keep.size() != m) throw std::invalid_argument("keep mask size mismatch");
  FlatBuilder b;
  // up[v]: new id of v if kept, else of its nearest kept ancestor.
  std::vector<NodeId> up(m, kNoNode);
  for (std::size_t v = 0; v < m; ++v) {
    const NodeId p = f.parent[v];
    const bool kept = p == kNoNode || f.label[v] != kNoLabel || keep[v] != 0;
    if (kept) {
      up[v] = b.add(p == kNoNode ? kNoNode : up[static_cast<std::size_t>(p)], f.label[v], f.weight[v],
                    f.source[v], f.open[v] != 0, f.special[v] != 0);
    } else {
      up[v] = up[static_cast<std::size_t>(p)];
    }
  }
  return b.build(f.universe);
}

std::vector<NodeId> leaf_index(const FlatTree& f) {
  std::vector<NodeId> out(f.universe ? f.universe->size() : 0, kNoNode);
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (f.label[v] != kNoLabel) out[static_cast<std::size_t>(f.label[v])] = static_cast<NodeId>(v);
  }
  return out;
}

}  // namespace phylocons
