#include "phylocons/indexes.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace phylocons {

LcaIndex::LcaIndex(const FlatTree& t) : tree_(&t) {
  const std::size_t m = t.size();
  table_.emplace_back(m);
  for (std::size_t i = 0; i < m; ++i) table_[0][i] = static_cast<NodeId>(i);
  for (std::size_t j = 1; (std::size_t{1} << j) <= m; ++j) {
    const std::size_t half = std::size_t{1} << (j - 1);
    const auto& prev = table_[j - 1];
    std::vector<NodeId> row(m - (std::size_t{1} << j) + 1);
    for (std::size_t i = 0; i < row.size(); ++i) {
      const NodeId a = prev[i];
      const NodeId b = prev[i + half];
      row[i] = t.depth[static_cast<std::size_t>(b)] < t.depth[static_cast<std::size_t>(a)] ? b : a;
    }
    table_.push_back(std::move(row));
  }
}

NodeId LcaIndex::shallowest(NodeId lo, NodeId hi) const {
  const auto len = static_cast<std::size_t>(hi - lo + 1);
  const auto j = static_cast<std::size_t>(std::bit_width(len) - 1);
  const NodeId a = table_[j][static_cast<std::size_t>(lo)];
  const NodeId b = table_[j][static_cast<std::size_t>(hi) + 1 - (std::size_t{1} << j)];
  return tree_->depth[static_cast<std::size_t>(b)] < tree_->depth[static_cast<std::size_t>(a)] ? b : a;
}

NodeId LcaIndex::lca(NodeId u, NodeId v) const {
  if (u == v) return u;
  if (u > v) std::swap(u, v);
  if (tree_->is_ancestor(u, v)) return u;
  return tree_->parent[static_cast<std::size_t>(shallowest(u + 1, v))];
}

NodeId LcaIndex::lca(std::span<const NodeId> nodes) const {
  if (nodes.empty()) throw std::invalid_argument("lca of an empty node set");
  NodeId r = nodes.front();
  for (NodeId v : nodes.subspan(1)) r = lca(r, v);
  return r;
}

PathMaxIndex::PathMaxIndex(const FlatTree& t, std::span<const int> weights) : tree_(&t) {
  const std::size_t m = t.size();
  if (weights.size() != m) throw std::invalid_argument("weight count does not match the tree");
  const int max_depth = m == 0 ? 0 : *std::max_element(t.depth.begin(), t.depth.end());
  const auto levels = static_cast<std::size_t>(std::bit_width(static_cast<unsigned>(max_depth + 1)));
  up_.assign(levels, std::vector<NodeId>(m, kNoNode));
  max_.assign(levels, std::vector<int>(m, 0));
  for (std::size_t v = 0; v < m; ++v) {
    up_[0][v] = t.parent[v];
    max_[0][v] = weights[v];
  }
  for (std::size_t j = 1; j < levels; ++j) {
    for (std::size_t v = 0; v < m; ++v) {
      const NodeId mid = up_[j - 1][v];
      if (mid == kNoNode) {
        up_[j][v] = kNoNode;
        max_[j][v] = max_[j - 1][v];
      } else {
        up_[j][v] = up_[j - 1][static_cast<std::size_t>(mid)];
        max_[j][v] = std::max(max_[j - 1][v], max_[j - 1][static_cast<std::size_t>(mid)]);
      }
    }
  }
}

int PathMaxIndex::climb(NodeId v, int count) const {
  int best = 0;
  bool any = false;
  for (std::size_t j = 0; count > 0; ++j, count >>= 1) {
    if ((count & 1) == 0) continue;
    const int here = max_[j][static_cast<std::size_t>(v)];
    best = any ? std::max(best, here) : here;
    any = true;
    v = up_[j][static_cast<std::size_t>(v)];
  }
  return best;
}

void PathMaxIndex::require_ancestor(NodeId anc, NodeId desc) const {
  if (!tree_->is_ancestor(anc, desc)) throw std::invalid_argument("path query on a non-ancestor pair");
}

int PathMaxIndex::path_max(NodeId anc, NodeId desc) const {
  require_ancestor(anc, desc);
  const auto& d = tree_->depth;
  return climb(desc, d[static_cast<std::size_t>(desc)] - d[static_cast<std::size_t>(anc)] + 1);
}

int PathMaxIndex::path_max_below(NodeId anc, NodeId desc) const {
  require_ancestor(anc, desc);
  const auto& d = tree_->depth;
  return climb(desc, d[static_cast<std::size_t>(desc)] - d[static_cast<std::size_t>(anc)]);
}

int PathMaxIndex::max_strictly_between(NodeId anc, NodeId desc) const {
  require_ancestor(anc, desc);
  const auto& d = tree_->depth;
  const int inner = d[static_cast<std::size_t>(desc)] - d[static_cast<std::size_t>(anc)] - 1;
  if (inner <= 0) return 0;
  return climb(tree_->parent[static_cast<std::size_t>(desc)], inner);
}

void MaxMultiset::insert(NodeId handle, int key) {
  const auto h = static_cast<std::size_t>(handle);
  if (present_[h] != 0) throw std::logic_error("handle already present");
  present_[h] = 1;
  key_[h] = key;
  items_.emplace(key, handle);
}

void MaxMultiset::remove(NodeId handle) {
  const auto h = static_cast<std::size_t>(handle);
  if (present_[h] == 0) throw std::logic_error("removing an absent handle");
  present_[h] = 0;
  items_.erase({key_[h], handle});
}

int MaxMultiset::max() const {
  if (items_.empty()) throw std::logic_error("max of an empty multiset");
  return items_.rbegin()->first;
}

}  // namespace phylocons
