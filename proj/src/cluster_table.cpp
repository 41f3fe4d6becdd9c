#include "phylocons/cluster_table.hpp"

#include <algorithm>
#include <stdexcept>

#include "phylocons/errors.hpp"

namespace phylocons {

ClusterTable::ClusterTable(const FlatTree& reference) {
  const std::size_t n = reference.universe->size();
  if (reference.leaves() != n) throw LeafSetMismatch("reference tree does not cover the universe");
  rank_.assign(n, -1);
  left_.assign(n, -1);
  right_.assign(n, -1);
  const std::size_t m = reference.size();
  std::vector<int> lo(m, 0);
  int next = 0;
  for (std::size_t v = 0; v < m; ++v) {
    if (reference.label[v] != kNoLabel) {
      rank_[static_cast<std::size_t>(reference.label[v])] = next;
      lo[v] = next++;
    }
  }
  // In preorder the first leaf of v's subtree has the smallest rank.
  for (std::size_t v = m; v-- > 0;) {
    if (reference.label[v] == kNoLabel) lo[v] = lo[static_cast<std::size_t>(reference.children(static_cast<NodeId>(v))[0])];
  }
  for (std::size_t v = 1; v < m; ++v) {
    if (reference.label[v] != kNoLabel) continue;
    const int l = lo[v];
    const int r = l + reference.leaf_count[v] - 1;
    const auto p = reference.parent[v];
    const bool first = reference.children(p)[0] == static_cast<NodeId>(v);
    const auto row = static_cast<std::size_t>(first ? r : l);
    left_[row] = l;
    right_[row] = r;
  }
}

bool ClusterTable::contains(int lo, int hi, int size) const {
  if (size == 1 || static_cast<std::size_t>(size) == rank_.size()) return hi - lo + 1 == size;
  if (hi - lo + 1 != size) return false;
  const auto l = static_cast<std::size_t>(lo);
  const auto r = static_cast<std::size_t>(hi);
  return (left_[l] == lo && right_[l] == hi) || (left_[r] == lo && right_[r] == hi);
}

ClusterTable build_cluster_table(const Tree& reference) { return ClusterTable(reference); }

std::vector<std::uint8_t> mark_common_clusters(const FlatTree& t, const ClusterTable& table) {
  if (t.universe->size() != table.universe_size() || t.leaves() != table.universe_size()) {
    throw LeafSetMismatch("tree and cluster table cover different leaf sets");
  }
  const std::size_t m = t.size();
  std::vector<int> lo(m, 0);
  std::vector<int> hi(m, 0);
  std::vector<std::uint8_t> flag(m, 0);
  for (std::size_t v = m; v-- > 0;) {
    if (t.label[v] != kNoLabel) {
      lo[v] = hi[v] = table.rank(t.label[v]);
    } else {
      const auto kids = t.children(static_cast<NodeId>(v));
      lo[v] = lo[static_cast<std::size_t>(kids[0])];
      hi[v] = hi[static_cast<std::size_t>(kids[0])];
      for (NodeId c : kids.subspan(1)) {
        lo[v] = std::min(lo[v], lo[static_cast<std::size_t>(c)]);
        hi[v] = std::max(hi[v], hi[static_cast<std::size_t>(c)]);
      }
    }
    flag[v] = table.contains(lo[v], hi[v], t.leaf_count[v]) ? 1 : 0;
  }
  return flag;
}

std::vector<std::uint8_t> mark_common_clusters(const Tree& t, const ClusterTable& table) {
  const FlatTree f = flatten(t);
  const auto flat = mark_common_clusters(f, table);
  std::vector<std::uint8_t> out(t.id_bound(), 0);
  for (std::size_t v = 0; v < f.size(); ++v) out[static_cast<std::size_t>(f.source[v])] = flat[v];
  return out;
}

}  // namespace phylocons
