#include "phylocons/merge.hpp"

#include <algorithm>

#include "phylocons/errors.hpp"

namespace phylocons {
namespace {

void require_same_leaves(const FlatTree& a, const FlatTree& b) {
  const std::size_t n = a.universe->size();
  if (b.universe->size() != n || a.leaves() != n || b.leaves() != n) {
    throw LeafSetMismatch("trees have different leaf sets");
  }
}

}  // namespace

Embedding::Embedding(const FlatTree& host, const FlatTree& probe) {
  require_same_leaves(host, probe);
  const std::size_t n = host.universe->size();
  const std::size_t m = host.size();

  std::vector<int> probe_rank(n, 0);
  {
    int next = 0;
    for (std::size_t v = 0; v < probe.size(); ++v) {
      if (probe.label[v] != kNoLabel) probe_rank[static_cast<std::size_t>(probe.label[v])] = next++;
    }
  }
  std::vector<int> min_rank(m, 0);
  for (std::size_t v = m; v-- > 0;) {
    if (host.label[v] != kNoLabel) {
      min_rank[v] = probe_rank[static_cast<std::size_t>(host.label[v])];
    } else {
      int best = static_cast<int>(n);
      for (NodeId c : host.children(static_cast<NodeId>(v))) best = std::min(best, min_rank[static_cast<std::size_t>(c)]);
      min_rank[v] = best;
    }
  }

  // Counting sort of all non-root nodes by min_rank, then distribute to parents.
  std::vector<int> bucket(n + 1, 0);
  for (std::size_t v = 1; v < m; ++v) ++bucket[static_cast<std::size_t>(min_rank[v]) + 1];
  for (std::size_t r = 0; r < n; ++r) bucket[r + 1] += bucket[r];
  std::vector<NodeId> sorted(m > 0 ? m - 1 : 0);
  for (std::size_t v = 1; v < m; ++v) sorted[static_cast<std::size_t>(bucket[static_cast<std::size_t>(min_rank[v])]++)] = static_cast<NodeId>(v);
  offset_ = host.child_offset;
  kids_.assign(host.child_list.size(), kNoNode);
  std::vector<NodeId> fill(offset_.begin(), offset_.end() - 1);
  std::vector<int> cidx(m, 0);
  for (NodeId v : sorted) {
    const auto p = static_cast<std::size_t>(host.parent[static_cast<std::size_t>(v)]);
    cidx[static_cast<std::size_t>(v)] = fill[p] - offset_[p];
    kids_[static_cast<std::size_t>(fill[p]++)] = v;
  }

  // Leaf positions in the reordered host.
  std::vector<int> pos(n, 0);
  std::vector<NodeId> leaf_at(n, kNoNode);
  {
    int next = 0;
    std::vector<NodeId> stack{0};
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      if (host.label[static_cast<std::size_t>(v)] != kNoLabel) {
        pos[static_cast<std::size_t>(host.label[static_cast<std::size_t>(v)])] = next;
        leaf_at[static_cast<std::size_t>(next++)] = v;
        continue;
      }
      const auto ks = children(v);
      for (std::size_t i = ks.size(); i-- > 0;) stack.push_back(ks[i]);
    }
  }

  // Chains of ancestors for which a leaf is the first (left) or last (right)
  // leaf, stored leaf-first.
  auto build_chains = [&](bool left, std::vector<int>& start, std::vector<NodeId>& flat) {
    start.assign(n + 1, 0);
    flat.clear();
    flat.reserve(m);
    for (std::size_t p = 0; p < n; ++p) {
      start[p] = static_cast<int>(flat.size());
      NodeId v = leaf_at[p];
      flat.push_back(v);
      while (v != 0) {
        const NodeId par = host.parent[static_cast<std::size_t>(v)];
        const auto ks = children(par);
        if ((left ? ks.front() : ks.back()) != v) break;
        v = par;
        flat.push_back(v);
      }
    }
    start[n] = static_cast<int>(flat.size());
  };
  std::vector<int> left_start;
  std::vector<int> right_start;
  std::vector<NodeId> left_chain;
  std::vector<NodeId> right_chain;
  build_chains(true, left_start, left_chain);
  build_chains(false, right_start, right_chain);

  const std::size_t mp = probe.size();
  place_.assign(mp, Placement{});
  std::vector<int> lo(mp, 0);
  std::vector<int> hi(mp, 0);
  for (std::size_t u = mp; u-- > 0;) {
    if (probe.label[u] != kNoLabel) {
      lo[u] = hi[u] = pos[static_cast<std::size_t>(probe.label[u])];
    } else {
      const auto ks = probe.children(static_cast<NodeId>(u));
      lo[u] = lo[static_cast<std::size_t>(ks[0])];
      hi[u] = hi[static_cast<std::size_t>(ks[0])];
      for (NodeId c : ks.subspan(1)) {
        lo[u] = std::min(lo[u], lo[static_cast<std::size_t>(c)]);
        hi[u] = std::max(hi[u], hi[static_cast<std::size_t>(c)]);
      }
    }
    if (hi[u] - lo[u] + 1 != probe.leaf_count[u]) continue;
    const auto l = static_cast<std::size_t>(lo[u]);
    const auto r = static_cast<std::size_t>(hi[u]);
    const int depth_l = host.depth[static_cast<std::size_t>(leaf_at[l])];
    const int depth_r = host.depth[static_cast<std::size_t>(leaf_at[r])];
    const int top_l = depth_l - (left_start[l + 1] - left_start[l] - 1);
    const int top_r = depth_r - (right_start[r + 1] - right_start[r] - 1);
    const int d = std::max(top_l, top_r);
    if (d > depth_l || d > depth_r) continue;
    const NodeId a = left_chain[static_cast<std::size_t>(left_start[l] + depth_l - d)];
    const NodeId b = right_chain[static_cast<std::size_t>(right_start[r] + depth_r - d)];
    Placement& pl = place_[u];
    if (a == b) {
      pl.kind = Placement::Kind::kEqual;
      pl.node = a;
    } else if (host.parent[static_cast<std::size_t>(a)] == host.parent[static_cast<std::size_t>(b)]) {
      pl.kind = Placement::Kind::kSpan;
      pl.node = host.parent[static_cast<std::size_t>(a)];
      pl.first = cidx[static_cast<std::size_t>(a)];
      pl.last = cidx[static_cast<std::size_t>(b)];
    }
  }
}

std::vector<std::uint8_t> compatible_mask(const FlatTree& a, const FlatTree& b) {
  const Embedding e(b, a);
  std::vector<std::uint8_t> keep(a.size(), 0);
  for (std::size_t v = 0; v < a.size(); ++v) {
    keep[v] = e.placements()[v].kind != Placement::Kind::kIncompatible ? 1 : 0;
  }
  return keep;
}

FlatTree one_way_compatible(const FlatTree& a, const FlatTree& b) { return contract(a, compatible_mask(a, b)); }

Tree one_way_compatible(const Tree& a, const Tree& b) {
  return unflatten(one_way_compatible(flatten(a), flatten(b)));
}

FlatTree merge_trees(const FlatTree& a, const FlatTree& b) {
  const Embedding e(a, b);
  const std::size_t ma = a.size();
  const auto& place = e.placements();

  // Spans open before their first child and close after their last one.
  // Iterating b in preorder lists enclosing spans before nested ones.
  std::vector<int> open_offset(ma + 1, 0);
  std::vector<int> close_count(ma, 0);
  for (std::size_t u = 0; u < place.size(); ++u) {
    const Placement& p = place[u];
    if (p.kind == Placement::Kind::kIncompatible) {
      throw IncompatibleClusters("merge_trees: a cluster of the second tree crosses the first tree");
    }
    if (p.kind != Placement::Kind::kSpan) continue;
    const auto ks = e.children(p.node);
    ++open_offset[static_cast<std::size_t>(ks[static_cast<std::size_t>(p.first)]) + 1];
    ++close_count[static_cast<std::size_t>(ks[static_cast<std::size_t>(p.last)])];
  }
  for (std::size_t v = 0; v < ma; ++v) open_offset[v + 1] += open_offset[v];
  std::vector<NodeId> opens(static_cast<std::size_t>(open_offset[ma]));
  {
    std::vector<int> fill(open_offset.begin(), open_offset.end() - 1);
    for (std::size_t u = 0; u < place.size(); ++u) {
      const Placement& p = place[u];
      if (p.kind != Placement::Kind::kSpan) continue;
      const auto first = static_cast<std::size_t>(e.children(p.node)[static_cast<std::size_t>(p.first)]);
      opens[static_cast<std::size_t>(fill[first]++)] = static_cast<NodeId>(u);
    }
  }

  FlatBuilder out;
  struct Frame {
    NodeId node;
    std::size_t next;
    std::size_t base;
  };
  std::vector<NodeId> parents;  // output ids of open ancestors
  std::vector<Frame> frames;
  parents.push_back(out.add(kNoNode, a.label[0], a.weight[0], a.source[0], a.open[0] != 0, a.special[0] != 0));
  if (a.label[0] != kNoLabel) return out.build(a.universe);
  frames.push_back({0, 0, 0});
  auto close_after = [&](NodeId child) {
    for (int i = 0; i < close_count[static_cast<std::size_t>(child)]; ++i) parents.pop_back();
  };
  while (!frames.empty()) {
    Frame& f = frames.back();
    const auto ks = e.children(f.node);
    if (f.next == ks.size()) {
      const NodeId done = f.node;
      parents.resize(f.base);
      frames.pop_back();
      if (!frames.empty()) close_after(done);
      continue;
    }
    const NodeId c = ks[f.next++];
    const auto ci = static_cast<std::size_t>(c);
    for (int i = open_offset[ci]; i < open_offset[ci + 1]; ++i) {
      const auto u = static_cast<std::size_t>(opens[static_cast<std::size_t>(i)]);
      parents.push_back(out.add(parents.back(), kNoLabel, b.weight[u], kNoNode));
    }
    const NodeId id = out.add(parents.back(), a.label[ci], a.weight[ci], a.source[ci], a.open[ci] != 0, a.special[ci] != 0);
    if (a.label[ci] != kNoLabel) {
      close_after(c);
    } else {
      frames.push_back({c, 0, parents.size()});
      parents.push_back(id);
    }
  }
  return out.build(a.universe);
}

Tree merge_trees(const Tree& a, const Tree& b) { return unflatten(merge_trees(flatten(a), flatten(b))); }

}  // namespace phylocons
