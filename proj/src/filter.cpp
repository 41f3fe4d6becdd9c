#include <algorithm>
#include <stdexcept>
#include <optional>

#include "phylocons/errors.hpp"
#include "phylocons/freq_diff.hpp"
#include "phylocons/indexes.hpp"
#include "phylocons/restriction.hpp"

namespace phylocons {
namespace {

void require_covered(const FlatTree& a, const FlatTree& b) {
  if (a.leaves() != b.leaves() || a.universe->size() != b.universe->size()) {
    throw LeafSetMismatch("filter: trees have different leaf sets");
  }
}

// Centroid-path filter over restricted copies of b. Every recursive call works
// on a subtree of `a` rooted at s and a tree whose leaf set is exactly Λ(a[s]).
class FastFilter {
 public:
  explicit FastFilter(const FlatTree& a) : a_(a), slot_(a.universe->size(), kNoNode), keep_(a.size(), 1) {}

  std::vector<std::uint8_t> run(const FlatTree& b) {
    solve(0, b);
    keep_[0] = 1;
    return std::move(keep_);
  }

 private:
  void bind(const FlatTree& tb) {
    for (std::size_t v = 0; v < tb.size(); ++v) {
      if (tb.label[v] != kNoLabel) slot_[static_cast<std::size_t>(tb.label[v])] = static_cast<NodeId>(v);
    }
  }

  // tb leaves under a's subtree rooted at c.
  void collect(NodeId c, std::vector<NodeId>& out) const {
    const auto end = static_cast<std::size_t>(a_.subtree_end[static_cast<std::size_t>(c)]);
    for (auto x = static_cast<std::size_t>(c); x < end; ++x) {
      if (a_.label[x] != kNoLabel) out.push_back(slot_[static_cast<std::size_t>(a_.label[x])]);
    }
  }

  void solve(NodeId s, const FlatTree& tb) {
    if (a_.is_leaf(s)) return;

    // path[0] = p_1 (a leaf) ... path.back() = s
    std::vector<NodeId> path{s};
    while (!a_.is_leaf(path.back())) {
      const auto ks = a_.children(path.back());
      NodeId heavy = ks[0];
      for (NodeId c : ks) {
        if (a_.leaf_count[static_cast<std::size_t>(c)] > a_.leaf_count[static_cast<std::size_t>(heavy)]) heavy = c;
      }
      path.push_back(heavy);
    }
    std::reverse(path.begin(), path.end());

    bind(tb);
    std::vector<std::pair<NodeId, FlatTree>> sides;
    {
      const Restrictor restrictor(tb);
      std::vector<NodeId> leaves;
      for (std::size_t i = 1; i < path.size(); ++i) {
        for (NodeId c : a_.children(path[i])) {
          if (c == path[i - 1] || a_.is_leaf(c)) continue;
          leaves.clear();
          collect(c, leaves);
          sides.emplace_back(c, restrictor.restrict(leaves));
        }
      }
    }
    for (auto& [root, sub] : sides) {
      solve(root, sub);
      sub = FlatTree{};
    }
    bind(tb);
    sweep(path, tb);
  }

  void sweep(const std::vector<NodeId>& path, const FlatTree& tb) {
    const std::size_t m = tb.size();
    const LcaIndex lca(tb);
    std::vector<int> counter(m, 0);
    std::vector<std::uint8_t> reached(m, 0);
    MaxMultiset bt(m);

    // Open nodes are incompatible with C exactly when they lie strictly below
    // lca(C) on a path to a leaf of C, so their maximum only grows.
    const bool any_open = std::any_of(tb.open.begin(), tb.open.end(), [](auto f) { return f != 0; });
    std::optional<PathMaxIndex> open_max;
    if (any_open) {
      std::vector<int> w(m, 0);
      for (std::size_t v = 0; v < m; ++v) w[v] = tb.open[v] != 0 ? tb.weight[v] : 0;
      open_max.emplace(tb, w);
    }

    auto saturate = [&](NodeId x) {
      ++counter[static_cast<std::size_t>(x)];
      while (counter[static_cast<std::size_t>(x)] == tb.leaf_count[static_cast<std::size_t>(x)]) {
        if (bt.contains(x)) bt.remove(x);
        const NodeId p = tb.parent[static_cast<std::size_t>(x)];
        if (p == kNoNode) break;
        counter[static_cast<std::size_t>(p)] += tb.leaf_count[static_cast<std::size_t>(x)];
        x = p;
      }
    };
    auto enter = [&](NodeId x) {
      const auto xi = static_cast<std::size_t>(x);
      reached[xi] = 1;
      if (tb.open[xi] == 0 && counter[xi] < tb.leaf_count[xi] && !bt.contains(x)) bt.insert(x, tb.weight[xi]);
    };

    NodeId r = slot_[static_cast<std::size_t>(a_.label[static_cast<std::size_t>(path[0])])];
    reached[static_cast<std::size_t>(r)] = 1;
    saturate(r);
    int beta = 0;
    std::vector<NodeId> d;
    for (std::size_t i = 1; i < path.size(); ++i) {
      const NodeId p = path[i];
      d.clear();
      for (NodeId c : a_.children(p)) {
        if (c != path[i - 1]) collect(c, d);
      }
      NodeId r_new = r;
      for (NodeId x : d) r_new = lca.lca(r_new, x);

      for (NodeId x = r; x != r_new; x = tb.parent[static_cast<std::size_t>(x)]) enter(x);
      for (NodeId x : d) {
        enter(x);
        while (true) {
          const NodeId up = tb.parent[static_cast<std::size_t>(x)];
          if (up == r_new || reached[static_cast<std::size_t>(up)] != 0) break;
          x = up;
          enter(x);
        }
      }
      if (open_max) {
        beta = std::max(beta, open_max->path_max_below(r_new, r));
        for (NodeId x : d) beta = std::max(beta, open_max->path_max_below(r_new, x));
      }
      for (NodeId x : d) saturate(x);

      const int m_max = std::max(bt.empty() ? 0 : bt.max(), beta);
      keep_[static_cast<std::size_t>(p)] = a_.weight[static_cast<std::size_t>(p)] > m_max ? 1 : 0;
      r = r_new;
    }
  }

  const FlatTree& a_;
  std::vector<NodeId> slot_;
  std::vector<std::uint8_t> keep_;
};

}  // namespace

std::vector<std::uint8_t> filter_keep_naive(const FlatTree& a, const FlatTree& b) {
  require_covered(a, b);
  const std::size_t mb = b.size();
  const auto slot = leaf_index(b);
  std::vector<std::uint8_t> keep(a.size(), 1);
  std::vector<int> cnt(mb, 0);
  for (std::size_t u = 1; u < a.size(); ++u) {
    if (a.label[u] != kNoLabel) continue;
    std::fill(cnt.begin(), cnt.end(), 0);
    const int total = a.leaf_count[u];
    for (auto x = u; x < static_cast<std::size_t>(a.subtree_end[u]); ++x) {
      if (a.label[x] != kNoLabel) cnt[static_cast<std::size_t>(slot[static_cast<std::size_t>(a.label[x])])] = 1;
    }
    for (std::size_t x = mb; x-- > 1;) cnt[static_cast<std::size_t>(b.parent[x])] += cnt[x];
    // Nodes containing all of C form a root path; the deepest is the lca.
    std::size_t lca = 0;
    for (std::size_t x = 0; x < mb; ++x) {
      if (cnt[x] == total) lca = x;
    }
    int worst = 0;
    for (auto x = lca + 1; x < static_cast<std::size_t>(b.subtree_end[lca]); ++x) {
      if (cnt[x] > 0 && (b.open[x] != 0 || cnt[x] < b.leaf_count[x])) worst = std::max(worst, b.weight[x]);
    }
    keep[u] = a.weight[u] > worst ? 1 : 0;
  }
  return keep;
}

std::vector<std::uint8_t> filter_keep_fast(const FlatTree& a, const FlatTree& b) {
  require_covered(a, b);
  return FastFilter(a).run(b);
}

FlatTree filter_clusters(const FlatTree& a, const FlatTree& b, FilterImpl impl) {
  return contract(a, impl == FilterImpl::kNaive ? filter_keep_naive(a, b) : filter_keep_fast(a, b));
}

namespace {

FlatTree weighted(const Tree& t, const WeightMap& w) {
  FlatTree f = flatten(t);
  const auto clusters = node_clusters(t);
  for (std::size_t v = 0; v < f.size(); ++v) f.weight[v] = w.at(clusters[static_cast<std::size_t>(f.source[v])]);
  return f;
}

Tree filter_tree(const Tree& a, const Tree& b, const WeightMap& w, FilterImpl impl) {
  return unflatten(filter_clusters(weighted(a, w), weighted(b, w), impl));
}

}  // namespace

Tree filter_clusters_naive(const Tree& a, const Tree& b, const WeightMap& w) {
  return filter_tree(a, b, w, FilterImpl::kNaive);
}

Tree filter_clusters_fast(const Tree& a, const Tree& b, const WeightMap& w) {
  return filter_tree(a, b, w, FilterImpl::kFast);
}

}  // namespace phylocons
