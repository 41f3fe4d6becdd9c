#include <doctest.h>

#include <algorithm>

#include "support.hpp"

using namespace phylocons;
using namespace phylocons::testing;

namespace {

UniversePtr abcde() { return make_universe({"a", "b", "c", "d", "e"}); }

// Node of t whose cluster equals c, or kNoNode.
NodeId node_with(const Tree& t, const Cluster& c) {
  const auto clusters = node_clusters(t);
  for (NodeId v : t.preorder()) {
    if (clusters[static_cast<std::size_t>(v)] == c) return v;
  }
  return kNoNode;
}

NodeId naive_lca(const FlatTree& f, NodeId u, NodeId v) {
  while (u != v) {
    if (f.depth[static_cast<std::size_t>(u)] >= f.depth[static_cast<std::size_t>(v)]) {
      u = f.parent[static_cast<std::size_t>(u)];
    } else {
      v = f.parent[static_cast<std::size_t>(v)];
    }
  }
  return u;
}

std::vector<Cluster> flat_clusters(const FlatTree& f) {
  const std::size_t n = f.universe->size();
  std::vector<Cluster> out(f.size(), Cluster(n));
  for (std::size_t v = f.size(); v-- > 0;) {
    if (f.label[v] != kNoLabel) out[v].insert(f.label[v]);
    if (f.parent[v] != kNoNode) out[static_cast<std::size_t>(f.parent[v])] |= out[v];
  }
  return out;
}

}  // namespace

TEST_CASE("cluster table: star and self") {
  const auto u = abcde();
  const Tree star = tree_of(u, "(a,b,c,d,e);");
  const Tree t = tree_of(u, "(((a,b),(c,d)),e);");
  const auto table_star = build_cluster_table(star);
  const auto marks = mark_common_clusters(t, table_star);
  const auto clusters = node_clusters(t);
  for (NodeId v : t.preorder()) {
    CHECK(marks[static_cast<std::size_t>(v)] == (clusters[static_cast<std::size_t>(v)].is_trivial() ? 1 : 0));
  }
  const auto self = mark_common_clusters(t, build_cluster_table(t));
  for (NodeId v : t.preorder()) CHECK(self[static_cast<std::size_t>(v)] == 1);
}

TEST_CASE("cluster table: caterpillar against balanced reference") {
  const auto u = abcde();
  const Tree cat = tree_of(u, "((((a,b),c),d),e);");
  const auto table = build_cluster_table(tree_of(u, "(((a,b),(c,d)),e);"));
  const auto marks = mark_common_clusters(cat, table);
  const auto clusters = node_clusters(cat);
  for (NodeId v : cat.preorder()) {
    const Cluster& c = clusters[static_cast<std::size_t>(v)];
    const bool expect = c.is_trivial() || c == make_cluster(*u, {"a", "b"}) || c == make_cluster(*u, {"a", "b", "c", "d"});
    CHECK(marks[static_cast<std::size_t>(v)] == (expect ? 1 : 0));
  }
  // {a,b,c} is not in the reference
  CHECK(marks[static_cast<std::size_t>(node_with(cat, make_cluster(*u, {"a", "b", "c"})))] == 0);
  const auto star_marks = mark_common_clusters(tree_of(u, "(a,b,c,d,e);"), table);
  for (auto m : star_marks) CHECK(m == 1);
}

TEST_CASE("cluster table agrees with set intersection") {
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 300; ++rep) {
    const auto u = numbered_universe(3 + static_cast<std::size_t>(rep % 20));
    const Tree a = random_tree(u, rng, 0.3);
    const Tree b = random_tree(u, rng, 0.3);
    const ClusterSet cb = cluster_collection(b);
    const auto marks = mark_common_clusters(a, build_cluster_table(b));
    const auto clusters = node_clusters(a);
    for (NodeId v : a.preorder()) {
      const bool expect = std::binary_search(cb.begin(), cb.end(), clusters[static_cast<std::size_t>(v)]);
      CHECK(marks[static_cast<std::size_t>(v)] == (expect ? 1 : 0));
    }
  }
}

TEST_CASE("one-way compatibility examples") {
  const auto u = abcde();
  const Tree t = tree_of(u, "(((a,b),(c,d)),e);");
  const Tree star = tree_of(u, "(a,b,c,d,e);");
  CHECK(trees_isomorphic(one_way_compatible(t, star), t));
  CHECK(trees_isomorphic(one_way_compatible(star, t), star));
  CHECK(trees_isomorphic(one_way_compatible(t, tree_of(u, "((a,c),(b,d,e));")), star));
  CHECK(trees_isomorphic(one_way_compatible(t, t), t));
}

TEST_CASE("one-way compatibility matches brute force") {
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 500; ++rep) {
    const auto u = numbered_universe(2 + static_cast<std::size_t>(rep % 11));
    const Tree a = random_tree(u, rng, 0.3);
    const Tree b = random_tree(u, rng, 0.5);
    const Tree r = one_way_compatible(a, b);
    r.validate();
    CHECK(cluster_collection(r) == brute_one_way(a, b));
    CHECK(is_subset(cluster_collection(r), cluster_collection(a)));
  }
}

TEST_CASE("merge examples") {
  const auto u = abcde();
  const Tree t = tree_of(u, "(((a,b),(c,d)),e);");
  const Tree star = tree_of(u, "(a,b,c,d,e);");
  CHECK(trees_isomorphic(merge_trees(t, t), t));
  CHECK(trees_isomorphic(merge_trees(star, t), t));
  CHECK(write_newick(merge_trees(tree_of(u, "((a,b),(c,d),e);"), t)) == "(((a,b),(c,d)),e);");
  CHECK_THROWS_AS(merge_trees(t, tree_of(u, "((a,c),(b,d,e));")), IncompatibleClusters);
}

TEST_CASE("merge yields the exact union and is symmetric") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 500; ++rep) {
    const auto u = numbered_universe(2 + static_cast<std::size_t>(rep % 15));
    const Tree base = random_tree(u, rng, 0.0);
    // Two compatible trees: random contractions of one binary tree.
    std::mt19937_64 r2(rng());
    Tree a = base;
    Tree b = base;
    std::bernoulli_distribution coin(0.5);
    for (NodeId v : base.preorder()) {
      if (v == base.root() || base.is_leaf(v)) continue;
      const bool ca = coin(r2);
      const bool cb = coin(r2);
      if (ca) a.delete_node(v);
      if (cb) b.delete_node(v);
    }
    const Tree ab = merge_trees(a, b);
    const Tree ba = merge_trees(b, a);
    ab.validate();
    CHECK(cluster_collection(ab) == set_union(cluster_collection(a), cluster_collection(b)));
    CHECK(trees_isomorphic(ab, ba));
  }
}

TEST_CASE("merge keeps the first tree's values on shared clusters") {
  const auto u = abcde();
  Tree a = tree_of(u, "((a,b),c,d,e);");
  Tree b = tree_of(u, "((a,b),(c,d),e);");
  a.fill_values(7);
  b.fill_values(2);
  const FlatTree m = merge_trees(flatten(a), flatten(b));
  const auto clusters = flat_clusters(m);
  for (std::size_t v = 0; v < m.size(); ++v) {
    const bool from_b = clusters[v] == make_cluster(*u, {"c", "d"});
    CHECK(m.weight[v] == (from_b ? 2 : 7));
  }
}

TEST_CASE("lca queries") {
  const auto u = abcde();
  const Tree cat = tree_of(u, "((((a,b),c),d),e);");
  const FlatTree f = flatten(cat);
  const LcaIndex index(f);
  const auto leaf = leaf_index(f);
  const NodeId a = leaf[0];
  const NodeId c = leaf[2];
  CHECK(index.lca(a, a) == a);
  const std::vector<NodeId> all(leaf.begin(), leaf.end());
  CHECK(index.lca(all) == 0);
  const NodeId abc = index.lca(a, c);
  CHECK(f.leaf_count[static_cast<std::size_t>(abc)] == 3);
  CHECK(flat_clusters(f)[static_cast<std::size_t>(abc)] == make_cluster(*u, {"a", "b", "c"}));
  CHECK_THROWS_AS(index.lca(std::span<const NodeId>{}), std::invalid_argument);

  std::mt19937_64 rng(4);
  for (int rep = 0; rep < 50; ++rep) {
    const FlatTree g = flatten(random_tree(numbered_universe(40), rng, 0.4));
    const LcaIndex gi(g);
    std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(g.size() - 1));
    for (int q = 0; q < 40; ++q) {
      const NodeId x = pick(rng);
      const NodeId y = pick(rng);
      CHECK(gi.lca(x, y) == naive_lca(g, x, y));
    }
  }
}

TEST_CASE("path max queries") {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int rep = 0; rep < 20; ++rep) {
    FlatTree f = flatten(random_tree(numbered_universe(60), rng, 0.3));
    std::uniform_int_distribution<int> wd(0, 1000);
    for (auto& w : f.weight) w = wd(rng);
    const PathMaxIndex pm(f);
    std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(f.size() - 1));
    for (int q = 0; q < 50; ++q) {
      const NodeId v = pick(rng);
      // random ancestor of v
      std::vector<NodeId> chain{v};
      while (f.parent[static_cast<std::size_t>(chain.back())] != kNoNode) chain.push_back(f.parent[static_cast<std::size_t>(chain.back())]);
      const NodeId anc = chain[std::uniform_int_distribution<std::size_t>(0, chain.size() - 1)(rng)];
      int inclusive = 0;
      int below = 0;
      int between = 0;
      for (NodeId x : chain) {
        const int w = f.weight[static_cast<std::size_t>(x)];
        inclusive = std::max(inclusive, w);
        if (x != anc) below = std::max(below, w);
        if (x != anc && x != v) between = std::max(between, w);
        if (x == anc) break;
      }
      CHECK(pm.path_max(anc, v) == inclusive);
      CHECK(pm.path_max_below(anc, v) == below);
      CHECK(pm.max_strictly_between(anc, v) == between);
      ++checked;
    }
    CHECK(pm.path_max(0, 0) == f.weight[0]);
    const auto leaf0 = static_cast<NodeId>(leaf_index(f)[0]);
    int global = 0;
    for (NodeId x = leaf0; x != kNoNode; x = f.parent[static_cast<std::size_t>(x)]) global = std::max(global, f.weight[static_cast<std::size_t>(x)]);
    CHECK(pm.path_max(0, leaf0) == global);
  }
  CHECK(checked == 1000);
  const FlatTree f = flatten(parse_newick("((a,b),c);"));
  const PathMaxIndex pm(f);
  CHECK_THROWS_AS(pm.path_max(1, 4), std::invalid_argument);
}

TEST_CASE("max multiset") {
  MaxMultiset s(10);
  CHECK(s.empty());
  CHECK_THROWS_AS(s.max(), std::logic_error);
  s.insert(3, 5);
  s.insert(4, 5);
  s.insert(7, 2);
  CHECK(s.max() == 5);
  s.remove(3);
  CHECK(s.max() == 5);
  s.remove(4);
  CHECK(s.max() == 2);
  CHECK_THROWS_AS(s.remove(4), std::logic_error);
  CHECK_THROWS_AS(s.insert(7, 1), std::logic_error);
  CHECK(s.contains(7));
  CHECK(s.size() == 1);
}

TEST_CASE("centroid decomposition") {
  const auto u = abcde();
  const Tree cat = tree_of(u, "((((a,b),c),d),e);");
  const auto cd = centroid_decompose(cat);
  const auto clusters = node_clusters(cat);
  REQUIRE(cd.path.size() == 5);
  CHECK(clusters[static_cast<std::size_t>(cd.path[1])] == make_cluster(*u, {"a", "b", "c", "d"}));
  CHECK(clusters[static_cast<std::size_t>(cd.path[3])] == make_cluster(*u, {"a", "b"}));
  CHECK(cat.label(cd.path[4]) == 0);
  std::vector<Label> sides;
  for (NodeId s : cd.side_roots) sides.push_back(cat.label(s));
  CHECK(sides == std::vector<Label>{4, 3, 2, 1});

  const Tree star = tree_of(u, "(a,b,c,d,e);");
  const auto sd = centroid_decompose(star);
  CHECK(sd.path.size() == 2);
  CHECK(star.label(sd.path[1]) == 0);
  CHECK(sd.side_roots.size() == 4);

  const Tree bal = parse_newick("(((a,b),(c,d)),((e,f),(g,h)));");
  const auto bd = centroid_decompose(bal);
  const auto bc = node_clusters(bal);
  std::size_t biggest = 0;
  for (NodeId s : bd.side_roots) biggest = std::max(biggest, bc[static_cast<std::size_t>(s)].size());
  CHECK(biggest == 4);
}

TEST_CASE("centroid decomposition invariants on random trees") {
  std::mt19937_64 rng(6);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 2 + static_cast<std::size_t>(rep % 50);
    const Tree t = random_tree(numbered_universe(n), rng, 0.4);
    const auto cd = centroid_decompose(t);
    const auto clusters = node_clusters(t);
    Cluster seen(n);
    seen.insert(t.label(cd.path.back()));
    std::size_t total = 1;
    for (std::size_t i = 0; i < cd.side_roots.size(); ++i) {
      const Cluster& c = clusters[static_cast<std::size_t>(cd.side_roots[i])];
      CHECK(2 * c.size() <= n);
      CHECK(seen.disjoint(c));
      seen |= c;
      total += c.size();
      CHECK(t.parent(cd.side_roots[i]) == cd.attachment[i]);
    }
    CHECK(total == n);
    CHECK(seen == Cluster::full(n));
    for (std::size_t i = 1; i < cd.path.size(); ++i) {
      const NodeId p = cd.path[i - 1];
      CHECK(t.parent(cd.path[i]) == p);
      for (NodeId c : t.children(p)) CHECK(clusters[static_cast<std::size_t>(c)].size() <= clusters[static_cast<std::size_t>(cd.path[i])].size());
    }
  }
}

TEST_CASE("induced subtree") {
  const auto u = abcde();
  const Tree cat = tree_of(u, "((((a,b),c),d),e);");
  const auto ind = induced_subtree(cat, make_cluster(*u, {"a", "c", "d"}));
  CHECK(write_newick(ind.tree) == "((a,c),d);");
  const auto src = node_clusters(cat);
  std::vector<Cluster> mapped;
  for (NodeId v : ind.tree.preorder()) {
    if (!ind.tree.is_leaf(v)) mapped.push_back(src[static_cast<std::size_t>(ind.source[static_cast<std::size_t>(v)])]);
  }
  CHECK(mapped == std::vector<Cluster>{make_cluster(*u, {"a", "b", "c", "d"}), make_cluster(*u, {"a", "b", "c"})});
  CHECK(write_newick(induced_subtree(cat, make_cluster(*u, {"b"})).tree) == "b;");
  CHECK(trees_isomorphic(induced_subtree(cat, Cluster::full(5)).tree, cat));
  CHECK_THROWS_AS(induced_subtree(cat, Cluster(5)), std::invalid_argument);
}

TEST_CASE("induced subtree preserves lca on random trees") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 3 + static_cast<std::size_t>(rep % 20);
    const Tree t = random_tree(numbered_universe(n), rng, 0.3);
    Cluster c(n);
    for (Label l = 0; l < static_cast<Label>(n); ++l) {
      if (coin(rng) != 0) c.insert(l);
    }
    if (c.empty()) continue;
    const auto ind = induced_subtree(t, c);
    ind.tree.validate();
    const auto src = node_clusters(t);
    const auto sub = node_clusters(ind.tree);
    // every induced cluster is the source cluster cut down to c
    for (NodeId v : ind.tree.preorder()) {
      Cluster cut = src[static_cast<std::size_t>(ind.source[static_cast<std::size_t>(v)])];
      cut &= c;
      CHECK(cut == sub[static_cast<std::size_t>(v)]);
    }
    // and every cut of a source cluster meeting c in 2+ leaves shows up
    ClusterSet want;
    for (const auto& x : cluster_collection(t)) {
      Cluster cut = x;
      cut &= c;
      if (!cut.empty()) want.push_back(cut);
    }
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    CHECK(cluster_collection(ind.tree) == want);
  }
}

TEST_CASE("weighted restriction example") {
  const auto u = abcde();
  Tree t = tree_of(u, "((((a,b),c),d),e);");
  const auto clusters = node_clusters(t);
  std::vector<int> w(t.id_bound(), 4);
  w[static_cast<std::size_t>(node_with(t, make_cluster(*u, {"a", "b"})))] = 3;
  w[static_cast<std::size_t>(node_with(t, make_cluster(*u, {"a", "b", "c"})))] = 1;
  w[static_cast<std::size_t>(node_with(t, make_cluster(*u, {"a", "b", "c", "d"})))] = 2;
  const RestrictedTree r = weighted_restriction(t, make_cluster(*u, {"a", "c", "d"}), w);
  r.tree.validate(true);
  CHECK(r.tree.leaf_count() == 3);
  int specials = 0;
  for (NodeId v : r.tree.preorder()) {
    const auto i = static_cast<std::size_t>(v);
    if (r.special[i] == 0) continue;
    ++specials;
    CHECK(r.weight[i] == 3);
    CHECK(r.tree.child_count(v) == 1);
    CHECK(r.tree.label(r.tree.first_child(v)) == 0);
    CHECK(r.open[i] == 1);
  }
  CHECK(specials == 1);
  // Removing the special gives the induced subtree.
  Tree plain = r.tree;
  for (NodeId v : r.tree.preorder()) {
    if (r.special[static_cast<std::size_t>(v)] != 0) plain.delete_node(v);
  }
  CHECK(write_newick(plain) == "((a,c),d);");
  // Non-special weights come from the source nodes.
  for (NodeId v : r.tree.preorder()) {
    const auto i = static_cast<std::size_t>(v);
    if (r.special[i] == 0) CHECK(r.weight[i] == w[static_cast<std::size_t>(r.source[i])]);
  }
}

TEST_CASE("weighted restriction over the full leaf set has no special nodes") {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 30; ++rep) {
    const Tree t = random_tree(numbered_universe(15), rng);
    std::vector<int> w(t.id_bound(), 1);
    const RestrictedTree r = weighted_restriction(t, Cluster::full(15), w);
    CHECK(std::count(r.special.begin(), r.special.end(), 1) == 0);
    CHECK(std::count(r.open.begin(), r.open.end(), 1) == 0);
    CHECK(trees_isomorphic(r.tree, t));
  }
}

namespace {

// max w(X) over clusters X of the source crossing C, versus the restriction.
void check_max_equality(const Tree& t, const std::vector<int>& w, const Cluster& c, const RestrictedTree& r,
                        const ClusterSet& candidates) {
  const auto src = node_clusters(t);
  const auto sub = node_clusters(r.tree);
  for (const Cluster& cand : candidates) {
    int expect = 0;
    for (NodeId x : t.preorder()) {
      if (!clusters_compatible(cand, src[static_cast<std::size_t>(x)])) expect = std::max(expect, w[static_cast<std::size_t>(x)]);
    }
    int got = 0;
    for (NodeId x : r.tree.preorder()) {
      const auto i = static_cast<std::size_t>(x);
      if (restricted_node_incompatible(sub[i], r.open[i] != 0, cand)) got = std::max(got, r.weight[i]);
    }
    CAPTURE(format_cluster(t.universe(), c));
    CAPTURE(format_cluster(t.universe(), cand));
    CHECK(got == expect);
  }
}

}  // namespace

TEST_CASE("weighted restriction keeps the max over crossing clusters") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> wd(1, 9);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t n = 4 + static_cast<std::size_t>(rep % 8);
    const auto u = numbered_universe(n);
    const Tree t = random_tree(u, rng, 0.3);
    std::vector<int> w(t.id_bound(), 0);
    for (auto& x : w) x = wd(rng);
    Cluster c(n);
    for (Label l = 0; l < static_cast<Label>(n); ++l) {
      if (coin(rng) != 0) c.insert(l);
    }
    if (c.size() < 2) continue;
    const RestrictedTree r = weighted_restriction(t, c, w);
    // Every nonempty subset C of c, via bit enumeration over c's labels.
    const auto labels = c.labels();
    ClusterSet candidates;
    for (std::uint32_t mask = 1; mask < (1U << labels.size()); ++mask) {
      Cluster cand(n);
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if ((mask >> i) & 1U) cand.insert(labels[i]);
      }
      candidates.push_back(cand);
    }
    check_max_equality(t, w, c, r, candidates);
  }
}

TEST_CASE("special-node rule read as a descendant test loses crossing weights") {
  // Source cluster {a,b,x} cut down to {a,b} stays a regular node, yet it
  // crosses C = {a,b,c}. Treating only special nodes as partial loses it.
  const auto u = make_universe({"a", "b", "c", "d", "x"});
  const Tree t = tree_of(u, "((a,b,x),c,d);");
  std::vector<int> w(t.id_bound(), 1);
  const NodeId abx = node_with(t, make_cluster(*u, {"a", "b", "x"}));
  w[static_cast<std::size_t>(abx)] = 5;
  const Cluster restricted = make_cluster(*u, {"a", "b", "c"});
  const RestrictedTree r = weighted_restriction(t, restricted, w);
  const auto sub = node_clusters(r.tree);
  const Cluster cand = make_cluster(*u, {"a", "b", "c"});
  int literal = 0;
  int open_rule = 0;
  for (NodeId v : r.tree.preorder()) {
    const auto i = static_cast<std::size_t>(v);
    if (!clusters_compatible(cand, sub[i])) literal = std::max(literal, r.weight[i]);
    if (restricted_node_incompatible(sub[i], r.open[i] != 0, cand)) open_rule = std::max(open_rule, r.weight[i]);
  }
  int expect = 0;
  const auto src = node_clusters(t);
  for (NodeId v : t.preorder()) {
    if (!clusters_compatible(cand, src[static_cast<std::size_t>(v)])) expect = std::max(expect, w[static_cast<std::size_t>(v)]);
  }
  CHECK(expect == 5);
  CHECK(open_rule == expect);
  CHECK(literal < expect);
}

TEST_CASE("contract removes exactly the unmarked nodes") {
  std::mt19937_64 rng(10);
  std::bernoulli_distribution coin(0.5);
  for (int rep = 0; rep < 100; ++rep) {
    const FlatTree f = flatten(random_tree(numbered_universe(20), rng, 0.2));
    std::vector<std::uint8_t> keep(f.size());
    for (auto& k : keep) k = coin(rng) ? 1 : 0;
    const FlatTree g = contract(f, keep);
    const auto fc = flat_clusters(f);
    ClusterSet want;
    for (std::size_t v = 0; v < f.size(); ++v) {
      if (v == 0 || f.label[v] != kNoLabel || keep[v] != 0) want.push_back(fc[v]);
    }
    std::sort(want.begin(), want.end());
    ClusterSet got = flat_clusters(g);
    std::sort(got.begin(), got.end());
    CHECK(got == want);
    unflatten(g).validate();
  }
}
