#include "support.hpp"

#include <algorithm>
#include <sstream>

namespace phylocons::testing {

Profile profile_of(std::initializer_list<std::string_view> lines) {
  std::stringstream in;
  for (auto line : lines) in << line << '\n';
  return read_profile(in);
}

Profile s_star() { return profile_of({kStar[0], kStar[1], kStar[2], kStar[3]}); }

Tree tree_of(const UniversePtr& universe, std::string_view newick) { return parse_newick(newick, universe); }

ClusterSet clusters_of(const LabelUniverse& u, std::initializer_list<std::initializer_list<std::string_view>> groups) {
  ClusterSet out;
  for (const auto& g : groups) out.push_back(make_cluster(u, g));
  std::sort(out.begin(), out.end());
  return out;
}

Profile structured_profile(std::size_t k, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Profile p;
  p.universe = numbered_universe(n);
  const Tree base = random_tree(p.universe, rng, 0.0);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> swaps(0, 2);
  std::uniform_real_distribution<double> prob(0.0, 0.6);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Label> relabel(n);
    for (std::size_t i = 0; i < n; ++i) relabel[i] = static_cast<Label>(i);
    for (int s = swaps(rng); s > 0; --s) std::swap(relabel[pick(rng)], relabel[pick(rng)]);
    Tree t(p.universe);
    std::vector<NodeId> id(base.id_bound(), kNoNode);
    std::vector<NodeId> inner;
    for (NodeId v : base.preorder()) {
      const NodeId parent = base.parent(v) == kNoNode ? kNoNode : id[static_cast<std::size_t>(base.parent(v))];
      if (base.is_leaf(v)) {
        id[static_cast<std::size_t>(v)] = t.add_leaf(parent, relabel[static_cast<std::size_t>(base.label(v))]);
      } else {
        id[static_cast<std::size_t>(v)] = t.add_node(parent);
        if (parent != kNoNode) inner.push_back(id[static_cast<std::size_t>(v)]);
      }
    }
    std::bernoulli_distribution contract(prob(rng));
    for (NodeId v : inner) {
      if (contract(rng)) t.delete_node(v);
    }
    p.trees.push_back(t.compacted());
  }
  return p;
}

Profile fuzz_profile(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 7);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(4, 12)(rng);
  if (seed % 2 == 0) return random_profile(k, n, rng());
  return structured_profile(k, n, rng());
}

ClusterSet brute_filter(const Tree& a, const Tree& b, const WeightMap& w) {
  const ClusterSet cb = cluster_collection(b);
  ClusterSet out;
  for (const auto& c : cluster_collection(a)) {
    bool keep = true;
    if (!c.is_trivial()) {
      for (const auto& x : cb) {
        if (!clusters_compatible(c, x) && w.at(c) <= w.at(x)) keep = false;
      }
    }
    if (keep) out.push_back(c);
  }
  return out;
}

ClusterSet brute_one_way(const Tree& a, const Tree& b) {
  ClusterSet out;
  for (const auto& c : cluster_collection(a)) {
    if (cluster_compatible_with_tree(c, b)) out.push_back(c);
  }
  return out;
}

ClusterSet set_union(const ClusterSet& a, const ClusterSet& b) {
  ClusterSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const ClusterSet& small, const ClusterSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::string describe(const Profile& p) {
  std::string out;
  for (const auto& t : p.trees) out += write_newick(t) + "\n";
  return out;
}

}  // namespace phylocons::testing
