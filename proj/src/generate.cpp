#include "phylocons/generate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace phylocons {

UniversePtr numbered_universe(std::size_t n) {
  const std::size_t width = std::to_string(n).size();
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    std::string digits = std::to_string(i);
    names.push_back("t" + std::string(width - digits.size(), '0') + digits);
  }
  return make_universe(std::move(names));
}

Tree random_tree(const UniversePtr& universe, std::mt19937_64& rng, double contract_prob) {
  if (contract_prob < 0.0 || contract_prob > 1.0) throw std::invalid_argument("contraction probability outside [0,1]");
  const std::size_t n = universe->size();
  if (n == 0) throw std::invalid_argument("empty universe");
  std::vector<Label> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);

  Tree t(universe);
  if (n == 1) {
    t.add_leaf(kNoNode, perm[0]);
    return t;
  }
  // (parent, lo, hi) ranges of perm still to be split.
  std::vector<std::tuple<NodeId, std::size_t, std::size_t>> work{{kNoNode, 0, n}};
  std::vector<NodeId> inner;
  while (!work.empty()) {
    auto [parent, lo, hi] = work.back();
    work.pop_back();
    if (hi - lo == 1) {
      t.add_leaf(parent, perm[lo]);
      continue;
    }
    const NodeId v = t.add_node(parent);
    if (parent != kNoNode) inner.push_back(v);
    std::uniform_int_distribution<std::size_t> split(lo + 1, hi - 1);
    const std::size_t mid = split(rng);
    work.emplace_back(v, mid, hi);
    work.emplace_back(v, lo, mid);
  }
  std::bernoulli_distribution contract(contract_prob);
  for (NodeId v : inner) {
    if (contract(rng)) t.delete_node(v);
  }
  return t.compacted();
}

Profile random_profile(std::size_t k, std::size_t n, std::uint64_t seed, double contract_prob) {
  if (k < 1) throw std::invalid_argument("need at least one tree");
  if (n < 2) throw std::invalid_argument("need at least two leaves");
  std::mt19937_64 rng(seed);
  Profile p;
  p.universe = numbered_universe(n);
  for (std::size_t j = 0; j < k; ++j) p.trees.push_back(random_tree(p.universe, rng, contract_prob));
  return p;
}

}  // namespace phylocons
