#include "phylocons/tree_ops.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "phylocons/errors.hpp"

namespace phylocons {

std::vector<Cluster> node_clusters(const Tree& t) {
  const std::size_t n = t.universe().size();
  std::vector<Cluster> out(t.id_bound());
  for (NodeId v : t.postorder()) {
    Cluster c(n);
    if (t.is_leaf(v)) {
      c.insert(t.label(v));
    } else {
      for (NodeId ch : t.children(v)) c |= out[static_cast<std::size_t>(ch)];
    }
    out[static_cast<std::size_t>(v)] = std::move(c);
  }
  return out;
}

ClusterSet cluster_collection(const Tree& t) {
  ClusterSet out;
  auto all = node_clusters(t);
  for (NodeId v : t.preorder()) out.push_back(std::move(all[static_cast<std::size_t>(v)]));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool cluster_compatible_with_tree(const Cluster& c, const Tree& t) {
  const std::size_t total = c.size();
  std::vector<std::size_t> hits(t.id_bound(), 0);
  std::vector<std::size_t> leaves(t.id_bound(), 0);
  for (NodeId v : t.postorder()) {
    const auto i = static_cast<std::size_t>(v);
    if (t.is_leaf(v)) {
      leaves[i] = 1;
      hits[i] = c.contains(t.label(v)) ? 1 : 0;
    } else {
      for (NodeId ch : t.children(v)) {
        hits[i] += hits[static_cast<std::size_t>(ch)];
        leaves[i] += leaves[static_cast<std::size_t>(ch)];
      }
    }
    if (hits[i] > 0 && hits[i] < leaves[i] && hits[i] < total) return false;
  }
  return true;
}

Tree tree_from_clusters(const ClusterSet& family, UniversePtr universe) {
  const std::size_t n = universe->size();
  if (n == 0) throw std::invalid_argument("empty label universe");
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].universe_size() != n) throw std::invalid_argument("cluster over a different universe");
    if (family[i].empty()) throw std::invalid_argument("empty cluster");
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!clusters_compatible(family[i], family[j])) {
        throw IncompatibleClusters("clusters " + format_cluster(*universe, family[i]) + " and " +
                                   format_cluster(*universe, family[j]) + " are incompatible");
      }
    }
  }
  // Internal clusters only, largest first; the root and leaves are implicit.
  std::vector<const Cluster*> inner;
  for (const auto& c : family) {
    const std::size_t s = c.size();
    if (s > 1 && s < n) inner.push_back(&c);
  }
  std::stable_sort(inner.begin(), inner.end(), [](const Cluster* a, const Cluster* b) { return a->size() > b->size(); });
  inner.erase(std::unique(inner.begin(), inner.end(), [](const Cluster* a, const Cluster* b) { return *a == *b; }),
              inner.end());

  // parent_of[i]: index of the smallest larger superset in `inner`, -1 for the root.
  std::vector<int> parent_of(inner.size(), -1);
  for (std::size_t i = 0; i < inner.size(); ++i) {
    for (std::size_t j = i; j-- > 0;) {
      if (inner[i]->subset_of(*inner[j])) {
        parent_of[i] = static_cast<int>(j);
        break;
      }
    }
  }
  std::vector<int> leaf_owner(n, -1);
  for (std::size_t i = 0; i < inner.size(); ++i) {
    for (Label l : inner[i]->labels()) leaf_owner[static_cast<std::size_t>(l)] = static_cast<int>(i);
  }

  Tree t(std::move(universe));
  if (n == 1) {
    t.add_leaf(kNoNode, 0);
    return t;
  }
  const NodeId root = t.add_node(kNoNode);
  std::vector<NodeId> ids(inner.size(), kNoNode);
  for (std::size_t i = 0; i < inner.size(); ++i) {
    ids[i] = t.add_node(parent_of[i] < 0 ? root : ids[static_cast<std::size_t>(parent_of[i])]);
  }
  for (std::size_t l = 0; l < n; ++l) {
    const int o = leaf_owner[l];
    t.add_leaf(o < 0 ? root : ids[static_cast<std::size_t>(o)], static_cast<Label>(l));
  }
  return t.compacted();
}

bool trees_isomorphic(const Tree& a, const Tree& b) {
  if (a.universe_ptr() != b.universe_ptr() && a.universe().labels() != b.universe().labels()) return false;
  return cluster_collection(a) == cluster_collection(b);
}

Cluster make_cluster(const LabelUniverse& universe, std::initializer_list<std::string_view> names) {
  Cluster c(universe.size());
  for (auto name : names) {
    const auto label = universe.find(name);
    if (!label) throw std::invalid_argument("unknown label '" + std::string(name) + "'");
    c.insert(*label);
  }
  return c;
}

ClusterSet nontrivial(const ClusterSet& clusters) {
  ClusterSet out;
  for (const auto& c : clusters) {
    if (!c.is_trivial()) out.push_back(c);
  }
  return out;
}

std::string format_cluster(const LabelUniverse& universe, const Cluster& c) {
  std::string out = "{";
  bool first = true;
  for (Label l : c.labels()) {
    if (!first) out += ',';
    out += universe.name(l);
    first = false;
  }
  return out + "}";
}

}  // namespace phylocons
