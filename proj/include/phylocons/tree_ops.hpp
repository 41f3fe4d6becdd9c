#pragma once

#include <initializer_list>
#include <string_view>
#include <vector>

#include "phylocons/cluster.hpp"
#include "phylocons/tree.hpp"

namespace phylocons {

/// Sorted, duplicate-free list of clusters.
using ClusterSet = std::vector<Cluster>;

/// Cluster of every live node, indexed by NodeId (empty clusters for holes).
std::vector<Cluster> node_clusters(const Tree& t);

/// C(T), including the trivial clusters.
ClusterSet cluster_collection(const Tree& t);

/// True iff `c` is compatible with every cluster of `t`. O(n).
bool cluster_compatible_with_tree(const Cluster& c, const Tree& t);

/// The tree whose clusters are `family` plus all trivial clusters.
/// Throws IncompatibleClusters naming the first crossing pair found.
Tree tree_from_clusters(const ClusterSet& family, UniversePtr universe);

bool trees_isomorphic(const Tree& a, const Tree& b);

/// Cluster over `universe` from label names; throws std::invalid_argument on
/// an unknown name.
Cluster make_cluster(const LabelUniverse& universe, std::initializer_list<std::string_view> names);

/// Non-trivial members of a cluster set.
ClusterSet nontrivial(const ClusterSet& clusters);

/// "{a,b,c}" using the universe's label names.
std::string format_cluster(const LabelUniverse& universe, const Cluster& c);

}  // namespace phylocons
