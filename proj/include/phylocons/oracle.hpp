#pragma once

#include <vector>

#include "phylocons/execution.hpp"
#include "phylocons/tree_ops.hpp"

namespace phylocons {

struct CensusEntry {
  Cluster cluster;
  int k_count = 0;                  // trees containing the cluster
  int q_count = 0;                  // trees with a cluster crossing it
  int max_incompatible_weight = 0;  // largest k_count among crossing occurring clusters
};

/// One entry per cluster occurring in the profile, sorted by cluster. Built by
/// comparing every pair of clusters directly.
using ClusterCensus = std::vector<CensusEntry>;

ClusterCensus census(const Profile& profile, Execution exec = Execution::kParallel);

/// Clusters in every tree.
ClusterSet oracle_strict(const Profile& profile);
/// Clusters in more than k/2 trees.
ClusterSet oracle_majority(const Profile& profile);
/// Clusters in more trees than are incompatible with them.
ClusterSet oracle_majority_plus(const Profile& profile);
/// Clusters more frequent than every cluster crossing them.
ClusterSet oracle_freq_diff(const Profile& profile);

}  // namespace phylocons
