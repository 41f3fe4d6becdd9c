#include "phylocons/oracle.hpp"

#include <algorithm>
#include <functional>

namespace phylocons {

ClusterCensus census(const Profile& profile, Execution exec) {
  profile.validate();
  std::vector<ClusterSet> per_tree;
  for (const Tree& t : profile.trees) per_tree.push_back(cluster_collection(t));

  std::vector<Cluster> all;
  for (const auto& s : per_tree) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  ClusterCensus out;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t e = i;
    while (e < all.size() && all[e] == all[i]) ++e;
    out.push_back({all[i], static_cast<int>(e - i), 0, 0});
    i = e;
  }

  const auto size = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::kParallel)
  for (long i = 0; i < size; ++i) {
    CensusEntry& entry = out[static_cast<std::size_t>(i)];
    for (const auto& clusters : per_tree) {
      const bool crosses = std::any_of(clusters.begin(), clusters.end(),
                                       [&](const Cluster& d) { return !clusters_compatible(entry.cluster, d); });
      if (crosses) ++entry.q_count;
    }
    for (const auto& other : out) {
      if (!clusters_compatible(entry.cluster, other.cluster)) {
        entry.max_incompatible_weight = std::max(entry.max_incompatible_weight, other.k_count);
      }
    }
  }
  return out;
}

namespace {

ClusterSet select(const Profile& profile, const std::function<bool(const CensusEntry&, int)>& keep) {
  const int k = static_cast<int>(profile.k());
  ClusterSet out;
  for (const auto& e : census(profile)) {
    if (keep(e, k)) out.push_back(e.cluster);
  }
  return out;
}

}  // namespace

ClusterSet oracle_strict(const Profile& profile) {
  return select(profile, [](const CensusEntry& e, int k) { return e.k_count == k; });
}

ClusterSet oracle_majority(const Profile& profile) {
  return select(profile, [](const CensusEntry& e, int k) { return 2 * e.k_count > k; });
}

ClusterSet oracle_majority_plus(const Profile& profile) {
  return select(profile, [](const CensusEntry& e, int) { return e.k_count > e.q_count; });
}

ClusterSet oracle_freq_diff(const Profile& profile) {
  return select(profile, [](const CensusEntry& e, int) { return e.k_count > e.max_incompatible_weight; });
}

}  // namespace phylocons
