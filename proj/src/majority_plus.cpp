#include "phylocons/majority_plus.hpp"

#include <algorithm>

#include "phylocons/cluster_table.hpp"
#include "phylocons/flat_tree.hpp"
#include "phylocons/merge.hpp"

namespace phylocons {
namespace {

struct Tally {
  std::vector<int> k;
  std::vector<int> q;
};

void tally_tree(const FlatTree& t, const FlatTree& other, const ClusterTable& table, Tally& acc) {
  const auto occurs = mark_common_clusters(t, table);
  const auto compatible = compatible_mask(t, other);
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (occurs[v] != 0) {
      ++acc.k[v];
    } else if (compatible[v] == 0) {
      ++acc.q[v];
    }
  }
}

Tally tally(const FlatTree& t, const std::vector<FlatTree>& trees, const std::vector<ClusterTable>& tables,
            Execution exec) {
  const std::size_t m = t.size();
  Tally total{std::vector<int>(m, 0), std::vector<int>(m, 0)};
  const auto k = static_cast<long>(trees.size());
  if (exec == Execution::kSerial) {
    for (long j = 0; j < k; ++j) tally_tree(t, trees[static_cast<std::size_t>(j)], tables[static_cast<std::size_t>(j)], total);
    return total;
  }
#pragma omp parallel
  {
    Tally local{std::vector<int>(m, 0), std::vector<int>(m, 0)};
#pragma omp for schedule(static) nowait
    for (long j = 0; j < k; ++j) tally_tree(t, trees[static_cast<std::size_t>(j)], tables[static_cast<std::size_t>(j)], local);
#pragma omp critical
    for (std::size_t v = 0; v < m; ++v) {
      total.k[v] += local.k[v];
      total.q[v] += local.q[v];
    }
  }
  return total;
}

}  // namespace

Tree majority_plus_consensus(const Profile& profile, Execution exec, MajorityPlusTrace* trace) {
  profile.validate();
  const std::size_t k = profile.k();
  std::vector<FlatTree> trees;
  trees.reserve(k);
  for (const Tree& t : profile.trees) {
    FlatTree f = flatten(t);
    std::fill(f.weight.begin(), f.weight.end(), 1);
    trees.push_back(std::move(f));
  }
  std::vector<ClusterTable> tables;
  tables.reserve(k);
  for (const FlatTree& f : trees) tables.emplace_back(f);

  // Phase 1: weights of the working tree are the counters.
  FlatTree work = trees[0];
  for (std::size_t j = 1; j < k; ++j) {
    const auto occurs = mark_common_clusters(work, tables[j]);
    const auto compatible = compatible_mask(work, trees[j]);
    std::vector<std::uint8_t> keep(work.size(), 1);
    for (std::size_t v = 0; v < work.size(); ++v) {
      if (occurs[v] != 0) {
        ++work.weight[v];
      } else if (compatible[v] == 0) {
        --work.weight[v];
      }
      keep[v] = work.weight[v] > 0 ? 1 : 0;
    }
    work = contract(work, keep);
    // New clusters arrive with the counter 1 carried by trees[j].
    work = merge_trees(work, one_way_compatible(trees[j], work));
  }
  if (trace != nullptr) trace->phase1_candidates = cluster_collection(unflatten(work));

  // Phase 2.
  const Tally counts = tally(work, trees, tables, exec);
  std::vector<std::uint8_t> keep(work.size(), 0);
  for (std::size_t v = 0; v < work.size(); ++v) {
    keep[v] = counts.k[v] > counts.q[v] ? 1 : 0;
    work.weight[v] = counts.k[v];
  }
  return unflatten(contract(work, keep));
}

}  // namespace phylocons
