#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "phylocons/cluster.hpp"
#include "phylocons/execution.hpp"
#include "phylocons/flat_tree.hpp"
#include "phylocons/tree_ops.hpp"

namespace phylocons {

enum class FilterImpl { kNaive, kFast };
enum class WeightsMethod { kBitvec, kDay, kAuto };

/// w(C) for every cluster occurring in a profile, kept sorted by cluster.
class WeightMap {
 public:
  WeightMap() = default;
  /// Entries must be sorted by cluster with no repeats.
  explicit WeightMap(std::vector<std::pair<Cluster, int>> entries);

  std::optional<int> find(const Cluster& c) const;
  /// Throws MissingWeight when absent.
  int at(const Cluster& c) const;
  std::size_t size() const { return entries_.size(); }
  const std::vector<std::pair<Cluster, int>>& entries() const { return entries_; }

  friend bool operator==(const WeightMap&, const WeightMap&) = default;

 private:
  std::vector<std::pair<Cluster, int>> entries_;
};

/// Per tree, per node id: the number of profile trees containing that node's cluster.
using NodeWeights = std::vector<std::vector<int>>;

/// Sorts all cluster bit vectors of the profile; O(kn^2 / w) plus sorting.
NodeWeights node_weights_bitvec(const Profile& profile, Execution exec = Execution::kParallel);
/// Queries every tree against every other tree's cluster table; O(k^2 n).
NodeWeights node_weights_day(const Profile& profile, Execution exec = Execution::kParallel);

WeightMap compute_weights_bitvec(const Profile& profile, Execution exec = Execution::kParallel);
WeightMap compute_weights_day(const Profile& profile, Execution exec = Execution::kParallel);

/// keep[u] == 1 iff a's node u survives filtering against b: w(u) exceeds the
/// weight of every node of b incompatible with it. The root and leaves always
/// survive. `b` may be a restricted tree with open nodes.
std::vector<std::uint8_t> filter_keep_naive(const FlatTree& a, const FlatTree& b);
std::vector<std::uint8_t> filter_keep_fast(const FlatTree& a, const FlatTree& b);
FlatTree filter_clusters(const FlatTree& a, const FlatTree& b, FilterImpl impl);

/// Weights come from `w`; throws MissingWeight for a cluster it lacks.
Tree filter_clusters_naive(const Tree& a, const Tree& b, const WeightMap& w);
Tree filter_clusters_fast(const Tree& a, const Tree& b, const WeightMap& w);

struct FreqDiffTrace {
  /// Cluster set of the working tree after each main-loop step; entry j
  /// covers the first j + 1 trees.
  std::vector<ClusterSet> forward;
};

/// Frequency difference consensus tree. Output node values hold w(C).
/// `kAuto` picks the bit-vector weights when k >= n and Day tables otherwise.
Tree frequency_difference_consensus(const Profile& profile, FilterImpl impl = FilterImpl::kFast,
                                    WeightsMethod weights = WeightsMethod::kAuto, FreqDiffTrace* trace = nullptr,
                                    Execution exec = Execution::kParallel);

}  // namespace phylocons
