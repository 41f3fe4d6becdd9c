#include "phylocons/freq_diff.hpp"

#include "phylocons/merge.hpp"

namespace phylocons {

Tree frequency_difference_consensus(const Profile& profile, FilterImpl impl, WeightsMethod weights,
                                    FreqDiffTrace* trace, Execution exec) {
  profile.validate();
  const std::size_t k = profile.k();
  if (weights == WeightsMethod::kAuto) weights = k >= profile.n() ? WeightsMethod::kBitvec : WeightsMethod::kDay;
  const NodeWeights w =
      weights == WeightsMethod::kBitvec ? node_weights_bitvec(profile, exec) : node_weights_day(profile, exec);

  std::vector<FlatTree> trees;
  trees.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    FlatTree f = flatten(profile.trees[j]);
    for (std::size_t v = 0; v < f.size(); ++v) f.weight[v] = w[j][static_cast<std::size_t>(f.source[v])];
    trees.push_back(std::move(f));
  }

  auto record = [&](const FlatTree& t) {
    if (trace != nullptr) trace->forward.push_back(cluster_collection(unflatten(t)));
  };

  FlatTree work = trees[0];
  record(work);
  for (std::size_t j = 1; j < k; ++j) {
    FlatTree a = filter_clusters(work, trees[j], impl);
    FlatTree b = filter_clusters(trees[j], work, impl);
    // The two survivors are always compatible; an exception here is a bug.
    work = merge_trees(a, b);
    record(work);
  }
  for (std::size_t j = 0; j < k; ++j) work = filter_clusters(work, trees[j], impl);
  return unflatten(work);
}

}  // namespace phylocons
