#include <algorithm>
#include <stdexcept>
#include <string>

#include "phylocons/cluster_table.hpp"
#include "phylocons/errors.hpp"
#include "phylocons/freq_diff.hpp"

namespace phylocons {
namespace {

std::vector<std::vector<Cluster>> clusters_per_tree(const Profile& profile, Execution exec) {
  const auto k = static_cast<long>(profile.k());
  std::vector<std::vector<Cluster>> out(profile.k());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::kParallel)
  for (long j = 0; j < k; ++j) out[static_cast<std::size_t>(j)] = node_clusters(profile.trees[static_cast<std::size_t>(j)]);
  return out;
}

WeightMap count_clusters(const Profile& profile, const std::vector<std::vector<Cluster>>& per_tree) {
  std::vector<Cluster> all;
  for (std::size_t j = 0; j < per_tree.size(); ++j) {
    const Tree& t = profile.trees[j];
    for (NodeId v : t.preorder()) all.push_back(per_tree[j][static_cast<std::size_t>(v)]);
  }
  std::sort(all.begin(), all.end());
  std::vector<std::pair<Cluster, int>> entries;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t e = i;
    while (e < all.size() && all[e] == all[i]) ++e;
    entries.emplace_back(std::move(all[i]), static_cast<int>(e - i));
    i = e;
  }
  return WeightMap(std::move(entries));
}

}  // namespace

WeightMap::WeightMap(std::vector<std::pair<Cluster, int>> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (!(entries_[i - 1].first < entries_[i].first)) throw std::invalid_argument("weight map entries not sorted");
  }
}

std::optional<int> WeightMap::find(const Cluster& c) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                             [](const auto& entry, const Cluster& key) { return entry.first < key; });
  if (it == entries_.end() || it->first != c) return std::nullopt;
  return it->second;
}

int WeightMap::at(const Cluster& c) const {
  if (auto w = find(c)) return *w;
  throw MissingWeight("no weight for a cluster of size " + std::to_string(c.size()));
}

WeightMap compute_weights_bitvec(const Profile& profile, Execution exec) {
  profile.validate();
  return count_clusters(profile, clusters_per_tree(profile, exec));
}

NodeWeights node_weights_bitvec(const Profile& profile, Execution exec) {
  profile.validate();
  const auto per_tree = clusters_per_tree(profile, exec);
  const WeightMap map = count_clusters(profile, per_tree);
  const auto k = static_cast<long>(profile.k());
  NodeWeights out(profile.k());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::kParallel)
  for (long j = 0; j < k; ++j) {
    const Tree& t = profile.trees[static_cast<std::size_t>(j)];
    auto& w = out[static_cast<std::size_t>(j)];
    w.assign(t.id_bound(), 0);
    for (NodeId v : t.preorder()) {
      w[static_cast<std::size_t>(v)] = map.at(per_tree[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)]);
    }
  }
  return out;
}

NodeWeights node_weights_day(const Profile& profile, Execution exec) {
  profile.validate();
  const std::size_t k = profile.k();
  std::vector<FlatTree> flats(k);
  std::vector<ClusterTable> tables;
  tables.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    flats[j] = flatten(profile.trees[j]);
    tables.emplace_back(flats[j]);
  }
  NodeWeights out(k);
  const auto kk = static_cast<long>(k);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::kParallel)
  for (long jl = 0; jl < kk; ++jl) {
    const auto j = static_cast<std::size_t>(jl);
    const FlatTree& f = flats[j];
    std::vector<int> w(f.size(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      const auto flag = mark_common_clusters(f, tables[i]);
      for (std::size_t v = 0; v < f.size(); ++v) w[v] += flag[v];
    }
    auto& dst = out[j];
    dst.assign(profile.trees[j].id_bound(), 0);
    for (std::size_t v = 0; v < f.size(); ++v) dst[static_cast<std::size_t>(f.source[v])] = w[v];
  }
  return out;
}

WeightMap compute_weights_day(const Profile& profile, Execution exec) {
  const NodeWeights weights = node_weights_day(profile, exec);
  const auto per_tree = clusters_per_tree(profile, exec);
  std::vector<std::pair<Cluster, int>> entries;
  for (std::size_t j = 0; j < profile.k(); ++j) {
    for (NodeId v : profile.trees[j].preorder()) {
      const auto i = static_cast<std::size_t>(v);
      entries.emplace_back(per_tree[j][i], weights[j][i]);
    }
  }
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                entries.end());
  return WeightMap(std::move(entries));
}

}  // namespace phylocons
