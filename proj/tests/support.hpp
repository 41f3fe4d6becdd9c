#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <string_view>

#include "phylocons/phylocons.hpp"

namespace phylocons::testing {

inline constexpr const char* kStar[] = {
    "(((a,b),(c,d)),e);",
    "((a,b),(c,d),e);",
    "((((a,b),c),d),e);",
    "((a,c),(b,d,e));",
};

Profile profile_of(std::initializer_list<std::string_view> lines);
Profile s_star();

/// Parses over an existing universe.
Tree tree_of(const UniversePtr& universe, std::string_view newick);

/// Cluster set built from label-name lists; trivial clusters are not added.
ClusterSet clusters_of(const LabelUniverse& u, std::initializer_list<std::initializer_list<std::string_view>> groups);

/// Trees drawn around one random base tree: each copy swaps a few leaf labels
/// and contracts edges. Produces profiles with many shared clusters.
Profile structured_profile(std::size_t k, std::size_t n, std::uint64_t seed);

/// Alternates plain random and structured profiles; n in [4,12], k in [1,8].
Profile fuzz_profile(std::uint64_t seed);

/// Clusters of `a` with weight above every crossing cluster of `b`, plus the
/// trivial ones.
ClusterSet brute_filter(const Tree& a, const Tree& b, const WeightMap& w);

/// Clusters of `a` compatible with every cluster of `b`.
ClusterSet brute_one_way(const Tree& a, const Tree& b);

ClusterSet set_union(const ClusterSet& a, const ClusterSet& b);
bool is_subset(const ClusterSet& small, const ClusterSet& big);

std::string describe(const Profile& p);

}  // namespace phylocons::testing
