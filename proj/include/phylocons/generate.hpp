#pragma once

#include <cstdint>
#include <random>

#include "phylocons/tree.hpp"

namespace phylocons {

inline constexpr double kDefaultContractProb = 0.25;

/// Labels "t1".."tn", zero-padded so lexicographic and numeric order agree.
UniversePtr numbered_universe(std::size_t n);

/// Random leaf permutation, uniform recursive binary splits, then every
/// internal non-root edge contracted independently with `contract_prob`.
Tree random_tree(const UniversePtr& universe, std::mt19937_64& rng, double contract_prob = kDefaultContractProb);

/// k independent random trees on n leaves; deterministic per seed.
/// Throws std::invalid_argument unless k >= 1 and n >= 2.
Profile random_profile(std::size_t k, std::size_t n, std::uint64_t seed,
                       double contract_prob = kDefaultContractProb);

}  // namespace phylocons
