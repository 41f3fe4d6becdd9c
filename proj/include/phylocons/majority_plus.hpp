#pragma once

#include "phylocons/execution.hpp"
#include "phylocons/tree.hpp"
#include "phylocons/tree_ops.hpp"

namespace phylocons {

struct MajorityPlusTrace {
  ClusterSet phase1_candidates;  // clusters of the working tree when Phase 1 ends
};

/// Majority rule (+) consensus tree in O(kn).
///
/// Phase 1 keeps a candidate tree whose node counters gain 1 for every tree
/// containing the cluster and lose 1 for every tree incompatible with it;
/// clusters reaching 0 are dropped and compatible clusters of the next tree
/// enter with counter 1. Phase 2 counts K and Q exactly and drops K <= Q.
/// Output node values hold K.
Tree majority_plus_consensus(const Profile& profile, Execution exec = Execution::kParallel,
                             MajorityPlusTrace* trace = nullptr);

}  // namespace phylocons
