#include <doctest.h>

#include "support.hpp"

using namespace phylocons;
using namespace phylocons::testing;

TEST_CASE("majority plus on the fixture") {
  const Profile p = s_star();
  const Tree t = majority_plus_consensus(p);
  CHECK(write_newick(t) == "(((a,b),c,d),e);");
  CHECK(nontrivial(cluster_collection(t)) == clusters_of(*p.universe, {{"a", "b"}, {"a", "b", "c", "d"}}));
  CHECK(write_newick(majority_plus_consensus(p, Execution::kSerial)) == "(((a,b),c,d),e);");
}

TEST_CASE("majority plus output values are occurrence counts") {
  const Profile p = s_star();
  const Tree t = majority_plus_consensus(p);
  const auto clusters = node_clusters(t);
  for (NodeId v : t.preorder()) {
    const Cluster& c = clusters[static_cast<std::size_t>(v)];
    int expect = 4;
    if (c == make_cluster(*p.universe, {"a", "b"})) expect = 3;
    if (c == make_cluster(*p.universe, {"a", "b", "c", "d"})) expect = 2;
    CHECK(t.value(v) == expect);
  }
}

TEST_CASE("majority plus: identical trees and one tree") {
  const Profile same = profile_of({"(((a,b),c),(d,e));", "(((a,b),c),(d,e));", "(((a,b),c),(d,e));"});
  CHECK(trees_isomorphic(majority_plus_consensus(same), same.trees[0]));
  const Profile one = profile_of({"((a,b,c),(d,e),f);"});
  CHECK(trees_isomorphic(majority_plus_consensus(one), one.trees[0]));
}

TEST_CASE("majority plus: ties are dropped") {
  // {a,b} in one tree, crossed by {b,c} in the other.
  const Profile p = profile_of({"((a,b),c,d);", "((b,c),a,d);"});
  CHECK(write_newick(majority_plus_consensus(p)) == "(a,b,c,d);");
}

TEST_CASE("majority plus matches the oracle") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Profile p = fuzz_profile(seed);
    MajorityPlusTrace trace;
    const Tree t = majority_plus_consensus(p, Execution::kParallel, &trace);
    const ClusterSet expect = oracle_majority_plus(p);
    CAPTURE(describe(p));
    CHECK(cluster_collection(t) == expect);
    CHECK(is_subset(expect, trace.phase1_candidates));
  }
}

TEST_CASE("majority plus: serial and parallel agree") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Profile p = random_profile(40, 60, seed);
    CHECK(write_newick(majority_plus_consensus(p, Execution::kSerial)) ==
          write_newick(majority_plus_consensus(p, Execution::kParallel)));
  }
}

TEST_CASE("majority plus rejects mismatched leaf sets") {
  Profile p = s_star();
  p.trees.push_back(parse_newick("((a,b),c);"));
  CHECK_THROWS_AS(majority_plus_consensus(p), LeafSetMismatch);
}
