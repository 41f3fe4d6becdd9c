#pragma once

#include "phylocons/cluster.hpp"
#include "phylocons/cluster_table.hpp"
#include "phylocons/errors.hpp"
#include "phylocons/execution.hpp"
#include "phylocons/flat_tree.hpp"
#include "phylocons/freq_diff.hpp"
#include "phylocons/generate.hpp"
#include "phylocons/indexes.hpp"
#include "phylocons/majority_plus.hpp"
#include "phylocons/merge.hpp"
#include "phylocons/newick.hpp"
#include "phylocons/oracle.hpp"
#include "phylocons/restriction.hpp"
#include "phylocons/tree.hpp"
#include "phylocons/tree_ops.hpp"
