#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "phylocons/tree.hpp"

namespace phylocons {

/// Parses one Newick expression terminated by ';'.
///
/// Accepted grammar: `tree := node ';'`, `node := leaf | '(' node (',' node)+ ')'`,
/// where any node may carry a name and a `:length` suffix. Branch lengths and
/// internal node names are dropped. Without a universe, one is created from the
/// leaf names in lexicographic order; with one, every leaf must belong to it.
///
/// Throws ParseError on malformed text or duplicate leaves, and
/// LeafSetMismatch on a label missing from a fixed universe.
Tree parse_newick(std::string_view text, UniversePtr universe = nullptr);

/// Canonical form: children ordered by the smallest leaf ordinal below them.
std::string write_newick(const Tree& tree);

/// Reads one tree per line, skipping blank lines and lines starting with '#'.
/// The first tree defines the universe. Errors carry the 1-based line number.
Profile read_profile(std::istream& in);

}  // namespace phylocons
