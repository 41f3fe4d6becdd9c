#include "phylocons/newick.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "phylocons/errors.hpp"

namespace phylocons {
namespace {

struct RawNode {
  std::size_t parent;  // index into the raw node list, npos for the root
  std::string name;    // empty for internal nodes
  std::size_t children = 0;
  bool leaf = false;
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

bool is_name_char(char c) {
  switch (c) {
    case '(': case ')': case ',': case ':': case ';': case '[': case ']': case '\'':
      return false;
    default:
      return std::isspace(static_cast<unsigned char>(c)) == 0;
  }
}

bool is_length_char(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '.' || c == '-' || c == '+' || c == 'e' ||
         c == 'E';
}

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }
  std::size_t column() const { return pos_ + 1; }

  std::string take_name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // Optional ":length"; the value itself is discarded.
  void skip_length() {
    skip_space();
    if (peek() != ':') return;
    advance();
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_length_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a branch length after ':'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(column()), 0, column());
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<RawNode> scan(std::string_view text) {
  Scanner in(text);
  std::vector<RawNode> nodes;
  std::vector<std::size_t> open;  // indices of unclosed internal nodes

  auto parent_of_next = [&] { return open.empty() ? kNone : open.back(); };
  auto add = [&](RawNode node) {
    if (node.parent == kNone && !nodes.empty()) in.fail("unexpected second top-level node");
    if (node.parent != kNone) ++nodes[node.parent].children;
    nodes.push_back(std::move(node));
  };

  in.skip_space();
  if (in.done()) in.fail("empty input");
  bool expect_node = true;
  while (true) {
    in.skip_space();
    if (expect_node) {
      if (in.peek() == '(') {
        add(RawNode{parent_of_next(), {}, 0, false});
        open.push_back(nodes.size() - 1);
        in.advance();
        continue;
      }
      std::string name = in.take_name();
      if (name.empty()) in.fail("expected a leaf label or '('");
      add(RawNode{parent_of_next(), std::move(name), 0, true});
      in.skip_length();
      expect_node = false;
      continue;
    }
    const char c = in.peek();
    if (c == ',') {
      if (open.empty()) in.fail("',' outside of parentheses");
      in.advance();
      expect_node = true;
    } else if (c == ')') {
      if (open.empty()) in.fail("unbalanced ')'");
      if (nodes[open.back()].children < 2) in.fail("internal node with fewer than two children");
      open.pop_back();
      in.advance();
      in.skip_space();
      in.take_name();  // internal labels are dropped
      in.skip_length();
    } else if (c == ';') {
      if (!open.empty()) in.fail("missing ')' before ';'");
      in.advance();
      in.skip_space();
      if (!in.done()) in.fail("trailing characters after ';'");
      return nodes;
    } else if (in.done()) {
      in.fail("missing ';'");
    } else {
      in.fail(std::string("unexpected character '") + c + "'");
    }
  }
}

}  // namespace

Tree parse_newick(std::string_view text, UniversePtr universe) {
  const std::vector<RawNode> raw = scan(text);

  std::vector<std::string> names;
  for (const auto& node : raw) {
    if (node.leaf) names.push_back(node.name);
  }
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw ParseError("duplicate leaf label '" + *dup + "'", 0, 0);
  }
  if (!universe) universe = make_universe(std::move(sorted));

  Tree tree(universe);
  std::vector<NodeId> ids(raw.size(), kNoNode);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const NodeId parent = raw[i].parent == kNone ? kNoNode : ids[raw[i].parent];
    if (raw[i].leaf) {
      const auto label = universe->find(raw[i].name);
      if (!label) throw LeafSetMismatch("unknown leaf label '" + raw[i].name + "'");
      ids[i] = tree.add_leaf(parent, *label);
    } else {
      ids[i] = tree.add_node(parent);
    }
  }
  return tree;
}

std::string write_newick(const Tree& tree) {
  if (tree.root() == kNoNode) return ";";
  const auto bound = tree.id_bound();
  std::vector<Label> min_label(bound, kNoLabel);
  for (NodeId v : tree.postorder()) {
    if (tree.is_leaf(v)) {
      min_label[static_cast<std::size_t>(v)] = tree.label(v);
      continue;
    }
    Label m = kNoLabel;
    for (NodeId c : tree.children(v)) {
      const Label cl = min_label[static_cast<std::size_t>(c)];
      if (m == kNoLabel || cl < m) m = cl;
    }
    min_label[static_cast<std::size_t>(v)] = m;
  }
  auto key = [&](NodeId v) { return min_label[static_cast<std::size_t>(v)]; };

  std::string out;
  // (node, index of next child to emit) with children pre-sorted per frame.
  struct Frame {
    NodeId node;
    std::vector<NodeId> kids;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  auto open_frame = [&](NodeId v) {
    if (tree.is_leaf(v)) {
      out += tree.universe().name(tree.label(v));
      return;
    }
    Frame f{v, {}, 0};
    for (NodeId c : tree.children(v)) f.kids.push_back(c);
    std::sort(f.kids.begin(), f.kids.end(), [&](NodeId a, NodeId b) { return key(a) < key(b); });
    out += '(';
    stack.push_back(std::move(f));
  };
  open_frame(tree.root());
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == top.kids.size()) {
      out += ')';
      stack.pop_back();
      continue;
    }
    if (top.next > 0) out += ',';
    const NodeId child = top.kids[top.next++];
    open_frame(child);
  }
  out += ';';
  return out;
}

Profile read_profile(std::istream& in) {
  Profile profile;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      Tree tree = parse_newick(line, profile.universe);
      if (!profile.universe) {
        profile.universe = tree.universe_ptr();
      } else if (tree.leaf_count() != profile.universe->size()) {
        throw LeafSetMismatch("tree has " + std::to_string(tree.leaf_count()) + " leaves, expected " +
                              std::to_string(profile.universe->size()));
      }
      profile.trees.push_back(std::move(tree));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no, e.column());
    } catch (const LeafSetMismatch& e) {
      throw LeafSetMismatch("line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
  return profile;
}

}  // namespace phylocons
