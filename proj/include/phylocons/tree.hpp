#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace phylocons {

using Label = std::int32_t;
using NodeId = std::int32_t;

inline constexpr NodeId kNoNode = -1;
inline constexpr Label kNoLabel = -1;

/// Interned leaf labels. Ordinals are dense in [0, size()) and never change.
class LabelUniverse {
 public:
  LabelUniverse() = default;
  /// Keeps the given order; throws std::invalid_argument on duplicates.
  explicit LabelUniverse(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& name(Label label) const { return labels_.at(static_cast<std::size_t>(label)); }
  std::optional<Label> find(std::string_view name) const;
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, Label, std::less<>> index_;
};

using UniversePtr = std::shared_ptr<const LabelUniverse>;

/// Builds a universe whose ordinals follow the lexicographic order of the names.
UniversePtr make_universe(std::vector<std::string> labels);

/// Rooted, unordered, leaf-labelled tree stored in a node arena.
///
/// Children are kept in a doubly linked sibling list so that delete and insert
/// cost time proportional to the number of children moved. Deleted nodes leave
/// holes in the arena; `compacted()` removes them. Every node carries an
/// integer `value` that the consensus algorithms use as a counter or weight.
class Tree {
 public:
  class ChildIterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = NodeId;
    using difference_type = std::ptrdiff_t;
    using pointer = const NodeId*;
    using reference = NodeId;

    ChildIterator() = default;
    ChildIterator(const Tree* tree, NodeId node) : tree_(tree), node_(node) {}
    NodeId operator*() const { return node_; }
    ChildIterator& operator++() {
      node_ = tree_->next_sibling(node_);
      return *this;
    }
    ChildIterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const ChildIterator& other) const { return node_ == other.node_; }

   private:
    const Tree* tree_ = nullptr;
    NodeId node_ = kNoNode;
  };

  struct ChildRange {
    ChildIterator first;
    ChildIterator last;
    ChildIterator begin() const { return first; }
    ChildIterator end() const { return last; }
  };

  explicit Tree(UniversePtr universe);

  const UniversePtr& universe_ptr() const { return universe_; }
  const LabelUniverse& universe() const { return *universe_; }

  /// Adds an internal node below `parent`, or the root when `parent` is kNoNode.
  NodeId add_node(NodeId parent);
  NodeId add_leaf(NodeId parent, Label label);

  NodeId root() const { return root_; }
  NodeId parent(NodeId v) const { return node(v).parent; }
  NodeId first_child(NodeId v) const { return node(v).first_child; }
  NodeId next_sibling(NodeId v) const { return node(v).next; }
  ChildRange children(NodeId v) const {
    return {ChildIterator(this, node(v).first_child), ChildIterator(this, kNoNode)};
  }
  std::size_t child_count(NodeId v) const { return static_cast<std::size_t>(node(v).degree); }
  bool is_leaf(NodeId v) const { return node(v).label != kNoLabel; }
  Label label(NodeId v) const { return node(v).label; }
  /// Leaf carrying `label`, or kNoNode.
  NodeId leaf(Label label) const;
  bool contains(NodeId v) const;

  int value(NodeId v) const { return node(v).value; }
  void set_value(NodeId v, int value) { mutable_node(v).value = value; }
  void fill_values(int value);

  std::size_t node_count() const { return live_; }
  std::size_t leaf_count() const { return leaves_; }
  /// One past the largest node id ever handed out.
  std::size_t id_bound() const { return nodes_.size(); }

  std::vector<NodeId> preorder() const;
  std::vector<NodeId> postorder() const;

  /// Moves the children of non-root internal node `v` to v's parent and
  /// removes `v`.
  void delete_node(NodeId v);
  /// Creates a child of internal node `v` that adopts `group`, a proper subset
  /// of v's children with at least two members.
  NodeId insert_node(NodeId v, std::span<const NodeId> group);

  /// Throws std::logic_error when the structure is malformed. Unary internal
  /// nodes are rejected unless `allow_unary` is set.
  void validate(bool allow_unary = false) const;

  /// Copy with nodes renumbered in preorder and no arena holes.
  Tree compacted() const;

 private:
  struct Node {
    NodeId parent = kNoNode;
    NodeId first_child = kNoNode;
    NodeId last_child = kNoNode;
    NodeId next = kNoNode;
    NodeId prev = kNoNode;
    Label label = kNoLabel;
    int value = 0;
    std::int32_t degree = 0;
    bool alive = true;
  };

  const Node& node(NodeId v) const { return nodes_[static_cast<std::size_t>(v)]; }
  Node& mutable_node(NodeId v) { return nodes_[static_cast<std::size_t>(v)]; }
  NodeId new_node(NodeId parent, Label label);
  void append_child(NodeId parent, NodeId child);
  void unlink(NodeId child);
  void check_live(NodeId v) const;

  UniversePtr universe_;
  std::vector<Node> nodes_;
  std::vector<NodeId> leaf_of_;
  NodeId root_ = kNoNode;
  std::size_t live_ = 0;
  std::size_t leaves_ = 0;
};

/// k trees over one shared label universe.
struct Profile {
  UniversePtr universe;
  std::vector<Tree> trees;

  std::size_t k() const { return trees.size(); }
  std::size_t n() const { return universe ? universe->size() : 0; }

  /// Throws std::invalid_argument when empty and LeafSetMismatch (with the
  /// 1-based tree index as line) when a tree's leaves differ from the universe.
  void validate() const;
};

}  // namespace phylocons
