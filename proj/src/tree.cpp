#include "phylocons/tree.hpp"

#include <algorithm>
#include <stdexcept>

#include "phylocons/errors.hpp"

namespace phylocons {

LabelUniverse::LabelUniverse(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], static_cast<Label>(i)).second) {
      throw std::invalid_argument("duplicate label '" + labels_[i] + "'");
    }
  }
}

std::optional<Label> LabelUniverse::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

UniversePtr make_universe(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  return std::make_shared<const LabelUniverse>(std::move(labels));
}

Tree::Tree(UniversePtr universe) : universe_(std::move(universe)) {
  if (!universe_) throw std::invalid_argument("tree needs a label universe");
  leaf_of_.assign(universe_->size(), kNoNode);
}

NodeId Tree::new_node(NodeId parent, Label label) {
  if (parent == kNoNode) {
    if (root_ != kNoNode) throw std::logic_error("tree already has a root");
  } else {
    check_live(parent);
    if (is_leaf(parent)) throw std::logic_error("cannot add a child to a leaf");
  }
  const auto id = static_cast<NodeId>(nodes_.size());
  Node fresh;
  fresh.label = label;
  nodes_.push_back(fresh);
  ++live_;
  if (parent == kNoNode) {
    root_ = id;
  } else {
    append_child(parent, id);
  }
  return id;
}

NodeId Tree::add_node(NodeId parent) { return new_node(parent, kNoLabel); }

NodeId Tree::add_leaf(NodeId parent, Label label) {
  if (label < 0 || static_cast<std::size_t>(label) >= universe_->size()) {
    throw std::out_of_range("leaf label outside the universe");
  }
  if (leaf_of_[static_cast<std::size_t>(label)] != kNoNode) {
    throw std::invalid_argument("duplicate leaf label '" + universe_->name(label) + "'");
  }
  const NodeId id = new_node(parent, label);
  leaf_of_[static_cast<std::size_t>(label)] = id;
  ++leaves_;
  return id;
}

NodeId Tree::leaf(Label label) const {
  if (label < 0 || static_cast<std::size_t>(label) >= leaf_of_.size()) return kNoNode;
  return leaf_of_[static_cast<std::size_t>(label)];
}

bool Tree::contains(NodeId v) const {
  return v >= 0 && static_cast<std::size_t>(v) < nodes_.size() && node(v).alive;
}

void Tree::check_live(NodeId v) const {
  if (!contains(v)) throw std::out_of_range("node id does not refer to a live node");
}

void Tree::fill_values(int value) {
  for (auto& n : nodes_) n.value = value;
}

void Tree::append_child(NodeId parent, NodeId child) {
  Node& p = mutable_node(parent);
  Node& c = mutable_node(child);
  c.parent = parent;
  c.next = kNoNode;
  c.prev = p.last_child;
  if (p.last_child == kNoNode) {
    p.first_child = child;
  } else {
    mutable_node(p.last_child).next = child;
  }
  p.last_child = child;
  ++p.degree;
}

void Tree::unlink(NodeId child) {
  Node& c = mutable_node(child);
  Node& p = mutable_node(c.parent);
  if (c.prev == kNoNode) {
    p.first_child = c.next;
  } else {
    mutable_node(c.prev).next = c.next;
  }
  if (c.next == kNoNode) {
    p.last_child = c.prev;
  } else {
    mutable_node(c.next).prev = c.prev;
  }
  --p.degree;
  c.parent = c.prev = c.next = kNoNode;
}

std::vector<NodeId> Tree::preorder() const {
  std::vector<NodeId> order;
  if (root_ == kNoNode) return order;
  order.reserve(live_);
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    // push in reverse so the first child is visited first
    for (NodeId c = node(v).last_child; c != kNoNode; c = node(c).prev) stack.push_back(c);
  }
  return order;
}

std::vector<NodeId> Tree::postorder() const {
  std::vector<NodeId> order;
  if (root_ == kNoNode) return order;
  order.reserve(live_);
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (NodeId c = node(v).first_child; c != kNoNode; c = node(c).next) stack.push_back(c);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

void Tree::delete_node(NodeId v) {
  check_live(v);
  if (v == root_) throw std::invalid_argument("cannot delete the root");
  if (is_leaf(v)) throw std::invalid_argument("cannot delete a leaf");
  Node& u = mutable_node(v);
  const NodeId p = u.parent;
  // Splice v's children into p's list at v's position.
  NodeId c = u.first_child;
  while (c != kNoNode) {
    mutable_node(c).parent = p;
    c = node(c).next;
  }
  Node& pn = mutable_node(p);
  if (u.first_child != kNoNode) {
    mutable_node(u.first_child).prev = u.prev;
    mutable_node(u.last_child).next = u.next;
    if (u.prev == kNoNode) pn.first_child = u.first_child; else mutable_node(u.prev).next = u.first_child;
    if (u.next == kNoNode) pn.last_child = u.last_child; else mutable_node(u.next).prev = u.last_child;
  } else {
    if (u.prev == kNoNode) pn.first_child = u.next; else mutable_node(u.prev).next = u.next;
    if (u.next == kNoNode) pn.last_child = u.prev; else mutable_node(u.next).prev = u.prev;
  }
  pn.degree += u.degree - 1;
  u = Node{};
  u.alive = false;
  --live_;
}

NodeId Tree::insert_node(NodeId v, std::span<const NodeId> group) {
  check_live(v);
  if (is_leaf(v)) throw std::invalid_argument("insert target must be an internal node");
  if (group.size() < 2) throw std::invalid_argument("insert needs at least two children to group");
  if (group.size() >= child_count(v)) {
    throw std::invalid_argument("insert group must be a proper subset of the children");
  }
  std::vector<NodeId> sorted(group.begin(), group.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("insert group lists a child twice");
  }
  for (NodeId c : group) {
    if (!contains(c) || parent(c) != v) throw std::invalid_argument("insert group member is not a child");
  }
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(Node{});
  ++live_;
  // Keep the new node where the first grouped child used to be.
  const NodeId anchor = group.front();
  Node& a = mutable_node(anchor);
  Node& n = mutable_node(id);
  n.parent = v;
  n.prev = a.prev;
  n.next = anchor;
  Node& vn = mutable_node(v);
  if (a.prev == kNoNode) vn.first_child = id; else mutable_node(a.prev).next = id;
  a.prev = id;
  ++vn.degree;
  for (NodeId c : group) {
    unlink(c);
    append_child(id, c);
  }
  return id;
}

void Tree::validate(bool allow_unary) const {
  if (root_ == kNoNode) throw std::logic_error("tree has no root");
  if (parent(root_) != kNoNode) throw std::logic_error("root has a parent");
  std::size_t seen = 0;
  std::size_t leaves = 0;
  for (NodeId v : preorder()) {
    ++seen;
    if (seen > live_) throw std::logic_error("cycle detected");
    const Node& n = node(v);
    if (!n.alive) throw std::logic_error("dead node reachable");
    std::int32_t degree = 0;
    for (NodeId c : children(v)) {
      if (parent(c) != v) throw std::logic_error("child/parent links disagree");
      ++degree;
    }
    if (degree != n.degree) throw std::logic_error("child count out of date");
    if (n.label != kNoLabel) {
      if (degree != 0) throw std::logic_error("leaf has children");
      if (leaf(n.label) != v) throw std::logic_error("leaf index out of date");
      ++leaves;
    } else if (degree == 0) {
      throw std::logic_error("internal node without children");
    } else if (degree == 1 && !allow_unary) {
      throw std::logic_error("internal node with fewer than two children");
    }
  }
  if (seen != live_) throw std::logic_error("unreachable live nodes");
  if (leaves != leaves_) throw std::logic_error("leaf count out of date");
}

Tree Tree::compacted() const {
  Tree out(universe_);
  if (root_ == kNoNode) return out;
  std::vector<NodeId> remap(nodes_.size(), kNoNode);
  for (NodeId v : preorder()) {
    const NodeId p = v == root_ ? kNoNode : remap[static_cast<std::size_t>(parent(v))];
    const NodeId id = is_leaf(v) ? out.add_leaf(p, label(v)) : out.add_node(p);
    out.set_value(id, value(v));
    remap[static_cast<std::size_t>(v)] = id;
  }
  return out;
}

void Profile::validate() const {
  if (!universe) throw std::invalid_argument("profile has no universe");
  if (trees.empty()) throw std::invalid_argument("profile has no trees");
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const Tree& t = trees[i];
    if (t.universe_ptr() != universe) {
      throw LeafSetMismatch("tree " + std::to_string(i + 1) + " uses a different label universe", i + 1);
    }
    if (t.leaf_count() != universe->size()) {
      throw LeafSetMismatch("tree " + std::to_string(i + 1) + " has " + std::to_string(t.leaf_count()) +
                                " leaves, expected " + std::to_string(universe->size()),
                            i + 1);
    }
  }
}

}  // namespace phylocons
