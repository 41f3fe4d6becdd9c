#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "phylocons/tree.hpp"

namespace phylocons {

/// Set of leaf ordinals as a fixed-width bit vector. All set algebra is
/// word-parallel.
class Cluster {
 public:
  Cluster() = default;
  explicit Cluster(std::size_t universe_size)
      : n_(universe_size), words_((universe_size + 63) / 64, 0) {}
  Cluster(std::size_t universe_size, std::initializer_list<Label> labels);
  Cluster(std::size_t universe_size, std::span<const Label> labels);

  static Cluster full(std::size_t universe_size);

  std::size_t universe_size() const { return n_; }
  void insert(Label label) { words_[word(label)] |= bit(label); }
  void erase(Label label) { words_[word(label)] &= ~bit(label); }
  bool contains(Label label) const { return (words_[word(label)] & bit(label)) != 0; }
  std::size_t size() const;
  bool empty() const;
  /// Singleton or the whole universe.
  bool is_trivial() const;

  bool subset_of(const Cluster& other) const;
  bool intersects(const Cluster& other) const;
  bool disjoint(const Cluster& other) const { return !intersects(other); }

  Cluster& operator|=(const Cluster& other);
  Cluster& operator&=(const Cluster& other);

  std::vector<Label> labels() const;
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const Cluster&, const Cluster&) = default;
  friend std::strong_ordering operator<=>(const Cluster& a, const Cluster& b);

 private:
  static std::size_t word(Label label) { return static_cast<std::size_t>(label) >> 6; }
  static std::uint64_t bit(Label label) { return std::uint64_t{1} << (static_cast<unsigned>(label) & 63U); }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Nested either way, or disjoint.
bool clusters_compatible(const Cluster& a, const Cluster& b);

}  // namespace phylocons
