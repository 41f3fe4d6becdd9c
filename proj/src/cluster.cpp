#include "phylocons/cluster.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace phylocons {

Cluster::Cluster(std::size_t universe_size, std::initializer_list<Label> labels)
    : Cluster(universe_size, std::span<const Label>(labels.begin(), labels.size())) {}

Cluster::Cluster(std::size_t universe_size, std::span<const Label> labels) : Cluster(universe_size) {
  for (Label l : labels) {
    if (l < 0 || static_cast<std::size_t>(l) >= n_) throw std::out_of_range("label outside cluster universe");
    insert(l);
  }
}

Cluster Cluster::full(std::size_t universe_size) {
  Cluster c(universe_size);
  for (auto& w : c.words_) w = ~std::uint64_t{0};
  if (const std::size_t tail = universe_size & 63; tail != 0 && !c.words_.empty()) {
    c.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return c;
}

std::size_t Cluster::size() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool Cluster::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool Cluster::is_trivial() const {
  const std::size_t s = size();
  return s == 1 || s == n_;
}

bool Cluster::subset_of(const Cluster& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool Cluster::intersects(const Cluster& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

Cluster& Cluster::operator|=(const Cluster& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Cluster& Cluster::operator&=(const Cluster& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::vector<Label> Cluster::labels() const {
  std::vector<Label> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<Label>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Cluster& a, const Cluster& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.words_.begin(), a.words_.end(), b.words_.begin(),
                                                b.words_.end());
}

bool clusters_compatible(const Cluster& a, const Cluster& b) {
  bool a_in_b = true;
  bool b_in_a = true;
  bool meet = false;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    const auto both = wa[i] & wb[i];
    meet = meet || both != 0;
    a_in_b = a_in_b && (wa[i] & ~wb[i]) == 0;
    b_in_a = b_in_a && (wb[i] & ~wa[i]) == 0;
  }
  return a_in_b || b_in_a || !meet;
}

}  // namespace phylocons
