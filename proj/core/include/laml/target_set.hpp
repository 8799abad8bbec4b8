#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace laml {

// Bit set over a fixed universe of target ids 0..universe-1. Target sets are
// unioned and subset-tested on every learning exchange, so they are packed
// into 64-bit words.
class TargetSet {
 public:
  TargetSet() = default;
  explicit TargetSet(int universe)
      : universe_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}

  static TargetSet of(int universe, std::initializer_list<int> ids) {
    TargetSet s(universe);
    for (int id : ids) s.set(id);
    return s;
  }

  int universe() const { return universe_; }

  void set(int i) {
    assert(i >= 0 && i < universe_);
    words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }

  bool test(int i) const {
    assert(i >= 0 && i < universe_);
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1;
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  TargetSet& operator|=(const TargetSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }

  bool is_subset_of(const TargetSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~other.words_[k]) return false;
    }
    return true;
  }

  int count() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }

  bool none() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  std::vector<int> to_ids() const {
    std::vector<int> ids;
    ids.reserve(static_cast<std::size_t>(count()));
    for (int i = 0; i < universe_; ++i) {
      if (test(i)) ids.push_back(i);
    }
    return ids;
  }

  friend bool operator==(const TargetSet&, const TargetSet&) = default;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace laml
