#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pte {

/// Subset of a game's strategy profiles, stored as a bit vector over the
/// lexicographic profile index.
class SurvivorSet {
 public:
  SurvivorSet() = default;

  static SurvivorSet none(std::size_t universe) {
    SurvivorSet s;
    s.universe_ = universe;
    s.words_.assign((universe + 63) / 64, 0);
    return s;
  }

  static SurvivorSet all(std::size_t universe) {
    SurvivorSet s = none(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  static SurvivorSet of(std::size_t universe, const std::vector<std::size_t>& indices) {
    SurvivorSet s = none(universe);
    for (const std::size_t i : indices) s.insert(i);
    return s;
  }

  std::size_t universe_size() const { return universe_; }

  bool contains(std::size_t index) const {
    return (words_[index / 64] >> (index % 64)) & 1u;
  }
  void insert(std::size_t index) { words_[index / 64] |= std::uint64_t{1} << (index % 64); }
  void erase(std::size_t index) { words_[index / 64] &= ~(std::uint64_t{1} << (index % 64)); }

  std::size_t count() const {
    std::size_t total = 0;
    for (const std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const {
    for (const std::uint64_t w : words_)
      if (w != 0) return false;
    return true;
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t i = 0; i < universe_; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const SurvivorSet& a, const SurvivorSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  friend bool operator!=(const SurvivorSet& a, const SurvivorSet& b) { return !(a == b); }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace pte
