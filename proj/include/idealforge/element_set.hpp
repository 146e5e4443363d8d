#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "idealforge/kernels.hpp"

namespace idealforge {

// Index of an element inside a specific ring (or module) of order n.
using Elem = std::uint16_t;

// Dense bitset over [0, n). All whole-set operations go through the active
// kernel table.
class ElementSet {
 public:
  using Word = kernels::Word;

  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  ElementSet(std::size_t universe, std::initializer_list<Elem> members);

  static ElementSet full(std::size_t universe);
  static ElementSet from(std::size_t universe, std::span<const Elem> members);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  const Word* data() const noexcept { return words_.data(); }
  Word* data() noexcept { return words_.data(); }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= Word{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(Word{1} << (i & 63)); }

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept;
  std::optional<Elem> first() const noexcept;
  // Smallest member >= from.
  std::optional<Elem> next(std::size_t from) const noexcept;

  bool subset_of(const ElementSet& other) const noexcept;
  bool disjoint_from(const ElementSet& other) const noexcept;

  ElementSet& operator&=(const ElementSet& other) noexcept;
  ElementSet& operator|=(const ElementSet& other) noexcept;
  ElementSet& operator-=(const ElementSet& other) noexcept;
  ElementSet complement() const;

  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept;
  // Ordering used for deterministic listings: by size, then by the sorted
  // member sequence.
  friend std::strong_ordering canonical_order(const ElementSet& a, const ElementSet& b) noexcept;

  std::vector<Elem> members() const;
  std::size_t hash() const noexcept;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        f(static_cast<Elem>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

 private:
  void trim() noexcept;

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace idealforge
