#include "idealforge/element_set.hpp"

#include <bit>

namespace idealforge {

ElementSet::ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

ElementSet::ElementSet(std::size_t universe, std::initializer_list<Elem> members)
    : ElementSet(universe) {
  for (Elem m : members) set(m);
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (auto& w : s.words_) w = ~Word{0};
  s.trim();
  return s;
}

ElementSet ElementSet::from(std::size_t universe, std::span<const Elem> members) {
  ElementSet s(universe);
  for (Elem m : members) s.set(m);
  return s;
}

void ElementSet::trim() noexcept {
  const std::size_t tail = universe_ & 63;
  if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
}

std::size_t ElementSet::count() const noexcept {
  return kernels::active().popcount(words_.data(), words_.size());
}

bool ElementSet::empty() const noexcept {
  for (Word w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool ElementSet::is_full() const noexcept { return count() == universe_; }

std::optional<Elem> ElementSet::first() const noexcept { return next(0); }

std::optional<Elem> ElementSet::next(std::size_t from) const noexcept {
  if (from >= universe_) return std::nullopt;
  std::size_t w = from >> 6;
  Word bits = words_[w] & (~Word{0} << (from & 63));
  while (true) {
    if (bits != 0) return static_cast<Elem>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    if (++w == words_.size()) return std::nullopt;
    bits = words_[w];
  }
}

bool ElementSet::subset_of(const ElementSet& other) const noexcept {
  return kernels::active().is_subset(words_.data(), other.words_.data(), words_.size());
}

bool ElementSet::disjoint_from(const ElementSet& other) const noexcept {
  return kernels::active().disjoint(words_.data(), other.words_.data(), words_.size());
}

ElementSet& ElementSet::operator&=(const ElementSet& other) noexcept {
  kernels::active().bit_and(words_.data(), other.words_.data(), words_.data(), words_.size());
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) noexcept {
  kernels::active().bit_or(words_.data(), other.words_.data(), words_.data(), words_.size());
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) noexcept {
  kernels::active().bit_andnot(words_.data(), other.words_.data(), words_.data(), words_.size());
  return *this;
}

ElementSet ElementSet::complement() const {
  ElementSet out = full(universe_);
  out -= *this;
  return out;
}

bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
  return a.universe_ == b.universe_ &&
         kernels::active().equal(a.words_.data(), b.words_.data(), a.words_.size());
}

std::strong_ordering canonical_order(const ElementSet& a, const ElementSet& b) noexcept {
  if (auto c = a.count() <=> b.count(); c != 0) return c;
  // Sets of equal size: the first differing element decides; the set that
  // holds the smaller element sorts first.
  for (std::size_t w = 0; w < a.words_.size() && w < b.words_.size(); ++w) {
    const ElementSet::Word diff = a.words_[w] ^ b.words_[w];
    if (diff == 0) continue;
    const ElementSet::Word lowest = diff & (~diff + 1);
    return (a.words_[w] & lowest) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.universe_ <=> b.universe_;
}

std::vector<Elem> ElementSet::members() const {
  std::vector<Elem> out;
  out.reserve(count());
  for_each([&](Elem e) { out.push_back(e); });
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ universe_;
  for (Word w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace idealforge
