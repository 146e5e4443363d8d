#include <bit>

#include "idealforge/kernels.hpp"

namespace idealforge::kernels {
namespace {

void and_scalar(const Word* a, const Word* b, Word* out, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) out[i] = a[i] & b[i];
}

void or_scalar(const Word* a, const Word* b, Word* out, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) out[i] = a[i] | b[i];
}

void andnot_scalar(const Word* a, const Word* b, Word* out, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) out[i] = a[i] & ~b[i];
}

bool subset_scalar(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

bool equal_scalar(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool disjoint_scalar(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if ((a[i] & b[i]) != 0) return false;
  }
  return true;
}

std::size_t popcount_scalar(const Word* a, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i]);
  return total;
}

void preimage_scalar(const Index* row, std::size_t n, const Word* set, Word* out) {
  const std::size_t words = (n + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  for (std::size_t b = 0; b < n; ++b) {
    const Index target = row[b];
    const Word bit = (set[target >> 6] >> (target & 63)) & 1U;
    out[b >> 6] |= bit << (b & 63);
  }
}

void equals_scalar(const Index* row, std::size_t n, Index value, Word* out) {
  const std::size_t words = (n + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  for (std::size_t b = 0; b < n; ++b) {
    if (row[b] == value) out[b >> 6] |= Word{1} << (b & 63);
  }
}

constexpr Dispatch kScalar{
    "scalar",      and_scalar,     or_scalar,      andnot_scalar,   subset_scalar,
    equal_scalar,  disjoint_scalar, popcount_scalar, preimage_scalar, equals_scalar,
};

}  // namespace

const Dispatch& scalar() noexcept { return kScalar; }

}  // namespace idealforge::kernels
