#pragma once

// Data-parallel inner loops shared by every table scan in the library.
//
// Element sets are dense bitsets stored as 64-bit words; table rows are
// arrays of 16-bit element indices. Each kernel has a portable scalar
// reference and, on x86-64, an AVX2 variant. The variant is chosen once at
// startup from CPUID and can be pinned with IDEALFORGE_SIMD=scalar|avx2.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace idealforge::kernels {

using Word = std::uint64_t;
using Index = std::uint16_t;

struct Dispatch {
  std::string_view name;

  // out = a & b, a | b, a & ~b over `words` words. out may alias a or b.
  void (*bit_and)(const Word* a, const Word* b, Word* out, std::size_t words);
  void (*bit_or)(const Word* a, const Word* b, Word* out, std::size_t words);
  void (*bit_andnot)(const Word* a, const Word* b, Word* out, std::size_t words);

  bool (*is_subset)(const Word* a, const Word* b, std::size_t words);
  bool (*equal)(const Word* a, const Word* b, std::size_t words);
  bool (*disjoint)(const Word* a, const Word* b, std::size_t words);
  std::size_t (*popcount)(const Word* a, std::size_t words);

  // Bit b of out is set iff bit row[b] of `set` is set, for b < n.
  // `out` must hold ceil(n / 64) words; trailing bits are cleared.
  void (*row_preimage)(const Index* row, std::size_t n, const Word* set, Word* out);

  // Bit b of out is set iff row[b] == value, for b < n.
  void (*row_equals)(const Index* row, std::size_t n, Index value, Word* out);
};

const Dispatch& scalar() noexcept;

// nullptr when the build or the running CPU has no AVX2.
const Dispatch* avx2() noexcept;

const Dispatch& active() noexcept;

// Pins the active variant by name ("scalar" or "avx2"). Returns false when
// the requested variant is unavailable; the active variant is unchanged.
bool select(std::string_view name) noexcept;

}  // namespace idealforge::kernels
