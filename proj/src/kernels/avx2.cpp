// Compiled with -mavx2 -mpopcnt; only reached after a CPUID check.

#include <immintrin.h>

#include <bit>

#include "idealforge/kernels.hpp"

namespace idealforge::kernels::detail {
namespace {

inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(Word* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

void and_avx2(const Word* a, const Word* b, Word* out, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) store(out + i, _mm256_and_si256(load(a + i), load(b + i)));
  for (; i < words; ++i) out[i] = a[i] & b[i];
}

void or_avx2(const Word* a, const Word* b, Word* out, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) store(out + i, _mm256_or_si256(load(a + i), load(b + i)));
  for (; i < words; ++i) out[i] = a[i] | b[i];
}

void andnot_avx2(const Word* a, const Word* b, Word* out, std::size_t words) {
  std::size_t i = 0;
  // _mm256_andnot_si256(x, y) computes ~x & y.
  for (; i + 4 <= words; i += 4) store(out + i, _mm256_andnot_si256(load(b + i), load(a + i)));
  for (; i < words; ++i) out[i] = a[i] & ~b[i];
}

bool subset_avx2(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    if (!_mm256_testc_si256(load(b + i), load(a + i))) return false;
  }
  for (; i < words; ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

bool equal_avx2(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i diff = _mm256_xor_si256(load(a + i), load(b + i));
    if (!_mm256_testz_si256(diff, diff)) return false;
  }
  for (; i < words; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool disjoint_avx2(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    if (!_mm256_testz_si256(load(a + i), load(b + i))) return false;
  }
  for (; i < words; ++i) {
    if ((a[i] & b[i]) != 0) return false;
  }
  return true;
}

std::size_t popcount_avx2(const Word* a, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i]);
  return total;
}

// Eight lookups per step: widen the indices to 32 bits, gather the 32-bit
// half-word holding each bit, shift the bit into the sign position and
// collect the signs.
void preimage_avx2(const Index* row, std::size_t n, const Word* set, Word* out) {
  const std::size_t words = (n + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;

  const int* base = reinterpret_cast<const int*>(set);
  const __m256i low5 = _mm256_set1_epi32(31);
  std::size_t b = 0;
  for (; b + 8 <= n; b += 8) {
    const __m128i raw = _mm_loadu_si128(reinterpret_cast<const __m128i*>(row + b));
    const __m256i idx = _mm256_cvtepu16_epi32(raw);
    const __m256i gathered = _mm256_i32gather_epi32(base, _mm256_srli_epi32(idx, 5), 4);
    const __m256i shifted = _mm256_srlv_epi32(gathered, _mm256_and_si256(idx, low5));
    const __m256i sign = _mm256_slli_epi32(shifted, 31);
    const auto mask = static_cast<Word>(_mm256_movemask_ps(_mm256_castsi256_ps(sign)));
    out[b >> 6] |= mask << (b & 63);
  }
  for (; b < n; ++b) {
    const Index target = row[b];
    const Word bit = (set[target >> 6] >> (target & 63)) & 1U;
    out[b >> 6] |= bit << (b & 63);
  }
}

void equals_avx2(const Index* row, std::size_t n, Index value, Word* out) {
  const std::size_t words = (n + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;

  const __m256i needle = _mm256_set1_epi16(static_cast<short>(value));
  std::size_t b = 0;
  for (; b + 16 <= n; b += 16) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + b));
    const __m256i eq = _mm256_cmpeq_epi16(v, needle);
    const __m128i packed =
        _mm_packs_epi16(_mm256_castsi256_si128(eq), _mm256_extracti128_si256(eq, 1));
    const auto mask = static_cast<Word>(static_cast<unsigned>(_mm_movemask_epi8(packed)));
    out[b >> 6] |= mask << (b & 63);
  }
  for (; b < n; ++b) {
    if (row[b] == value) out[b >> 6] |= Word{1} << (b & 63);
  }
}

constexpr Dispatch kAvx2{
    "avx2",     and_avx2,      or_avx2,       andnot_avx2,   subset_avx2,
    equal_avx2, disjoint_avx2, popcount_avx2, preimage_avx2, equals_avx2,
};

}  // namespace

const Dispatch& avx2_table() noexcept { return kAvx2; }

}  // namespace idealforge::kernels::detail
