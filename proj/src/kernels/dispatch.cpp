#include <atomic>
#include <cstdlib>
#include <string_view>

#include "idealforge/kernels.hpp"

namespace idealforge::kernels {

#if IDEALFORGE_HAVE_AVX2
namespace detail {
const Dispatch& avx2_table() noexcept;
}
#endif

const Dispatch* avx2() noexcept {
#if IDEALFORGE_HAVE_AVX2
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  }();
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const Dispatch* initial() noexcept {
  if (const char* env = std::getenv("IDEALFORGE_SIMD")) {
    if (std::string_view(env) == "scalar") return &scalar();
  }
  if (const Dispatch* wide = avx2()) return wide;
  return &scalar();
}

std::atomic<const Dispatch*>& current() noexcept {
  static std::atomic<const Dispatch*> table{initial()};
  return table;
}

}  // namespace

const Dispatch& active() noexcept { return *current().load(std::memory_order_acquire); }

bool select(std::string_view name) noexcept {
  const Dispatch* pick = nullptr;
  if (name == "scalar") {
    pick = &scalar();
  } else if (name == "avx2") {
    pick = avx2();
  }
  if (pick == nullptr) return false;
  current().store(pick, std::memory_order_release);
  return true;
}

}  // namespace idealforge::kernels
