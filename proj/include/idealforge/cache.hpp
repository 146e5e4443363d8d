#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>

#include "idealforge/ideal.hpp"

namespace idealforge {

// On-disk ideal lattices keyed by the ring's content hash. Readers never
// see partial files: writers go through a temp file and rename.
class LatticeCache {
 public:
  struct Stats {
    std::size_t hits = 0;
    std::size_t misses = 0;
    std::size_t stores = 0;
    std::size_t spot_checks = 0;
    std::size_t mismatches = 0;
  };

  // spot_check_rate in [0, 1]: share of hits re-derived from scratch.
  explicit LatticeCache(std::filesystem::path dir, double spot_check_rate = 0.1, std::uint64_t seed = 1);

  // --cache flag, else IDEALFORGE_CACHE, else none.
  static std::optional<std::filesystem::path> directory(const std::optional<std::string>& flag);
  // 1.0 when CI is set in the environment.
  static double default_spot_check_rate();

  // Installs the cached lattice on `ring` when there is a valid entry.
  bool preload(const Ring& ring);
  // Writes the ring's lattice unless an entry already exists.
  void store(const Ring& ring);

  std::filesystem::path entry_path(const Ring& ring) const;
  const Stats& stats() const noexcept { return stats_; }

 private:
  std::optional<std::vector<ElementSet>> read(const Ring& ring) const;
  void write(const Ring& ring, const std::vector<ElementSet>& ideals);

  std::filesystem::path dir_;
  double rate_;
  std::mt19937_64 rng_;
  Stats stats_;
};

}  // namespace idealforge
