#include "idealforge/cache.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>
#include <unistd.h>

#include "idealforge/error.hpp"

namespace idealforge {

namespace {

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

bool same_lattice(std::vector<ElementSet> a, std::vector<ElementSet> b) {
  auto less = [](const ElementSet& x, const ElementSet& y) { return canonical_order(x, y) < 0; };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

}  // namespace

LatticeCache::LatticeCache(std::filesystem::path dir, double spot_check_rate, std::uint64_t seed)
    : dir_(std::move(dir)), rate_(std::clamp(spot_check_rate, 0.0, 1.0)), rng_(seed) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(ErrorKind::io_error, "cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::optional<std::filesystem::path> LatticeCache::directory(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv("IDEALFORGE_CACHE"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

double LatticeCache::default_spot_check_rate() {
  const char* ci = std::getenv("CI");
  return ci && *ci ? 1.0 : 0.1;
}

std::filesystem::path LatticeCache::entry_path(const Ring& ring) const {
  return dir_ / ("lattice-" + hex(ring.content_hash()) + "-" + std::to_string(ring.order()) + ".json");
}

std::optional<std::vector<ElementSet>> LatticeCache::read(const Ring& ring) const {
  std::ifstream in(entry_path(ring));
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("order").get<std::size_t>() != ring.order() || j.at("hash").get<std::string>() != hex(ring.content_hash())) {
      return std::nullopt;
    }
    std::vector<ElementSet> ideals;
    for (const auto& members : j.at("ideals")) {
      ElementSet s(ring.order());
      for (const auto& e : members) {
        const auto x = e.get<std::size_t>();
        if (x >= ring.order()) return std::nullopt;
        s.set(x);
      }
      ideals.push_back(std::move(s));
    }
    // Cheap sanity: every entry closed under the ideal axioms.
    for (const ElementSet& s : ideals) {
      if (!check_ideal_axioms(ring, s).empty()) return std::nullopt;
    }
    if (ideals.size() < 2) return std::nullopt;
    return ideals;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void LatticeCache::write(const Ring& ring, const std::vector<ElementSet>& ideals) {
  nlohmann::json j;
  j["order"] = ring.order();
  j["hash"] = hex(ring.content_hash());
  j["ideals"] = nlohmann::json::array();
  for (const ElementSet& s : ideals) j["ideals"].push_back(s.members());
  const std::filesystem::path target = entry_path(ring);
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(stats_.stores);
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;  // cache is best effort
    out << j.dump();
    if (!out) {
      std::filesystem::remove(tmp);
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    return;
  }
  ++stats_.stores;
}

bool LatticeCache::preload(const Ring& ring) {
  auto cached = read(ring);
  if (!cached) {
    ++stats_.misses;
    return false;
  }
  ++stats_.hits;
  if (std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < rate_) {
    ++stats_.spot_checks;
    std::vector<ElementSet> fresh = enumerate_ideal_sets(ring);
    if (!same_lattice(*cached, fresh)) {
      ++stats_.mismatches;
      seed_lattice(ring, fresh);
      write(ring, fresh);
      return false;
    }
  }
  return seed_lattice(ring, std::move(*cached));
}

void LatticeCache::store(const Ring& ring) {
  if (std::filesystem::exists(entry_path(ring))) return;
  write(ring, lattice(ring).ideals);
}

}  // namespace idealforge
