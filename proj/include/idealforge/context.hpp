#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "idealforge/classifier.hpp"
#include "idealforge/constructors.hpp"

namespace idealforge {

// A ring in a corpus together with the construction it came from, when the
// theorems about that construction need it.
struct Subject {
  std::string recipe;
  RingPtr ring;
  std::optional<ProductRing> product;
  std::optional<Idealization> idealization;
  std::optional<Amalgamation> amalgamation;
};

// Lazily filled per-subject caches over lattice indices. One context per
// worker; not thread-safe.
class RingContext {
 public:
  explicit RingContext(const Subject& subject);

  const Subject& subject() const noexcept { return subject_; }
  const RingPtr& ring_ptr() const noexcept { return subject_.ring; }
  const Ring& ring() const noexcept { return *subject_.ring; }
  const Lattice& lat() const noexcept { return lat_; }
  std::size_t size() const noexcept { return lat_.size(); }
  std::size_t whole() const noexcept { return lat_.size() - 1; }
  std::size_t zero_index() const noexcept { return 0; }

  Ideal ideal(std::size_t i) const { return Ideal::trusted(subject_.ring, lat_.ideals[i]); }
  const ElementSet& set(std::size_t i) const { return lat_.ideals[i]; }
  bool proper(std::size_t i) const { return i != whole(); }
  std::size_t index_of(const ElementSet& members) const;

  // Predicate truth by lattice index; false for the whole ring.
  bool weakly_j(std::size_t i);
  bool j(std::size_t i);
  bool quasi_j(std::size_t i);
  bool weakly_prime(std::size_t i);
  bool prime(std::size_t i);
  bool n_ideal(std::size_t i);
  bool superfluous(std::size_t i);
  bool s_presimp(std::size_t i);

  bool in_jacobson(std::size_t i) const { return lat_.ideals[i].subset_of(lat_.jacobson); }
  bool in_nilradical(std::size_t i) const { return lat_.ideals[i].subset_of(lat_.nilradical); }

  std::size_t sum(std::size_t a, std::size_t b);
  std::size_t meet(std::size_t a, std::size_t b);
  std::size_t product(std::size_t a, std::size_t b);
  std::size_t rad(std::size_t i);
  bool product_is_zero(std::size_t a, std::size_t b);
  // All products of generators inside ideal c.
  bool product_inside(std::size_t a, std::size_t b, std::size_t c);

  const QuotientRing& quotient(std::size_t k);

  bool quasi_local() const { return lat_.maximal.size() == 1; }
  bool presimplifiable();
  bool quasi_presimplifiable();

 private:
  enum Slot { s_weakly_j, s_j, s_quasi_j, s_weakly_prime, s_prime, s_n, s_superfluous, s_spresimp, slot_count };
  bool cached(Slot slot, std::size_t i);

  const Subject& subject_;
  const Lattice& lat_;
  std::vector<std::vector<signed char>> verdicts_;
  std::vector<std::unique_ptr<QuotientRing>> quotients_;
  std::vector<int> rad_;
  std::optional<bool> presimp_;
  std::optional<bool> quasi_presimp_;
};

}  // namespace idealforge
