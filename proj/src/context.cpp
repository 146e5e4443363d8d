#include "idealforge/context.hpp"

#include "idealforge/error.hpp"

namespace idealforge {

RingContext::RingContext(const Subject& subject)
    : subject_(subject),
      lat_(lattice(*subject.ring)),
      verdicts_(slot_count, std::vector<signed char>(lat_.size(), -1)),
      quotients_(lat_.size()),
      rad_(lat_.size(), -1) {}

std::size_t RingContext::index_of(const ElementSet& members) const {
  auto i = lat_.find(members);
  if (!i) throw Error(ErrorKind::not_an_ideal, "set is not in the ideal lattice of " + ring().label());
  return *i;
}

bool RingContext::cached(Slot slot, std::size_t i) {
  if (!proper(i)) return false;
  signed char& v = verdicts_[slot][i];
  if (v < 0) {
    const Ideal I = ideal(i);
    switch (slot) {
      case s_weakly_j: v = is_weakly_j_ideal(I).holds; break;
      case s_j: v = is_j_ideal(I).holds; break;
      case s_quasi_j: v = is_quasi_j_ideal(I).holds; break;
      case s_weakly_prime: v = is_weakly_prime(I).holds; break;
      case s_prime: v = is_prime(I).holds; break;
      case s_n: v = is_n_ideal(I).holds; break;
      case s_superfluous: v = is_superfluous(I).holds; break;
      case s_spresimp: v = is_s_presimplifiable_quotient(I).holds; break;
      case slot_count: break;
    }
  }
  return v == 1;
}

bool RingContext::weakly_j(std::size_t i) { return cached(s_weakly_j, i); }
bool RingContext::j(std::size_t i) { return cached(s_j, i); }
bool RingContext::quasi_j(std::size_t i) { return cached(s_quasi_j, i); }
bool RingContext::weakly_prime(std::size_t i) { return cached(s_weakly_prime, i); }
bool RingContext::prime(std::size_t i) { return cached(s_prime, i); }
bool RingContext::n_ideal(std::size_t i) { return cached(s_n, i); }
bool RingContext::superfluous(std::size_t i) { return cached(s_superfluous, i); }
bool RingContext::s_presimp(std::size_t i) { return cached(s_spresimp, i); }

std::size_t RingContext::sum(std::size_t a, std::size_t b) {
  return index_of(sum_set(ring(), lat_.ideals[a], lat_.ideals[b]));
}

std::size_t RingContext::meet(std::size_t a, std::size_t b) { return index_of(lat_.ideals[a] & lat_.ideals[b]); }

std::size_t RingContext::product(std::size_t a, std::size_t b) {
  std::vector<Elem> gens;
  for (Elem x : lat_.generators[a]) {
    for (Elem y : lat_.generators[b]) gens.push_back(ring().mul(x, y));
  }
  return index_of(generated_set(ring(), gens));
}

std::size_t RingContext::rad(std::size_t i) {
  if (rad_[i] < 0) rad_[i] = static_cast<int>(index_of(radical(ideal(i)).members()));
  return static_cast<std::size_t>(rad_[i]);
}

bool RingContext::product_is_zero(std::size_t a, std::size_t b) {
  for (Elem x : lat_.generators[a]) {
    for (Elem y : lat_.generators[b]) {
      if (ring().mul(x, y) != ring().zero()) return false;
    }
  }
  return true;
}

bool RingContext::product_inside(std::size_t a, std::size_t b, std::size_t c) {
  const ElementSet& target = lat_.ideals[c];
  for (Elem x : lat_.generators[a]) {
    for (Elem y : lat_.generators[b]) {
      if (!target.test(ring().mul(x, y))) return false;
    }
  }
  return true;
}

const QuotientRing& RingContext::quotient(std::size_t k) {
  if (!quotients_[k]) quotients_[k] = std::make_unique<QuotientRing>(quotient_ring(ideal(k)));
  return *quotients_[k];
}

bool RingContext::presimplifiable() {
  if (!presimp_) presimp_ = is_presimplifiable(ring());
  return *presimp_;
}

bool RingContext::quasi_presimplifiable() {
  if (!quasi_presimp_) quasi_presimp_ = is_quasi_presimplifiable(ring());
  return *quasi_presimp_;
}

}  // namespace idealforge
