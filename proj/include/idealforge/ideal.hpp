#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "idealforge/element_set.hpp"
#include "idealforge/ring.hpp"

namespace idealforge {

// An ideal of a specific ring. Construction through the public constructor
// checks the ideal axioms; `trusted` skips the check for sets that are
// ideals by construction.
class Ideal {
 public:
  Ideal(RingPtr ring, ElementSet members);
  static Ideal trusted(RingPtr ring, ElementSet members);
  static Ideal zero(const RingPtr& ring);
  static Ideal whole(const RingPtr& ring);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const Ring& ring() const noexcept { return *ring_; }
  const ElementSet& members() const noexcept { return members_; }

  bool contains(Elem e) const noexcept { return members_.test(e); }
  std::size_t size() const noexcept { return members_.count(); }
  bool is_zero() const noexcept { return size() == 1; }
  bool is_proper() const noexcept { return !members_.test(ring_->one()); }
  bool subset_of(const Ideal& other) const noexcept { return members_.subset_of(other.members_); }

  friend bool operator==(const Ideal& a, const Ideal& b) noexcept {
    return a.ring_ == b.ring_ && a.members_ == b.members_;
  }

 private:
  struct TrustedTag {};
  Ideal(TrustedTag, RingPtr ring, ElementSet members);

  RingPtr ring_;
  ElementSet members_;
};

// A subset of a ring; closure properties are checked by the predicates that
// need them, not on construction.
struct MultSet {
  RingPtr ring;
  ElementSet members;

  bool contains(Elem e) const noexcept { return members.test(e); }
  bool is_multiplicatively_closed() const;
};

// Name of the first ideal axiom `members` violates in `ring`, or empty.
std::string check_ideal_axioms(const Ring& ring, const ElementSet& members,
                               std::vector<std::size_t>* witness = nullptr);

// The complete ideal lattice of a ring together with the radicals derived
// from it. Ideals are listed by size, then by member sequence: {0} first and
// the whole ring last.
struct Lattice {
  std::vector<ElementSet> ideals;
  std::vector<std::vector<Elem>> generators;  // a small generating set per ideal
  std::vector<bool> principal;
  std::vector<std::size_t> maximal;
  ElementSet units;
  ElementSet jacobson;
  ElementSet nilradical;

  std::optional<std::size_t> find(const ElementSet& members) const;
  std::size_t size() const noexcept { return ideals.size(); }

  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
};

// Cached per ring; the first caller computes, concurrent callers wait.
const Lattice& lattice(const Ring& ring);

// Installs a precomputed ideal list (for instance from the disk cache) when
// the lattice has not been computed yet. Returns whether it was installed.
bool seed_lattice(const Ring& ring, std::vector<ElementSet> ideals);

// Uncached lattice enumeration by principal-ideal join closure.
std::vector<ElementSet> enumerate_ideal_sets(const Ring& ring);

ElementSet principal_set(const Ring& ring, Elem generator);
ElementSet generated_set(const Ring& ring, std::span<const Elem> generators);
ElementSet sum_set(const Ring& ring, const ElementSet& a, const ElementSet& b);

// Greedy generating set: walks the members in order and keeps each one not
// yet generated by the earlier picks.
std::vector<Elem> generators_of(const Ring& ring, const ElementSet& ideal);

// "<g1,g2>" from generators_of, "<>" for the zero ideal.
std::string ideal_label(const Ring& ring, const ElementSet& ideal);

Ideal ideal_generated_by(const RingPtr& ring, std::span<const Elem> generators);
Ideal ideal_generated_by(const RingPtr& ring, std::initializer_list<Elem> generators);
std::vector<Ideal> all_ideals(const RingPtr& ring);
std::vector<Ideal> maximal_ideals(const RingPtr& ring);

// Intersection of the maximal ideals containing I. Throws improper_ideal.
Ideal j_of_ideal(const Ideal& ideal);

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);

// (I : S) = {r : rs in I for all s in S}. Throws empty_set for empty S.
Ideal residual(const Ideal& ideal, const ElementSet& subset);
// (0 : S)
Ideal annihilator(const RingPtr& ring, const ElementSet& subset);

Ideal radical(const Ideal& ideal);

// Z_I(R) = {r : rs in I for some s outside I}. Throws improper_ideal.
ElementSet zi_set(const Ideal& ideal);

}  // namespace idealforge
