#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "idealforge/element_set.hpp"

namespace idealforge {

// Order limits. `direct` bounds rings written down directly (Z_n), `derived`
// bounds the output of every construction.
struct Caps {
  std::size_t direct = 256;
  std::size_t derived = 4096;
};

Caps& default_caps() noexcept;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;
struct Lattice;

// Element layout of rings whose elements are pairs (products, idealizations,
// amalgamations). `right` is null when the second coordinate lives in a
// module rather than a ring.
struct PairLayout {
  RingPtr left;
  RingPtr right;
  std::size_t right_order = 0;
  std::vector<std::pair<Elem, Elem>> coords;  // element -> (left, right)
  std::vector<std::int32_t> lookup;           // left * right_order + right -> element or -1
};

// Raw material for a ring: what validate_ring checks and make_ring trusts.
struct RingData {
  std::size_t order = 0;
  std::vector<Elem> add;  // order * order, row-major
  std::vector<Elem> mul;
  Elem zero = 0;
  Elem one = 0;
  std::string label;
  std::vector<std::string> element_labels;  // empty -> decimal indices
  std::shared_ptr<const PairLayout> pairs;
  std::optional<unsigned> zn_modulus;
};

// A finite commutative ring with identity given by dense operation tables.
// Immutable once built; shared through RingPtr and compared by identity.
class Ring {
 public:
  explicit Ring(RingData data);

  std::size_t order() const noexcept { return n_; }
  Elem zero() const noexcept { return zero_; }
  Elem one() const noexcept { return one_; }

  Elem add(Elem a, Elem b) const noexcept { return add_[std::size_t{a} * n_ + b]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[std::size_t{a} * n_ + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg_[b]); }

  const Elem* add_row(Elem a) const noexcept { return add_.data() + std::size_t{a} * n_; }
  const Elem* mul_row(Elem a) const noexcept { return mul_.data() + std::size_t{a} * n_; }
  std::span<const Elem> add_table() const noexcept { return add_; }
  std::span<const Elem> mul_table() const noexcept { return mul_; }

  const std::string& label() const noexcept { return label_; }
  std::string element_label(Elem e) const;

  const PairLayout* pairs() const noexcept { return pairs_.get(); }
  std::optional<Elem> pair_index(std::size_t left, std::size_t right) const noexcept;
  std::optional<unsigned> zn_modulus() const noexcept { return zn_modulus_; }

  // FNV-1a over the order, identity elements and both tables.
  std::uint64_t content_hash() const noexcept { return hash_; }

  ElementSet empty_set() const { return ElementSet(n_); }
  ElementSet all() const { return ElementSet::full(n_); }

 private:
  friend const Lattice& lattice(const Ring& ring);
  friend bool seed_lattice(const Ring& ring, std::vector<ElementSet> ideals);

  std::size_t n_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  Elem zero_;
  Elem one_;
  std::string label_;
  std::vector<std::string> labels_;
  std::shared_ptr<const PairLayout> pairs_;
  std::optional<unsigned> zn_modulus_;
  std::uint64_t hash_;

  mutable std::once_flag lattice_once_;
  mutable std::shared_ptr<const Lattice> lattice_;
};

// Wraps data that is correct by construction. No axiom scan.
RingPtr make_ring(RingData data);

// Full axiom scan; throws Error{axiom_violation} naming the first failed
// axiom with a witness triple.
RingPtr validate_ring(RingData data);

// Same scan over an existing ring; returns the violated axiom name or empty.
std::string check_ring_axioms(const Ring& ring, std::vector<std::size_t>* witness = nullptr);

RingPtr make_zn(unsigned n, const Caps& caps = default_caps());

ElementSet units(const Ring& ring);
// {b : ab in set} and {b : ab = 0}.
ElementSet mul_preimage(const Ring& ring, Elem a, const ElementSet& set);
ElementSet zero_products(const Ring& ring, Elem a);
ElementSet zero_divisors(const Ring& ring);

// Smallest k >= 1 with x^k == 0, or 0 when x is not nilpotent.
std::size_t nilpotency_index(const Ring& ring, Elem x);

class Ideal;
Ideal nilradical(const RingPtr& ring);
Ideal jacobson_radical(const RingPtr& ring);
// {x : 1 - xr is a unit for every r}, computed without the ideal lattice.
ElementSet jacobson_by_units(const Ring& ring);

bool is_quasi_local(const Ring& ring);
bool is_semiprimitive(const Ring& ring);
bool is_reduced(const Ring& ring);
bool is_presimplifiable(const Ring& ring);
bool is_quasi_presimplifiable(const Ring& ring);

// Unital ring homomorphism given by its table on element indices.
class RingHom {
 public:
  RingHom(RingPtr source, RingPtr target, std::vector<Elem> map);

  const RingPtr& source() const noexcept { return source_; }
  const RingPtr& target() const noexcept { return target_; }
  Elem operator()(Elem a) const noexcept { return map_[a]; }
  std::span<const Elem> table() const noexcept { return map_; }

  bool is_mono() const;
  bool is_epi() const;
  ElementSet image() const;
  ElementSet kernel() const;
  ElementSet image_of(const ElementSet& subset) const;
  ElementSet preimage_of(const ElementSet& subset) const;

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<Elem> map_;
};

// Scans the homomorphism axioms; throws Error{hom_violation}.
RingHom validate_hom(RingPtr source, RingPtr target, std::vector<Elem> map);
RingHom identity_hom(const RingPtr& ring);

}  // namespace idealforge
