#pragma once

#include <cstdint>
#include <vector>

#include "idealforge/ideal.hpp"
#include "idealforge/module.hpp"
#include "idealforge/ring.hpp"

namespace idealforge {

struct QuotientRing {
  RingPtr ring;
  RingHom projection;
  std::vector<Elem> representatives;  // least element of each coset
};

// R/K with cosets ordered by their least representative.
QuotientRing quotient_ring(const Ideal& k, const Caps& caps = default_caps());

// I/K as an ideal of R/K (K must be contained in I).
Ideal quotient_ideal(const QuotientRing& q, const Ideal& i);

struct ProductRing {
  RingPtr ring;
  RingHom first;
  RingHom second;
};

ProductRing product_ring(const RingPtr& r1, const RingPtr& r2, const Caps& caps = default_caps());

struct Idealization {
  RingPtr ring;
  RingPtr base;
  ModulePtr module;
  RingHom inclusion;  // r -> (r, 0)
};

// R(+)M on pairs (r, x) with index r * |M| + x. Throws when the radical law
// J(R(+)M) = J(R)(+)M fails on the result.
Idealization idealization(const RingPtr& base, const ModulePtr& module, const Caps& caps = default_caps());

// I(+)N; throws containment_violation unless IM is inside N.
Ideal ideal_in_idealization(const Idealization& ring, const Ideal& i, const ElementSet& n);

struct AmalgamationSpec {
  RingPtr base;    // R
  RingPtr target;  // S
  RingHom hom;     // f : R -> S
  Ideal ideal;     // J, an ideal of S
};

// R join^f J, stored as the sorted pairs (r, f(r) + j) of R x S.
struct Amalgamation {
  AmalgamationSpec spec;
  RingPtr ring;
  RingPtr subring;                           // f(R) + J as a ring
  std::vector<Elem> subring_embedding;       // subring element -> S element
  std::vector<std::int32_t> subring_lookup;  // S element -> subring element or -1
  RingHom base_projection;                   // (r, s) -> r
  RingHom inclusion;                         // into R x S
  RingPtr ambient;                           // R x S
  ElementSet zero_times_ideal;               // {0} x J
};

Amalgamation amalgamation(const AmalgamationSpec& spec, const Caps& caps = default_caps());

// I join^f J for an ideal I of R.
Ideal amalgamated_ideal_I(const Amalgamation& amal, const Ideal& i);
// The bar construction for an ideal K of f(R) + J (owned by amal.subring).
Ideal amalgamated_ideal_K(const Amalgamation& amal, const Ideal& k);
// The bar construction for any subset of S; Q-bar for maximal Q of S.
ElementSet amalgamated_bar_set(const Amalgamation& amal, const ElementSet& target_subset);
// I join^f T for f(I)J <= T <= J, T an ideal of f(R) + J.
Ideal amalgamated_ideal_T(const Amalgamation& amal, const Ideal& i, const Ideal& t);

// K intersected with f(R) + J, as an ideal of the subring.
Ideal restrict_to_subring(const Amalgamation& amal, const ElementSet& target_subset);
// f(I)J as a subset of S.
ElementSet image_times_ideal(const Amalgamation& amal, const Ideal& i);

struct Localization {
  RingPtr ring;
  RingHom canonical;  // a -> a/1
  MultSet denominators;
  ElementSet torsion;  // {a : ua = 0 for some u in S}
};

// S^-1 R from fraction classes a/s ~ b/t iff u(at - bs) = 0 for some u in S.
Localization localization(const MultSet& s, const Caps& caps = default_caps());

// S^-1 I: the ideal generated by the image of I.
Ideal extend_ideal(const Localization& loc, const Ideal& i);

// R[x]/(x^k): coefficient vectors c0 + c1 x + ... with index sum c_i n^i.
RingPtr truncated_poly(const RingPtr& base, unsigned k, const Caps& caps = default_caps());

// Constants of R[x]/(x^k) as a subset, for contracting ideals to R.
std::vector<Elem> poly_constants(const RingPtr& poly, const RingPtr& base);

}  // namespace idealforge
