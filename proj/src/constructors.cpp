#include "idealforge/constructors.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "idealforge/error.hpp"

namespace idealforge {

namespace {

void require_cap(std::size_t order, const Caps& caps, const std::string& what) {
  if (order > caps.derived) {
    throw Error(ErrorKind::order_cap_exceeded, what + " would have order " + std::to_string(order) +
                                                   ", above the cap " + std::to_string(caps.derived));
  }
}

std::string pair_label(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

std::string wrap(const std::string& label) {
  if (label.find_first_of(" x/(") == std::string::npos) return label;
  return "(" + label + ")";
}

}  // namespace

QuotientRing quotient_ring(const Ideal& k, const Caps& caps) {
  if (!k.is_proper()) throw Error(ErrorKind::improper_ideal, "R/K needs a proper ideal K");
  const Ring& r = k.ring();
  const std::size_t n = r.order();
  std::vector<std::int32_t> coset(n, -1);
  std::vector<Elem> reps;
  for (std::size_t a = 0; a < n; ++a) {
    if (coset[a] >= 0) continue;
    const auto id = static_cast<std::int32_t>(reps.size());
    reps.push_back(static_cast<Elem>(a));
    k.members().for_each([&](Elem x) { coset[r.add(static_cast<Elem>(a), x)] = id; });
  }
  const std::size_t m = reps.size();
  require_cap(m, caps, "quotient");
  RingData d;
  d.order = m;
  d.add.resize(m * m);
  d.mul.resize(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      d.add[x * m + y] = static_cast<Elem>(coset[r.add(reps[x], reps[y])]);
      d.mul[x * m + y] = static_cast<Elem>(coset[r.mul(reps[x], reps[y])]);
    }
  }
  d.zero = static_cast<Elem>(coset[r.zero()]);
  d.one = static_cast<Elem>(coset[r.one()]);
  d.label = wrap(r.label()) + "/" + ideal_label(r, k.members());
  bool contiguous = true;
  for (std::size_t x = 0; x < m; ++x) {
    d.element_labels.push_back("[" + r.element_label(reps[x]) + "]");
    contiguous = contiguous && reps[x] == x;
  }
  // Z_n / <d> keeps residue labels and behaves as Z_d.
  if (r.zn_modulus() && contiguous) {
    d.zn_modulus = static_cast<unsigned>(m);
    d.element_labels.clear();
  }
  RingPtr ring = make_ring(std::move(d));
  std::vector<Elem> map(n);
  for (std::size_t a = 0; a < n; ++a) map[a] = static_cast<Elem>(coset[a]);
  return QuotientRing{ring, RingHom(k.ring_ptr(), ring, std::move(map)), std::move(reps)};
}

Ideal quotient_ideal(const QuotientRing& q, const Ideal& i) {
  if (i.ring_ptr() != q.projection.source()) throw Error(ErrorKind::ring_mismatch, "I/K: I is not an ideal of R");
  const ElementSet kernel = q.projection.kernel();
  if (!kernel.subset_of(i.members())) {
    throw Error(ErrorKind::containment_violation, "I/K needs K inside I");
  }
  return Ideal::trusted(q.ring, q.projection.image_of(i.members()));
}

ProductRing product_ring(const RingPtr& r1, const RingPtr& r2, const Caps& caps) {
  const std::size_t n1 = r1->order();
  const std::size_t n2 = r2->order();
  require_cap(n1 * n2, caps, "product");
  RingData d;
  const std::size_t n = n1 * n2;
  d.order = n;
  d.add.resize(n * n);
  d.mul.resize(n * n);
  auto layout = std::make_shared<PairLayout>();
  layout->left = r1;
  layout->right = r2;
  layout->right_order = n2;
  layout->lookup.resize(n);
  for (std::size_t a = 0; a < n1; ++a) {
    for (std::size_t b = 0; b < n2; ++b) {
      const std::size_t e = a * n2 + b;
      layout->coords.emplace_back(static_cast<Elem>(a), static_cast<Elem>(b));
      layout->lookup[e] = static_cast<std::int32_t>(e);
      d.element_labels.push_back(
          pair_label(r1->element_label(static_cast<Elem>(a)), r2->element_label(static_cast<Elem>(b))));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    const auto [a1, b1] = layout->coords[x];
    for (std::size_t y = 0; y < n; ++y) {
      const auto [a2, b2] = layout->coords[y];
      d.add[x * n + y] = static_cast<Elem>(r1->add(a1, a2) * n2 + r2->add(b1, b2));
      d.mul[x * n + y] = static_cast<Elem>(r1->mul(a1, a2) * n2 + r2->mul(b1, b2));
    }
  }
  d.zero = static_cast<Elem>(r1->zero() * n2 + r2->zero());
  d.one = static_cast<Elem>(r1->one() * n2 + r2->one());
  d.label = wrap(r1->label()) + " x " + wrap(r2->label());
  d.pairs = layout;
  RingPtr ring = make_ring(std::move(d));
  std::vector<Elem> first(n);
  std::vector<Elem> second(n);
  for (std::size_t x = 0; x < n; ++x) {
    first[x] = layout->coords[x].first;
    second[x] = layout->coords[x].second;
  }
  return ProductRing{ring, RingHom(ring, r1, std::move(first)), RingHom(ring, r2, std::move(second))};
}

Idealization idealization(const RingPtr& base, const ModulePtr& module, const Caps& caps) {
  if (module->ring() != base) {
    throw Error(ErrorKind::module_violation, "module is not over the base ring", "base");
  }
  const std::size_t n1 = base->order();
  const std::size_t m = module->order();
  require_cap(n1 * m, caps, "idealization");
  const std::size_t n = n1 * m;
  RingData d;
  d.order = n;
  d.add.resize(n * n);
  d.mul.resize(n * n);
  auto layout = std::make_shared<PairLayout>();
  layout->left = base;
  layout->right_order = m;
  layout->lookup.resize(n);
  for (std::size_t r = 0; r < n1; ++r) {
    for (std::size_t x = 0; x < m; ++x) {
      const std::size_t e = r * m + x;
      layout->coords.emplace_back(static_cast<Elem>(r), static_cast<Elem>(x));
      layout->lookup[e] = static_cast<std::int32_t>(e);
      d.element_labels.push_back(
          pair_label(base->element_label(static_cast<Elem>(r)), module->element_label(static_cast<Elem>(x))));
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    const auto [r1, x1] = layout->coords[p];
    for (std::size_t q = 0; q < n; ++q) {
      const auto [r2, x2] = layout->coords[q];
      d.add[p * n + q] = static_cast<Elem>(base->add(r1, r2) * m + module->add(x1, x2));
      const Elem cross = module->add(module->act(r1, x2), module->act(r2, x1));
      d.mul[p * n + q] = static_cast<Elem>(base->mul(r1, r2) * m + cross);
    }
  }
  d.zero = static_cast<Elem>(base->zero() * m + module->zero());
  d.one = static_cast<Elem>(base->one() * m + module->zero());
  d.label = wrap(base->label()) + " (+) " + module->label();
  d.pairs = layout;
  RingPtr ring = make_ring(std::move(d));

  const Lattice& base_lat = lattice(*base);
  ElementSet expected(n);
  for (std::size_t e = 0; e < n; ++e) {
    if (base_lat.jacobson.test(layout->coords[e].first)) expected.set(e);
  }
  if (!(lattice(*ring).jacobson == expected)) {
    throw Error(ErrorKind::module_violation, "J(R(+)M) differs from J(R)(+)M", "radical-law");
  }
  std::vector<Elem> inc(n1);
  for (std::size_t r = 0; r < n1; ++r) inc[r] = static_cast<Elem>(r * m + module->zero());
  return Idealization{ring, base, module, RingHom(base, ring, std::move(inc))};
}

Ideal ideal_in_idealization(const Idealization& ring, const Ideal& i, const ElementSet& n) {
  if (i.ring_ptr() != ring.base) throw Error(ErrorKind::ring_mismatch, "I is not an ideal of the base ring");
  if (n.universe() != ring.module->order() || !is_submodule(*ring.module, n)) {
    throw Error(ErrorKind::not_an_ideal, "N is not a submodule of M", "submodule");
  }
  if (!ideal_times_module(i, *ring.module).subset_of(n)) {
    throw Error(ErrorKind::containment_violation, "I(+)N needs IM inside N");
  }
  const std::size_t m = ring.module->order();
  ElementSet out(ring.ring->order());
  i.members().for_each([&](Elem r) { n.for_each([&](Elem x) { out.set(r * m + x); }); });
  return Ideal::trusted(ring.ring, std::move(out));
}

Amalgamation amalgamation(const AmalgamationSpec& spec, const Caps& caps) {
  const RingPtr& r = spec.base;
  const RingPtr& s = spec.target;
  if (spec.hom.source() != r || spec.hom.target() != s) {
    throw Error(ErrorKind::ring_mismatch, "f must map the base ring to the target ring");
  }
  if (spec.ideal.ring_ptr() != s) throw Error(ErrorKind::ring_mismatch, "J must be an ideal of the target ring");
  const std::size_t nr = r->order();
  const std::size_t ns = s->order();
  const std::vector<Elem> j = spec.ideal.members().members();
  require_cap(nr * j.size(), caps, "amalgamation");

  std::vector<std::pair<Elem, Elem>> coords;
  for (std::size_t a = 0; a < nr; ++a) {
    const Elem fa = spec.hom(static_cast<Elem>(a));
    for (Elem x : j) coords.emplace_back(static_cast<Elem>(a), s->add(fa, x));
  }
  std::sort(coords.begin(), coords.end());
  const std::size_t n = coords.size();
  auto layout = std::make_shared<PairLayout>();
  layout->left = r;
  layout->right = s;
  layout->right_order = ns;
  layout->lookup.assign(nr * ns, -1);
  layout->coords = coords;
  RingData d;
  d.order = n;
  for (std::size_t e = 0; e < n; ++e) {
    layout->lookup[coords[e].first * ns + coords[e].second] = static_cast<std::int32_t>(e);
    d.element_labels.push_back(pair_label(r->element_label(coords[e].first), s->element_label(coords[e].second)));
  }
  d.add.resize(n * n);
  d.mul.resize(n * n);
  auto at = [&](Elem a, Elem b) { return static_cast<Elem>(layout->lookup[std::size_t{a} * ns + b]); };
  for (std::size_t p = 0; p < n; ++p) {
    const auto [a1, s1] = coords[p];
    for (std::size_t q = 0; q < n; ++q) {
      const auto [a2, s2] = coords[q];
      d.add[p * n + q] = at(r->add(a1, a2), s->add(s1, s2));
      d.mul[p * n + q] = at(r->mul(a1, a2), s->mul(s1, s2));
    }
  }
  d.zero = at(r->zero(), s->zero());
  d.one = at(r->one(), s->one());
  d.label = "amalg(" + r->label() + "," + s->label() + "," + ideal_label(*s, spec.ideal.members()) + ")";
  d.pairs = layout;
  RingPtr ring = make_ring(std::move(d));

  // f(R) + J as its own ring.
  ElementSet sub_members(ns);
  for (const auto& c : coords) sub_members.set(c.second);
  std::vector<Elem> embed = sub_members.members();
  std::vector<std::int32_t> sub_lookup(ns, -1);
  for (std::size_t e = 0; e < embed.size(); ++e) sub_lookup[embed[e]] = static_cast<std::int32_t>(e);
  RingData sd;
  const std::size_t m = embed.size();
  sd.order = m;
  sd.add.resize(m * m);
  sd.mul.resize(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      sd.add[x * m + y] = static_cast<Elem>(sub_lookup[s->add(embed[x], embed[y])]);
      sd.mul[x * m + y] = static_cast<Elem>(sub_lookup[s->mul(embed[x], embed[y])]);
    }
    sd.element_labels.push_back(s->element_label(embed[x]));
  }
  sd.zero = static_cast<Elem>(sub_lookup[s->zero()]);
  sd.one = static_cast<Elem>(sub_lookup[s->one()]);
  sd.label = "f(" + r->label() + ")+" + ideal_label(*s, spec.ideal.members());
  RingPtr subring = make_ring(std::move(sd));

  std::vector<Elem> proj(n);
  for (std::size_t e = 0; e < n; ++e) proj[e] = coords[e].first;

  RingPtr ambient;
  std::vector<Elem> inc(n);
  if (nr * ns <= caps.derived) {
    ambient = product_ring(r, s, caps).ring;
    for (std::size_t e = 0; e < n; ++e) inc[e] = static_cast<Elem>(coords[e].first * ns + coords[e].second);
  }
  ElementSet zero_j(n);
  for (Elem x : j) zero_j.set(at(r->zero(), x));

  return Amalgamation{spec,
                      ring,
                      subring,
                      std::move(embed),
                      std::move(sub_lookup),
                      RingHom(ring, r, std::move(proj)),
                      RingHom(ring, ambient ? ambient : ring, ambient ? std::move(inc) : std::vector<Elem>{}),
                      ambient,
                      std::move(zero_j)};
}

Ideal amalgamated_ideal_I(const Amalgamation& amal, const Ideal& i) {
  if (i.ring_ptr() != amal.spec.base) throw Error(ErrorKind::ring_mismatch, "I must be an ideal of R");
  const auto& coords = amal.ring->pairs()->coords;
  ElementSet out(amal.ring->order());
  for (std::size_t e = 0; e < coords.size(); ++e) {
    if (i.contains(coords[e].first)) out.set(e);
  }
  return Ideal::trusted(amal.ring, std::move(out));
}

ElementSet amalgamated_bar_set(const Amalgamation& amal, const ElementSet& target_subset) {
  const auto& coords = amal.ring->pairs()->coords;
  ElementSet out(amal.ring->order());
  for (std::size_t e = 0; e < coords.size(); ++e) {
    if (target_subset.test(coords[e].second)) out.set(e);
  }
  return out;
}

Ideal amalgamated_ideal_K(const Amalgamation& amal, const Ideal& k) {
  if (k.ring_ptr() != amal.subring) {
    throw Error(ErrorKind::not_an_ideal, "K must be an ideal of f(R)+J", "K-not-ideal-of-fR-plus-J");
  }
  ElementSet in_target(amal.spec.target->order());
  k.members().for_each([&](Elem x) { in_target.set(amal.subring_embedding[x]); });
  return Ideal::trusted(amal.ring, amalgamated_bar_set(amal, in_target));
}

Ideal restrict_to_subring(const Amalgamation& amal, const ElementSet& target_subset) {
  ElementSet out(amal.subring->order());
  for (std::size_t x = 0; x < amal.subring_embedding.size(); ++x) {
    if (target_subset.test(amal.subring_embedding[x])) out.set(x);
  }
  return Ideal(amal.subring, std::move(out));
}

ElementSet image_times_ideal(const Amalgamation& amal, const Ideal& i) {
  const Ring& s = *amal.spec.target;
  std::vector<Elem> products;
  i.members().for_each([&](Elem a) {
    const Elem fa = amal.spec.hom(a);
    amal.spec.ideal.members().for_each([&](Elem j) { products.push_back(s.mul(fa, j)); });
  });
  // Additive closure of the products.
  ElementSet out(s.order());
  out.set(s.zero());
  for (Elem p : products) {
    if (out.test(p)) continue;
    ElementSet cyclic(s.order());
    Elem x = p;
    while (!cyclic.test(x)) {
      cyclic.set(x);
      x = s.add(x, p);
    }
    out = sum_set(s, out, cyclic);
  }
  return out;
}

Ideal amalgamated_ideal_T(const Amalgamation& amal, const Ideal& i, const Ideal& t) {
  if (i.ring_ptr() != amal.spec.base) throw Error(ErrorKind::ring_mismatch, "I must be an ideal of R");
  if (t.ring_ptr() != amal.subring) {
    throw Error(ErrorKind::not_an_ideal, "T must be an ideal of f(R)+J", "T-not-ideal-of-fR-plus-J");
  }
  const Ring& s = *amal.spec.target;
  ElementSet t_target(s.order());
  t.members().for_each([&](Elem x) { t_target.set(amal.subring_embedding[x]); });
  if (!t_target.subset_of(amal.spec.ideal.members())) {
    throw Error(ErrorKind::containment_violation, "I join T needs T inside J");
  }
  if (!image_times_ideal(amal, i).subset_of(t_target)) {
    throw Error(ErrorKind::containment_violation, "I join T needs f(I)J inside T");
  }
  const auto& coords = amal.ring->pairs()->coords;
  ElementSet out(amal.ring->order());
  for (std::size_t e = 0; e < coords.size(); ++e) {
    const auto [a, x] = coords[e];
    if (i.contains(a) && t_target.test(s.sub(x, amal.spec.hom(a)))) out.set(e);
  }
  return Ideal::trusted(amal.ring, std::move(out));
}

Localization localization(const MultSet& mset, const Caps& caps) {
  const RingPtr& rp = mset.ring;
  const Ring& r = *rp;
  const std::size_t n = r.order();
  if (mset.members.universe() != n) throw Error(ErrorKind::invalid_mult_set, "S is not a subset of R");
  if (!mset.contains(r.one())) throw Error(ErrorKind::invalid_mult_set, "S must contain 1", "contains-one");
  if (mset.contains(r.zero())) throw Error(ErrorKind::invalid_mult_set, "S must not contain 0", "excludes-zero");
  if (!mset.is_multiplicatively_closed()) {
    throw Error(ErrorKind::invalid_mult_set, "S must be multiplicatively closed", "closed");
  }
  const std::vector<Elem> denoms = mset.members.members();

  // a/s ~ b/t iff at - bs lies in the S-torsion ideal.
  ElementSet torsion(n);
  for (Elem u : denoms) {
    for (std::size_t a = 0; a < n; ++a) {
      if (r.mul(u, static_cast<Elem>(a)) == r.zero()) torsion.set(a);
    }
  }
  std::vector<std::int32_t> coset(n, -1);
  std::vector<Elem> reps;
  for (std::size_t a = 0; a < n; ++a) {
    if (coset[a] >= 0) continue;
    const auto id = static_cast<std::int32_t>(reps.size());
    reps.push_back(static_cast<Elem>(a));
    torsion.for_each([&](Elem x) { coset[r.add(static_cast<Elem>(a), x)] = id; });
  }
  const std::size_t m = reps.size();
  require_cap(m, caps, "localization");

  // Class of every fraction a/s: the unique class x/1 with xs - a torsion.
  std::vector<std::int32_t> fraction_class(n * denoms.size(), -1);
  for (std::size_t si = 0; si < denoms.size(); ++si) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t x = 0; x < n; ++x) {
        if (torsion.test(r.sub(r.mul(static_cast<Elem>(x), denoms[si]), static_cast<Elem>(a)))) {
          fraction_class[a * denoms.size() + si] = coset[x];
          break;
        }
      }
    }
  }
  const std::size_t one_slot = static_cast<std::size_t>(
      std::find(denoms.begin(), denoms.end(), r.one()) - denoms.begin());
  auto class_of = [&](Elem a, std::size_t si) { return fraction_class[std::size_t{a} * denoms.size() + si]; };

  RingData d;
  d.order = m;
  d.add.resize(m * m);
  d.mul.resize(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      // x/1 + y/1 = (x + y)/1 and (x/1)(y/1) = xy/1.
      d.add[x * m + y] = static_cast<Elem>(class_of(r.add(reps[x], reps[y]), one_slot));
      d.mul[x * m + y] = static_cast<Elem>(class_of(r.mul(reps[x], reps[y]), one_slot));
    }
    d.element_labels.push_back(r.element_label(reps[x]) + "/1");
  }
  d.zero = static_cast<Elem>(class_of(r.zero(), one_slot));
  d.one = static_cast<Elem>(class_of(r.one(), one_slot));
  std::string sl = "{";
  for (std::size_t i = 0; i < denoms.size(); ++i) sl += (i ? "," : "") + r.element_label(denoms[i]);
  d.label = "loc(" + r.label() + "," + sl + "})";
  RingPtr ring = make_ring(std::move(d));
  std::vector<Elem> canon(n);
  for (std::size_t a = 0; a < n; ++a) canon[a] = static_cast<Elem>(class_of(static_cast<Elem>(a), one_slot));
  return Localization{ring, RingHom(rp, ring, std::move(canon)), mset, std::move(torsion)};
}

Ideal extend_ideal(const Localization& loc, const Ideal& i) {
  if (i.ring_ptr() != loc.canonical.source()) throw Error(ErrorKind::ring_mismatch, "I is not an ideal of R");
  const std::vector<Elem> image = loc.canonical.image_of(i.members()).members();
  return ideal_generated_by(loc.ring, image);
}

RingPtr truncated_poly(const RingPtr& base, unsigned k, const Caps& caps) {
  if (k < 2) throw Error(ErrorKind::order_out_of_range, "R[x]/(x^k) needs k >= 2");
  const std::size_t nb = base->order();
  std::size_t n = 1;
  for (unsigned i = 0; i < k; ++i) {
    n *= nb;
    require_cap(n, caps, "truncated polynomial ring");
  }
  auto decode = [&](std::size_t e) {
    std::vector<Elem> c(k);
    for (unsigned i = 0; i < k; ++i) {
      c[i] = static_cast<Elem>(e % nb);
      e /= nb;
    }
    return c;
  };
  auto encode = [&](const std::vector<Elem>& c) {
    std::size_t e = 0;
    for (unsigned i = k; i-- > 0;) e = e * nb + c[i];
    return static_cast<Elem>(e);
  };
  std::vector<std::vector<Elem>> coeffs(n);
  for (std::size_t e = 0; e < n; ++e) coeffs[e] = decode(e);
  RingData d;
  d.order = n;
  d.add.resize(n * n);
  d.mul.resize(n * n);
  std::vector<Elem> c(k);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      for (unsigned i = 0; i < k; ++i) c[i] = base->add(coeffs[p][i], coeffs[q][i]);
      d.add[p * n + q] = encode(c);
      for (unsigned i = 0; i < k; ++i) {
        Elem acc = base->zero();
        for (unsigned j = 0; j <= i; ++j) acc = base->add(acc, base->mul(coeffs[p][j], coeffs[q][i - j]));
        c[i] = acc;
      }
      d.mul[p * n + q] = encode(c);
    }
  }
  for (std::size_t e = 0; e < n; ++e) {
    std::string label;
    for (unsigned i = 0; i < k; ++i) {
      if (coeffs[e][i] == base->zero()) continue;
      if (!label.empty()) label += "+";
      const std::string coef = base->element_label(coeffs[e][i]);
      if (i == 0) {
        label += coef;
      } else {
        if (coeffs[e][i] != base->one()) label += coef;
        label += i == 1 ? "x" : "x^" + std::to_string(i);
      }
    }
    d.element_labels.push_back(label.empty() ? base->element_label(base->zero()) : label);
  }
  std::vector<Elem> z(k, base->zero());
  d.zero = encode(z);
  z[0] = base->one();
  d.one = encode(z);
  d.label = "poly(" + base->label() + "," + std::to_string(k) + ")";
  return make_ring(std::move(d));
}

std::vector<Elem> poly_constants(const RingPtr& poly, const RingPtr& base) {
  // Constants c0 + 0x + ... have index c0 when the other digits are zero.
  std::vector<Elem> out;
  if (base->zero() != 0) {
    throw Error(ErrorKind::evaluation_error, "constant lookup assumes zero has index 0");
  }
  for (std::size_t c = 0; c < base->order() && c < poly->order(); ++c) out.push_back(static_cast<Elem>(c));
  return out;
}

}  // namespace idealforge
