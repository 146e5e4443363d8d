#include "idealforge/ring.hpp"

#include <string>
#include <utility>

#include "idealforge/error.hpp"
#include "idealforge/ideal.hpp"

namespace idealforge {

Caps& default_caps() noexcept {
  static Caps caps;
  return caps;
}

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xFF;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t table_hash(std::size_t order, Elem zero, Elem one, std::span<const Elem> add,
                         std::span<const Elem> mul) {
  std::uint64_t h = 14695981039346656037ULL;
  h = fnv1a(h, order);
  h = fnv1a(h, zero);
  h = fnv1a(h, one);
  for (Elem e : add) h = fnv1a(h, e);
  for (Elem e : mul) h = fnv1a(h, e);
  return h;
}

}  // namespace

Ring::Ring(RingData data)
    : n_(data.order),
      add_(std::move(data.add)),
      mul_(std::move(data.mul)),
      neg_(data.order, 0),
      zero_(data.zero),
      one_(data.one),
      label_(std::move(data.label)),
      labels_(std::move(data.element_labels)),
      pairs_(std::move(data.pairs)),
      zn_modulus_(data.zn_modulus),
      hash_(0) {
  for (std::size_t a = 0; a < n_; ++a) {
    const Elem* row = add_.data() + a * n_;
    for (std::size_t b = 0; b < n_; ++b) {
      if (row[b] == zero_) {
        neg_[a] = static_cast<Elem>(b);
        break;
      }
    }
  }
  hash_ = table_hash(n_, zero_, one_, add_, mul_);
}

std::string Ring::element_label(Elem e) const {
  if (e < labels_.size()) return labels_[e];
  return std::to_string(e);
}

std::optional<Elem> Ring::pair_index(std::size_t left, std::size_t right) const noexcept {
  if (!pairs_ || pairs_->left == nullptr) return std::nullopt;
  if (left >= pairs_->left->order() || right >= pairs_->right_order) return std::nullopt;
  const std::int32_t e = pairs_->lookup[left * pairs_->right_order + right];
  if (e < 0) return std::nullopt;
  return static_cast<Elem>(e);
}

RingPtr make_ring(RingData data) { return std::make_shared<const Ring>(std::move(data)); }

namespace {

std::string check_tables(const RingData& d, std::vector<std::size_t>& w) {
  const std::size_t n = d.order;
  if (n == 0) return "nonempty";
  if (d.add.size() != n * n || d.mul.size() != n * n) return "table-shape";
  for (std::size_t i = 0; i < n * n; ++i) {
    if (d.add[i] >= n || d.mul[i] >= n) {
      w = {i / n, i % n};
      return "closure";
    }
  }
  if (d.zero >= n || d.one >= n) return "identity-in-range";
  if (d.zero == d.one) {
    w = {d.zero};
    return "nontrivial-identity";
  }
  auto add = [&](std::size_t a, std::size_t b) -> std::size_t { return d.add[a * n + b]; };
  auto mul = [&](std::size_t a, std::size_t b) -> std::size_t { return d.mul[a * n + b]; };

  for (std::size_t a = 0; a < n; ++a) {
    if (add(a, d.zero) != a) {
      w = {a};
      return "additive-identity";
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (add(a, b) != add(b, a)) {
        w = {a, b};
        return "additive-commutativity";
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = add(a, b) == d.zero;
    if (!found) {
      w = {a};
      return "additive-inverse";
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = add(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (add(ab, c) != add(a, add(b, c))) {
          w = {a, b, c};
          return "additive-associativity";
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (mul(a, b) != mul(b, a)) {
        w = {a, b};
        return "multiplicative-commutativity";
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (mul(a, d.one) != a) {
      w = {a};
      return "multiplicative-identity";
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = mul(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) {
          w = {a, b, c};
          return "multiplicative-associativity";
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
          w = {a, b, c};
          return "distributivity";
        }
      }
    }
  }
  return {};
}

}  // namespace

RingPtr validate_ring(RingData data) {
  std::vector<std::size_t> witness;
  const std::string axiom = check_tables(data, witness);
  if (!axiom.empty()) {
    throw Error(ErrorKind::axiom_violation, "ring axiom violated: " + axiom, axiom,
                std::move(witness));
  }
  return make_ring(std::move(data));
}

std::string check_ring_axioms(const Ring& ring, std::vector<std::size_t>* witness) {
  RingData d;
  d.order = ring.order();
  d.add.assign(ring.add_table().begin(), ring.add_table().end());
  d.mul.assign(ring.mul_table().begin(), ring.mul_table().end());
  d.zero = ring.zero();
  d.one = ring.one();
  std::vector<std::size_t> w;
  std::string axiom = check_tables(d, w);
  if (witness != nullptr) *witness = std::move(w);
  return axiom;
}

RingPtr make_zn(unsigned n, const Caps& caps) {
  if (n < 2 || n > caps.direct) {
    throw Error(ErrorKind::order_out_of_range,
                "Z_n needs 2 <= n <= " + std::to_string(caps.direct) + ", got " + std::to_string(n));
  }
  RingData d;
  d.order = n;
  d.add.resize(std::size_t{n} * n);
  d.mul.resize(std::size_t{n} * n);
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; b < n; ++b) {
      d.add[a * n + b] = static_cast<Elem>((a + b) % n);
      d.mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  }
  d.zero = 0;
  d.one = 1;
  d.label = "Z" + std::to_string(n);
  d.zn_modulus = n;
  return make_ring(std::move(d));
}

ElementSet units(const Ring& ring) {
  const auto& k = kernels::active();
  const std::size_t n = ring.order();
  ElementSet out(n);
  ElementSet hits(n);
  for (std::size_t u = 0; u < n; ++u) {
    k.row_equals(ring.mul_row(static_cast<Elem>(u)), n, ring.one(), hits.data());
    if (!hits.empty()) out.set(u);
  }
  return out;
}

ElementSet mul_preimage(const Ring& ring, Elem a, const ElementSet& set) {
  ElementSet out(ring.order());
  kernels::active().row_preimage(ring.mul_row(a), ring.order(), set.data(), out.data());
  return out;
}

ElementSet zero_products(const Ring& ring, Elem a) {
  ElementSet out(ring.order());
  kernels::active().row_equals(ring.mul_row(a), ring.order(), ring.zero(), out.data());
  return out;
}

ElementSet zero_divisors(const Ring& ring) {
  const auto& k = kernels::active();
  const std::size_t n = ring.order();
  ElementSet out(n);
  ElementSet hits(n);
  for (std::size_t r = 0; r < n; ++r) {
    k.row_equals(ring.mul_row(static_cast<Elem>(r)), n, ring.zero(), hits.data());
    hits.reset(ring.zero());
    if (!hits.empty()) out.set(r);
  }
  return out;
}

std::size_t nilpotency_index(const Ring& ring, Elem x) {
  // At most n distinct powers, so the walk ends by repetition or at zero.
  std::vector<bool> seen(ring.order(), false);
  Elem power = x;
  for (std::size_t k = 1;; ++k) {
    if (power == ring.zero()) return k;
    if (seen[power]) return 0;
    seen[power] = true;
    power = ring.mul(power, x);
  }
}

Ideal nilradical(const RingPtr& ring) { return Ideal::trusted(ring, lattice(*ring).nilradical); }

Ideal jacobson_radical(const RingPtr& ring) { return Ideal::trusted(ring, lattice(*ring).jacobson); }

ElementSet jacobson_by_units(const Ring& ring) {
  const auto& k = kernels::active();
  const std::size_t n = ring.order();
  const ElementSet unit_set = units(ring);
  ElementSet out(n);
  ElementSet ok(n);
  std::vector<Elem> row(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem* xr = ring.mul_row(static_cast<Elem>(x));
    for (std::size_t r = 0; r < n; ++r) row[r] = ring.sub(ring.one(), xr[r]);
    k.row_preimage(row.data(), n, unit_set.data(), ok.data());
    if (ok.is_full()) out.set(x);
  }
  return out;
}

bool is_quasi_local(const Ring& ring) { return lattice(ring).maximal.size() == 1; }

bool is_semiprimitive(const Ring& ring) { return lattice(ring).jacobson.count() == 1; }

bool is_reduced(const Ring& ring) { return lattice(ring).nilradical.count() == 1; }

bool is_presimplifiable(const Ring& ring) {
  return zero_divisors(ring).subset_of(lattice(ring).jacobson);
}

bool is_quasi_presimplifiable(const Ring& ring) {
  const Lattice& lat = lattice(ring);
  const std::size_t n = ring.order();
  for (std::size_t a = 0; a < n; ++a) {
    if (lat.nilradical.test(a)) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (ring.mul(static_cast<Elem>(a), static_cast<Elem>(b)) == a && !lat.units.test(b)) return false;
    }
  }
  return true;
}

RingHom::RingHom(RingPtr source, RingPtr target, std::vector<Elem> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

bool RingHom::is_mono() const {
  ElementSet seen(target_->order());
  for (Elem e : map_) {
    if (seen.test(e)) return false;
    seen.set(e);
  }
  return true;
}

bool RingHom::is_epi() const { return image().is_full(); }

ElementSet RingHom::image() const {
  ElementSet out(target_->order());
  for (Elem e : map_) out.set(e);
  return out;
}

ElementSet RingHom::kernel() const {
  ElementSet out(source_->order());
  for (std::size_t a = 0; a < map_.size(); ++a) {
    if (map_[a] == target_->zero()) out.set(a);
  }
  return out;
}

ElementSet RingHom::image_of(const ElementSet& subset) const {
  ElementSet out(target_->order());
  subset.for_each([&](Elem a) { out.set(map_[a]); });
  return out;
}

ElementSet RingHom::preimage_of(const ElementSet& subset) const {
  ElementSet out(source_->order());
  kernels::active().row_preimage(map_.data(), map_.size(), subset.data(), out.data());
  return out;
}

RingHom validate_hom(RingPtr source, RingPtr target, std::vector<Elem> map) {
  const std::size_t n = source->order();
  auto fail = [](const std::string& axiom, std::vector<std::size_t> w) {
    throw Error(ErrorKind::hom_violation, "homomorphism axiom violated: " + axiom, axiom,
                std::move(w));
  };
  if (map.size() != n) fail("total", {map.size()});
  for (std::size_t a = 0; a < n; ++a) {
    if (map[a] >= target->order()) fail("in-range", {a});
  }
  if (map[source->zero()] != target->zero()) fail("preserves-zero", {source->zero()});
  if (map[source->one()] != target->one()) fail("preserves-one", {source->one()});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto ea = static_cast<Elem>(a);
      const auto eb = static_cast<Elem>(b);
      if (map[source->add(ea, eb)] != target->add(map[a], map[b])) fail("preserves-addition", {a, b});
      if (map[source->mul(ea, eb)] != target->mul(map[a], map[b])) fail("preserves-multiplication", {a, b});
    }
  }
  return RingHom(std::move(source), std::move(target), std::move(map));
}

RingHom identity_hom(const RingPtr& ring) {
  std::vector<Elem> map(ring->order());
  for (std::size_t a = 0; a < map.size(); ++a) map[a] = static_cast<Elem>(a);
  return RingHom(ring, ring, std::move(map));
}

}  // namespace idealforge
