#include "idealforge/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "idealforge/error.hpp"

namespace idealforge {

std::string check_ideal_axioms(const Ring& ring, const ElementSet& members,
                               std::vector<std::size_t>* witness) {
  const auto& k = kernels::active();
  const std::size_t n = ring.order();
  auto report = [&](std::string axiom, std::vector<std::size_t> w) {
    if (witness != nullptr) *witness = std::move(w);
    return axiom;
  };
  if (members.universe() != n) return report("universe", {members.universe()});
  if (!members.test(ring.zero())) return report("contains-zero", {});
  ElementSet hits(n);
  std::string failure;
  std::vector<std::size_t> w;
  members.for_each([&](Elem i) {
    if (!failure.empty()) return;
    if (!members.test(ring.neg(i))) {
      failure = "closed-under-negation";
      w = {i};
      return;
    }
    // i + members must stay inside members.
    k.row_preimage(ring.add_row(i), n, members.data(), hits.data());
    if (!members.subset_of(hits)) {
      failure = "closed-under-addition";
      const ElementSet bad = members - hits;
      w = {i, *bad.first()};
      return;
    }
    k.row_preimage(ring.mul_row(i), n, members.data(), hits.data());
    if (!hits.is_full()) {
      failure = "absorbs-multiplication";
      w = {i, *hits.complement().first()};
    }
  });
  return report(failure, std::move(w));
}

Ideal::Ideal(RingPtr ring, ElementSet members) : ring_(std::move(ring)), members_(std::move(members)) {
  std::vector<std::size_t> witness;
  const std::string axiom = check_ideal_axioms(*ring_, members_, &witness);
  if (!axiom.empty()) {
    throw Error(ErrorKind::not_an_ideal, "subset is not an ideal of " + ring_->label() + ": " + axiom,
                axiom, std::move(witness));
  }
}

Ideal::Ideal(TrustedTag, RingPtr ring, ElementSet members)
    : ring_(std::move(ring)), members_(std::move(members)) {}

Ideal Ideal::trusted(RingPtr ring, ElementSet members) {
  return Ideal(TrustedTag{}, std::move(ring), std::move(members));
}

Ideal Ideal::zero(const RingPtr& ring) {
  ElementSet s(ring->order());
  s.set(ring->zero());
  return trusted(ring, std::move(s));
}

Ideal Ideal::whole(const RingPtr& ring) { return trusted(ring, ring->all()); }

bool MultSet::is_multiplicatively_closed() const {
  bool closed = true;
  members.for_each([&](Elem a) {
    if (!closed) return;
    members.for_each([&](Elem b) {
      if (closed && !members.test(ring->mul(a, b))) closed = false;
    });
  });
  return closed;
}

ElementSet principal_set(const Ring& ring, Elem generator) {
  ElementSet out(ring.order());
  const Elem* row = ring.mul_row(generator);
  for (std::size_t r = 0; r < ring.order(); ++r) out.set(row[r]);
  return out;
}

ElementSet sum_set(const Ring& ring, const ElementSet& a, const ElementSet& b) {
  // A + B is the union of the cosets A + x over x in B; x + A is the
  // preimage of A under y -> y - x.
  const auto& k = kernels::active();
  const std::size_t n = ring.order();
  ElementSet out = a;
  ElementSet shifted(n);
  b.for_each([&](Elem x) {
    if (out.test(x)) return;
    k.row_preimage(ring.add_row(ring.neg(x)), n, a.data(), shifted.data());
    out |= shifted;
  });
  return out;
}

ElementSet generated_set(const Ring& ring, std::span<const Elem> generators) {
  ElementSet out(ring.order());
  out.set(ring.zero());
  for (Elem g : generators) {
    if (g >= ring.order()) {
      throw Error(ErrorKind::element_out_of_range,
                  "element index " + std::to_string(g) + " out of range for " + ring.label());
    }
    if (out.test(g)) continue;
    out = sum_set(ring, out, principal_set(ring, g));
  }
  return out;
}

std::optional<std::size_t> Lattice::find(const ElementSet& members) const {
  auto it = index.find(members);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::vector<ElementSet> enumerate_ideal_sets(const Ring& ring) {
  const std::size_t n = ring.order();
  std::vector<ElementSet> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  auto add = [&](ElementSet s) {
    if (seen.emplace(s, found.size()).second) found.push_back(std::move(s));
  };
  ElementSet zero(n);
  zero.set(ring.zero());
  add(zero);
  for (std::size_t x = 0; x < n; ++x) add(principal_set(ring, static_cast<Elem>(x)));
  const std::size_t principal_count = found.size();
  // Every ideal is a finite sum of principal ideals, so joining each listed
  // ideal with every principal ideal reaches the whole lattice.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t p = 1; p < principal_count; ++p) {
      if (found[p].subset_of(found[i])) continue;
      add(sum_set(ring, found[i], found[p]));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const ElementSet& a, const ElementSet& b) { return canonical_order(a, b) < 0; });
  return found;
}

std::vector<Elem> generators_of(const Ring& ring, const ElementSet& ideal) {
  std::vector<Elem> gens;
  ElementSet span(ring.order());
  span.set(ring.zero());
  ideal.for_each([&](Elem x) {
    if (span.test(x)) return;
    gens.push_back(x);
    span = sum_set(ring, span, principal_set(ring, x));
  });
  return gens;
}

std::string ideal_label(const Ring& ring, const ElementSet& ideal) {
  std::string out = "<";
  bool first = true;
  for (Elem g : generators_of(ring, ideal)) {
    if (!first) out += ",";
    out += ring.element_label(g);
    first = false;
  }
  return out + ">";
}

namespace {

ElementSet power_radical(const Ring& ring, const ElementSet& ideal) {
  ElementSet out(ring.order());
  std::vector<bool> seen(ring.order());
  for (std::size_t x = 0; x < ring.order(); ++x) {
    std::fill(seen.begin(), seen.end(), false);
    Elem power = static_cast<Elem>(x);
    while (!seen[power]) {
      if (ideal.test(power)) {
        out.set(x);
        break;
      }
      seen[power] = true;
      power = ring.mul(power, static_cast<Elem>(x));
    }
  }
  return out;
}

std::shared_ptr<const Lattice> build_lattice(const Ring& ring, std::vector<ElementSet> ideals) {
  auto lat = std::make_shared<Lattice>();
  const std::size_t n = ring.order();
  lat->ideals = std::move(ideals);
  const std::size_t count = lat->ideals.size();
  lat->generators.reserve(count);
  lat->principal.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    lat->index.emplace(lat->ideals[i], i);
    lat->generators.push_back(generators_of(ring, lat->ideals[i]));
    lat->principal.push_back(lat->generators.back().size() <= 1);
  }
  // A listed ideal that needed several greedy generators may still be
  // principal; settle it against the principal ideals directly.
  for (std::size_t x = 0; x < n; ++x) {
    if (auto idx = lat->find(principal_set(ring, static_cast<Elem>(x)))) lat->principal[*idx] = true;
  }

  for (std::size_t i = 0; i < count; ++i) {
    if (lat->ideals[i].test(ring.one())) continue;
    bool is_max = true;
    for (std::size_t j = i + 1; j < count && is_max; ++j) {
      if (lat->ideals[j].test(ring.one())) continue;
      if (lat->ideals[j].count() > lat->ideals[i].count() && lat->ideals[i].subset_of(lat->ideals[j])) {
        is_max = false;
      }
    }
    if (is_max) lat->maximal.push_back(i);
  }
  lat->units = units(ring);
  lat->jacobson = ElementSet::full(n);
  for (std::size_t m : lat->maximal) lat->jacobson &= lat->ideals[m];
  ElementSet zero(n);
  zero.set(ring.zero());
  lat->nilradical = power_radical(ring, zero);
  return lat;
}

}  // namespace

const Lattice& lattice(const Ring& ring) {
  std::call_once(ring.lattice_once_,
                 [&] { ring.lattice_ = build_lattice(ring, enumerate_ideal_sets(ring)); });
  return *ring.lattice_;
}

bool seed_lattice(const Ring& ring, std::vector<ElementSet> ideals) {
  bool installed = false;
  std::call_once(ring.lattice_once_, [&] {
    std::sort(ideals.begin(), ideals.end(),
              [](const ElementSet& a, const ElementSet& b) { return canonical_order(a, b) < 0; });
    ring.lattice_ = build_lattice(ring, std::move(ideals));
    installed = true;
  });
  return installed;
}

Ideal ideal_generated_by(const RingPtr& ring, std::span<const Elem> generators) {
  return Ideal::trusted(ring, generated_set(*ring, generators));
}

Ideal ideal_generated_by(const RingPtr& ring, std::initializer_list<Elem> generators) {
  return ideal_generated_by(ring, std::span<const Elem>(generators.begin(), generators.size()));
}

std::vector<Ideal> all_ideals(const RingPtr& ring) {
  std::vector<Ideal> out;
  for (const auto& s : lattice(*ring).ideals) out.push_back(Ideal::trusted(ring, s));
  return out;
}

std::vector<Ideal> maximal_ideals(const RingPtr& ring) {
  const Lattice& lat = lattice(*ring);
  std::vector<Ideal> out;
  for (std::size_t m : lat.maximal) out.push_back(Ideal::trusted(ring, lat.ideals[m]));
  return out;
}

namespace {

void require_proper(const Ideal& ideal, const char* op) {
  if (!ideal.is_proper()) {
    throw Error(ErrorKind::improper_ideal, std::string(op) + " needs a proper ideal");
  }
}

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring_ptr() != b.ring_ptr()) {
    throw Error(ErrorKind::ring_mismatch, "ideals belong to different rings");
  }
}

}  // namespace

Ideal j_of_ideal(const Ideal& ideal) {
  require_proper(ideal, "J(I)");
  const Lattice& lat = lattice(ideal.ring());
  ElementSet out = ideal.ring().all();
  for (std::size_t m : lat.maximal) {
    if (ideal.members().subset_of(lat.ideals[m])) out &= lat.ideals[m];
  }
  return Ideal::trusted(ideal.ring_ptr(), std::move(out));
}

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return Ideal::trusted(a.ring_ptr(), sum_set(a.ring(), a.members(), b.members()));
}

Ideal product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const Ring& ring = a.ring();
  // Products of generators generate the product ideal.
  std::vector<Elem> ga = generators_of(ring, a.members());
  std::vector<Elem> gb = generators_of(ring, b.members());
  std::vector<Elem> prods;
  for (Elem x : ga) {
    for (Elem y : gb) prods.push_back(ring.mul(x, y));
  }
  return Ideal::trusted(a.ring_ptr(), generated_set(ring, prods));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return Ideal::trusted(a.ring_ptr(), a.members() & b.members());
}

Ideal residual(const Ideal& ideal, const ElementSet& subset) {
  if (subset.empty()) throw Error(ErrorKind::empty_set, "(I : S) needs a nonempty S");
  const Ring& ring = ideal.ring();
  const auto& k = kernels::active();
  ElementSet out = ring.all();
  ElementSet hits(ring.order());
  subset.for_each([&](Elem s) {
    k.row_preimage(ring.mul_row(s), ring.order(), ideal.members().data(), hits.data());
    out &= hits;
  });
  return Ideal::trusted(ideal.ring_ptr(), std::move(out));
}

Ideal annihilator(const RingPtr& ring, const ElementSet& subset) {
  return residual(Ideal::zero(ring), subset);
}

Ideal radical(const Ideal& ideal) {
  return Ideal::trusted(ideal.ring_ptr(), power_radical(ideal.ring(), ideal.members()));
}

ElementSet zi_set(const Ideal& ideal) {
  require_proper(ideal, "Z_I(R)");
  const Ring& ring = ideal.ring();
  const auto& k = kernels::active();
  const ElementSet outside = ideal.members().complement();
  ElementSet out(ring.order());
  ElementSet hits(ring.order());
  for (std::size_t r = 0; r < ring.order(); ++r) {
    k.row_preimage(ring.mul_row(static_cast<Elem>(r)), ring.order(), ideal.members().data(), hits.data());
    if (!hits.disjoint_from(outside)) out.set(r);
  }
  return out;
}

}  // namespace idealforge
