#include "idealforge/classifier.hpp"

#include <algorithm>

#include "idealforge/error.hpp"

namespace idealforge {

namespace {

void require_proper(const Ideal& ideal, std::string_view what) {
  if (!ideal.is_proper()) {
    throw Error(ErrorKind::improper_ideal, std::string(what) + " is defined for proper ideals only");
  }
}

// First a in `candidates` (ascending) whose `bad(a)` set is nonempty gives
// the witness (a, least b).
template <class Bad>
PredicateVerdict pair_scan(std::string_view name, const ElementSet& candidates, Bad&& bad) {
  PredicateVerdict v{std::string(name), true, {}};
  for (auto a = candidates.first(); a; a = candidates.next(*a + 1)) {
    const ElementSet b = bad(*a);
    if (auto first = b.first()) {
      v.holds = false;
      v.witness = {*a, *first};
      return v;
    }
  }
  return v;
}

PredicateVerdict j_scan(std::string_view name, const Ring& r, const ElementSet& members, bool weak) {
  const Lattice& lat = lattice(r);
  const ElementSet outside = members.complement();
  return pair_scan(name, lat.jacobson.complement(), [&](Elem a) {
    ElementSet b = mul_preimage(r, a, members) & outside;
    if (weak) b -= zero_products(r, a);
    return b;
  });
}

}  // namespace

PredicateVerdict is_weakly_j_ideal(const Ideal& ideal) {
  require_proper(ideal, "weakly J-ideal");
  return j_scan(predicate::weakly_j, ideal.ring(), ideal.members(), true);
}

PredicateVerdict is_j_ideal(const Ideal& ideal) {
  require_proper(ideal, "J-ideal");
  return j_scan(predicate::j, ideal.ring(), ideal.members(), false);
}

PredicateVerdict is_quasi_j_ideal(const Ideal& ideal) {
  require_proper(ideal, "quasi J-ideal");
  return j_scan(predicate::quasi_j, ideal.ring(), radical(ideal).members(), false);
}

PredicateVerdict is_weakly_prime(const Ideal& ideal) {
  require_proper(ideal, "weakly prime ideal");
  const Ring& r = ideal.ring();
  const ElementSet outside = ideal.members().complement();
  return pair_scan(predicate::weakly_prime, outside, [&](Elem a) {
    return (mul_preimage(r, a, ideal.members()) & outside) - zero_products(r, a);
  });
}

PredicateVerdict is_prime(const Ideal& ideal) {
  require_proper(ideal, "prime ideal");
  const Ring& r = ideal.ring();
  const ElementSet outside = ideal.members().complement();
  return pair_scan(predicate::prime, outside,
                   [&](Elem a) { return mul_preimage(r, a, ideal.members()) & outside; });
}

PredicateVerdict is_n_ideal(const Ideal& ideal) {
  require_proper(ideal, "n-ideal");
  const Ring& r = ideal.ring();
  const ElementSet outside = ideal.members().complement();
  return pair_scan(predicate::n_ideal, lattice(r).nilradical.complement(),
                   [&](Elem a) { return mul_preimage(r, a, ideal.members()) & outside; });
}

PredicateVerdict is_superfluous(const Ideal& ideal) {
  require_proper(ideal, "superfluous ideal");
  const Ring& r = ideal.ring();
  const Lattice& lat = lattice(r);
  PredicateVerdict v{std::string(predicate::superfluous), true, {}};
  for (std::size_t k = 0; k + 1 < lat.size(); ++k) {
    if (sum_set(r, ideal.members(), lat.ideals[k]).is_full()) {
      v.holds = false;
      v.witness = lat.generators[k];
      break;
    }
  }
  return v;
}

StrongZeroDivisors strong_zero_divisors(const Ideal& ideal) {
  require_proper(ideal, "SZ(R/I)");
  QuotientRing q = quotient_ring(ideal);
  ElementSet cosets(q.ring->order());
  const Ring& r = ideal.ring();
  const ElementSet outside = ideal.members().complement();
  for (std::size_t a = 0; a < r.order(); ++a) {
    const auto ea = static_cast<Elem>(a);
    if (cosets.test(q.projection(ea))) continue;
    const ElementSet b = (mul_preimage(r, ea, ideal.members()) & outside) - zero_products(r, ea);
    if (!b.empty()) cosets.set(q.projection(ea));
  }
  return StrongZeroDivisors{std::move(q), std::move(cosets)};
}

PredicateVerdict is_s_presimplifiable_quotient(const Ideal& ideal) {
  const StrongZeroDivisors sz = strong_zero_divisors(ideal);
  const ElementSet& jq = lattice(*sz.quotient.ring).jacobson;
  const Ring& r = ideal.ring();
  const ElementSet outside = ideal.members().complement();
  ElementSet candidates = r.all();
  for (std::size_t a = 0; a < r.order(); ++a) {
    if (jq.test(sz.quotient.projection(static_cast<Elem>(a)))) candidates.reset(a);
  }
  return pair_scan(predicate::s_presimplifiable, candidates, [&](Elem a) {
    return (mul_preimage(r, a, ideal.members()) & outside) - zero_products(r, a);
  });
}

PredicateVerdict is_weakly_j_mult_closed(const MultSet& set) {
  const Ring& r = *set.ring;
  const ElementSet outside_j = lattice(r).jacobson.complement();
  if (!outside_j.subset_of(set.members)) {
    const Elem x = *(outside_j - set.members).first();
    throw Error(ErrorKind::definition_precondition, "R - J(R) must be contained in S", "R-minus-J-in-S",
                {x});
  }
  const ElementSet outside_s = set.members.complement();
  return pair_scan(predicate::weakly_j_mult_closed, outside_j, [&](Elem a) {
    return (mul_preimage(r, a, outside_s) & set.members) - zero_products(r, a);
  });
}

bool replay(const PredicateVerdict& v, const Ideal& ideal) {
  if (v.holds) return v.witness.empty();
  const Ring& r = ideal.ring();
  const Lattice& lat = lattice(r);
  const ElementSet& in = ideal.members();
  if (v.predicate == predicate::superfluous) {
    const ElementSet k = generated_set(r, v.witness);
    return !k.is_full() && sum_set(r, in, k).is_full();
  }
  if (v.witness.size() == 1 && v.predicate == predicate::weakly_j_mult_closed) {
    const Elem x = v.witness[0];
    return x < r.order() && !lat.jacobson.test(x) && in.test(x);
  }
  if (v.witness.size() != 2 || v.witness[0] >= r.order() || v.witness[1] >= r.order()) return false;
  const Elem a = v.witness[0];
  const Elem b = v.witness[1];
  const Elem ab = r.mul(a, b);
  const bool nonzero = ab != r.zero();
  if (v.predicate == predicate::weakly_j) return nonzero && in.test(ab) && !lat.jacobson.test(a) && !in.test(b);
  if (v.predicate == predicate::j) return in.test(ab) && !lat.jacobson.test(a) && !in.test(b);
  if (v.predicate == predicate::quasi_j) {
    const ElementSet rad = radical(ideal).members();
    return rad.test(ab) && !lat.jacobson.test(a) && !rad.test(b);
  }
  if (v.predicate == predicate::weakly_prime) return nonzero && in.test(ab) && !in.test(a) && !in.test(b);
  if (v.predicate == predicate::prime) return in.test(ab) && !in.test(a) && !in.test(b);
  if (v.predicate == predicate::n_ideal) return in.test(ab) && !lat.nilradical.test(a) && !in.test(b);
  if (v.predicate == predicate::s_presimplifiable) {
    const QuotientRing q = quotient_ring(ideal);
    return nonzero && in.test(ab) && !in.test(b) && !lattice(*q.ring).jacobson.test(q.projection(a));
  }
  if (v.predicate == predicate::weakly_j_mult_closed) {
    // S = R - I.
    return !lat.jacobson.test(a) && !in.test(b) && nonzero && in.test(ab);
  }
  return false;
}

bool replay(const PredicateVerdict& v, const MultSet& set) {
  if (v.predicate != predicate::weakly_j_mult_closed) return false;
  if (v.holds) return v.witness.empty();
  const Ring& r = *set.ring;
  const ElementSet& jr = lattice(r).jacobson;
  if (v.witness.size() == 1) return v.witness[0] < r.order() && !jr.test(v.witness[0]) && !set.contains(v.witness[0]);
  if (v.witness.size() != 2 || v.witness[0] >= r.order() || v.witness[1] >= r.order()) return false;
  const Elem ab = r.mul(v.witness[0], v.witness[1]);
  return !jr.test(v.witness[0]) && set.contains(v.witness[1]) && !set.contains(ab) && ab != r.zero();
}

const PredicateVerdict& IdealReport::operator[](std::string_view name) const {
  auto it = std::find_if(verdicts.begin(), verdicts.end(), [&](const auto& v) { return v.predicate == name; });
  if (it == verdicts.end()) throw Error(ErrorKind::evaluation_error, "no predicate named " + std::string(name));
  return *it;
}

IdealReport ideal_report(const Ideal& ideal) {
  require_proper(ideal, "ideal report");
  const Ring& r = ideal.ring();
  const Lattice& lat = lattice(r);
  IdealReport out;
  out.verdicts.push_back(is_weakly_j_ideal(ideal));
  out.verdicts.push_back(is_j_ideal(ideal));
  out.verdicts.push_back(is_quasi_j_ideal(ideal));
  out.verdicts.push_back(is_weakly_prime(ideal));
  out.verdicts.push_back(is_prime(ideal));
  out.verdicts.push_back(is_n_ideal(ideal));
  out.verdicts.push_back(is_superfluous(ideal));
  out.verdicts.push_back(is_s_presimplifiable_quotient(ideal));
  MultSet complement{ideal.ring_ptr(), ideal.members().complement()};
  try {
    out.verdicts.push_back(is_weakly_j_mult_closed(complement));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::definition_precondition) throw;
    out.verdicts.push_back(PredicateVerdict{std::string(predicate::weakly_j_mult_closed), false,
                                            {static_cast<Elem>(e.witness().front())}});
  }
  out.in_jacobson = ideal.members().subset_of(lat.jacobson);
  out.in_nilradical = ideal.members().subset_of(lat.nilradical);
  out.square_zero = product(ideal, ideal).is_zero();
  return out;
}

}  // namespace idealforge
