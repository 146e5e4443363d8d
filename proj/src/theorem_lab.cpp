#include "idealforge/theorem_lab.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "idealforge/error.hpp"

namespace idealforge {

namespace {

const std::vector<TheoremInfo> kCatalog = {
    {"T-QUASI", "quasi-local <=> every proper ideal J <=> quasi J <=> weakly J <=> every proper principal ideal weakly J", "any"},
    {"P-JR", "weakly J <=> I in J(R) and (0 != ab in I => a in J(I) or b in I)", "any"},
    {"T-SQ", "weakly J and not J => I^2 = 0 and I in N(R)", "any"},
    {"C-NAK", "weakly J and not J, IM = M => M = 0", "any"},
    {"T-EQ", "five characterizations of weakly J agree: scan, (I:a) = I u (0:a), (I:a) in J(R) u (0:a), Ka, KL", "any"},
    {"P-QUOT", "I and (0:S) weakly J, S not in I => (I:S) weakly J", "any"},
    {"P-WP", "weakly prime and I in J(R) => weakly J", "any"},
    {"C-WP2", "maximal with I and every (0:a), a outside I, weakly J => weakly prime", "any"},
    {"P-INT", "intersection of weakly J ideals is weakly J", "any"},
    {"P-SUM", "sum of weakly J ideals is weakly J", "any"},
    {"P-CART", "in R1 x R2, nonzero I: weakly J <=> I1 x R2 or R1 x I2 with a J-ideal factor <=> J", "product"},
    {"P-LOC", "J(S^-1 R) = S^-1 J(R): weakly J and I n S empty => S^-1 I weakly J; converse under the zero-divisor conditions", "any"},
    {"P-HOM", "mono f: f^-1(I2) weakly J; epi f with Ker f in I1: f(I1) weakly J", "any"},
    {"C-QUO", "K in I: I weakly J => I/K weakly J; K J and I/K weakly J => I J; K weakly J and I/K weakly J => I weakly J", "any"},
    {"P-PRES", "presimplifiable R: weakly J => J", "any"},
    {"C-PRE", "presimplifiable R, I weakly J => R/I presimplifiable", "any"},
    {"P-QPRES", "quasi presimplifiable R, I weakly J => R/I quasi presimplifiable", "any"},
    {"L-QP", "quasi J <=> I in J(R) and R/I quasi presimplifiable", "any"},
    {"T-SPRES", "nonzero I: weakly J <=> I in J(R) and R/I S-presimplifiable", "any"},
    {"L-SUP", "weakly J => superfluous", "any"},
    {"P-MC", "weakly J <=> R - I weakly J-multiplicatively closed", "any"},
    {"P-MAXS", "S weakly J-mult closed missing every (0:a), a outside J(R); I maximal disjoint from S => weakly J", "any"},
    {"T-IDL", "I(+)N weakly J => I weakly J; I(+)M weakly J <=> I weakly J and annihilator condition", "idealization"},
    {"L-MAX", "Max(R join J) = {M join J} u {Q-bar : J not in Q}; J in J(S) => J(R join J) = J(R) join J", "amalgamation"},
    {"P-PP", "R quasi-local, J in J(S) => every proper ideal of R join J is J", "amalgamation"},
    {"T-AML-I", "I join J J => I J; I join J weakly J => I weakly J and product condition; converses when J in J(S)", "amalgamation"},
    {"C-CJ", "J in J(S): J-ideals containing 0 x J are exactly I join J with I a J-ideal", "amalgamation"},
    {"T-AML-K", "J maximal, f epi: K-bar (weakly) J => K (weakly) J with product condition; converses when f(J(R)) = J(S)+J and Ker f in J(R)", "amalgamation"},
    {"C-12", "duplication along maximal J: K-bar (weakly) J => K (weakly) J; converses when J in J(R)", "duplication"},
    {"P-13", "f(I)J in T in J: I join T weakly J => I weakly J", "amalgamation"},
};

enum class Outcome { vacuous, pass, fail, guard_outside };

WitnessPart ideal_part(std::string role, const RingPtr& ring, const ElementSet& set) {
  return WitnessPart{std::move(role), ring, generators_of(*ring, set), true};
}

WitnessPart elem_part(std::string role, const RingPtr& ring, std::vector<Elem> elems) {
  return WitnessPart{std::move(role), ring, std::move(elems), false};
}

std::string flags(std::initializer_list<bool> values) {
  std::string s;
  for (bool v : values) s += v ? '1' : '0';
  return s;
}

// Contexts for rings met along the way (quotients, factors, bases). The
// subject's own context is returned for the subject ring.
class AuxPool {
 public:
  explicit AuxPool(RingContext& main) : main_(main) {}

  RingContext& of(const RingPtr& ring) {
    if (ring == main_.ring_ptr()) return main_;
    auto it = pool_.find(ring.get());
    if (it != pool_.end()) return it->second->ctx;
    auto aux = std::make_unique<Aux>(ring);
    RingContext& ctx = aux->ctx;
    pool_.emplace(ring.get(), std::move(aux));
    return ctx;
  }

  // Reuses an equal ring's lattice so repeated isomorphic constructions do
  // not re-enumerate.
  void share_lattice(const RingPtr& ring) {
    auto [it, inserted] = by_hash_.emplace(ring->content_hash(), ring);
    if (inserted || it->second == ring) return;
    const Ring& other = *it->second;
    if (other.order() == ring->order() && std::equal(other.add_table().begin(), other.add_table().end(),
                                                     ring->add_table().begin()) &&
        std::equal(other.mul_table().begin(), other.mul_table().end(), ring->mul_table().begin())) {
      seed_lattice(*ring, lattice(other).ideals);
    }
  }

  bool wj(const RingPtr& ring, const ElementSet& set) {
    RingContext& c = of(ring);
    return c.weakly_j(c.index_of(set));
  }
  bool j(const RingPtr& ring, const ElementSet& set) {
    RingContext& c = of(ring);
    return c.j(c.index_of(set));
  }

 private:
  struct Aux {
    explicit Aux(RingPtr r) : subject{r->label(), r, {}, {}, {}}, ctx(subject) {}
    Subject subject;
    RingContext ctx;
  };
  RingContext& main_;
  std::unordered_map<const Ring*, std::unique_ptr<Aux>> pool_;
  std::unordered_map<std::uint64_t, RingPtr> by_hash_;
};

struct Env {
  RingContext& ctx;
  AuxPool& aux;
  const std::vector<ElementSet>& scope;
  TheoremVerdict& v;

  const Subject& subject() const { return ctx.subject(); }
  const RingPtr& rp() const { return ctx.ring_ptr(); }

  bool in_scope(std::size_t idx) const {
    if (scope.empty()) return true;
    return std::find(scope.begin(), scope.end(), ctx.set(idx)) != scope.end();
  }

  template <class Describe>
  void record(Outcome o, Describe&& describe) {
    ++v.checked;
    if (o == Outcome::pass || o == Outcome::fail) ++v.nonvacuous;
    if (o == Outcome::fail) {
      ++v.failures;
      if (!v.witness || v.failures == 1) v.witness = describe();
    } else if (o == Outcome::guard_outside) {
      ++v.guard_outside;
      if (!v.witness) v.witness = describe();
    }
  }

  template <class Describe>
  void implication(bool hyp, bool concl, Describe&& d) {
    record(!hyp ? Outcome::vacuous : concl ? Outcome::pass : Outcome::fail, d);
  }

  template <class Describe>
  void equivalence(bool lhs, bool rhs, Describe&& d) {
    record(lhs == rhs ? Outcome::pass : Outcome::fail, d);
  }

  // A converse that the theorem only claims under `guard`.
  template <class Describe>
  void guarded(bool guard, bool hyp, bool concl, Describe&& d) {
    if (!hyp || (!guard && concl)) {
      record(Outcome::vacuous, d);
    } else if (guard) {
      record(concl ? Outcome::pass : Outcome::fail, d);
    } else {
      record(Outcome::guard_outside, d);
    }
  }

  Witness on_ideal(std::string note, std::size_t i) const {
    Witness w{std::move(note), {ideal_part("I", rp(), ctx.set(i))}, ctx.set(i)};
    return w;
  }
};

std::vector<std::size_t> proper_in_scope(const Env& e) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < e.ctx.whole(); ++i) {
    if (e.in_scope(i)) out.push_back(i);
  }
  return out;
}

// ----- ring-level and single-ideal statements ------------------------------

void t_quasi(Env& e) {
  RingContext& c = e.ctx;
  bool c2 = true, c3 = true, c4 = true, c5 = true;
  std::optional<std::size_t> bad;
  for (std::size_t i = 0; i < c.whole(); ++i) {
    const bool wj = c.weakly_j(i);
    const bool j = c.j(i);
    const bool qj = c.quasi_j(i);
    if (!j || !qj || !wj) bad = bad ? bad : std::optional<std::size_t>(i);
    c2 = c2 && j;
    c3 = c3 && qj;
    c4 = c4 && wj;
    if (c.lat().principal[i]) c5 = c5 && wj;
  }
  const bool c1 = c.quasi_local();
  const bool agree = c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5;
  e.record(agree ? Outcome::pass : Outcome::fail, [&] {
    Witness w{"clauses 1-5 = " + flags({c1, c2, c3, c4, c5}), {}, std::nullopt};
    if (bad) w.parts.push_back(ideal_part("I", e.rp(), c.set(*bad)));
    return w;
  });
}

ElementSet j_of(const RingContext& c, const ElementSet& members) {
  ElementSet out = c.ring().all();
  for (std::size_t m : c.lat().maximal) {
    if (members.subset_of(c.set(m))) out &= c.set(m);
  }
  return out;
}

void p_jr(Env& e) {
  RingContext& c = e.ctx;
  const Ring& r = c.ring();
  for (std::size_t i : proper_in_scope(e)) {
    const ElementSet& in = c.set(i);
    const ElementSet ji = j_of(c, in);
    bool rhs = c.in_jacobson(i);
    for (std::size_t a = 0; a < r.order() && rhs; ++a) {
      if (ji.test(a)) continue;
      const auto ea = static_cast<Elem>(a);
      rhs = ((mul_preimage(r, ea, in) - in) - zero_products(r, ea)).empty();
    }
    const bool lhs = c.weakly_j(i);
    e.equivalence(lhs, rhs, [&] { return e.on_ideal("weaklyJ=" + flags({lhs}) + " clause2=" + flags({rhs}), i); });
  }
}

void t_sq(Env& e) {
  RingContext& c = e.ctx;
  for (std::size_t i : proper_in_scope(e)) {
    const bool hyp = c.weakly_j(i) && !c.j(i);
    const bool sq = hyp && c.product_is_zero(i, i);
    const bool nil = hyp && c.in_nilradical(i);
    e.implication(hyp, sq && nil, [&] { return e.on_ideal("I^2=0:" + flags({sq}) + " I<=N:" + flags({nil}), i); });
  }
}

void c_nak(Env& e) {
  RingContext& c = e.ctx;
  std::vector<ModulePtr> quotients(c.size());
  for (std::size_t i : proper_in_scope(e)) {
    const bool hyp = c.weakly_j(i) && !c.j(i);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (!hyp) {
        e.record(Outcome::vacuous, [] { return Witness{}; });
        continue;
      }
      if (!quotients[k]) quotients[k] = quotient_module(c.ideal(k));
      const ModuleTable& m = *quotients[k];
      const bool im_is_m = ideal_times_module(c.ideal(i), m).is_full();
      e.implication(im_is_m, m.order() == 1, [&] {
        Witness w = e.on_ideal("IM = M for M = R/K but M != 0", i);
        w.parts.push_back(ideal_part("K", e.rp(), c.set(k)));
        return w;
      });
    }
  }
  if (const auto& idl = e.subject().idealization; idl && e.scope.empty()) {
    RingContext& base = e.aux.of(idl->base);
    for (std::size_t i = 0; i < base.whole(); ++i) {
      const bool hyp = base.weakly_j(i) && !base.j(i);
      const bool im_is_m = hyp && ideal_times_module(base.ideal(i), *idl->module).is_full();
      e.implication(hyp && im_is_m, idl->module->order() == 1, [&] {
        return Witness{"IM = M for the idealized module but M != 0", {ideal_part("I", idl->base, base.set(i))},
                       std::nullopt};
      });
    }
  }
}

void t_eq(Env& e) {
  RingContext& c = e.ctx;
  const Ring& r = c.ring();
  const std::size_t n = r.order();
  const Lattice& lat = c.lat();
  const ElementSet& jr = lat.jacobson;

  // Ka for K outside J(R), and KL for K outside J(R) and every L.
  std::vector<std::size_t> wide;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!lat.ideals[k].subset_of(jr)) wide.push_back(k);
  }
  std::vector<std::vector<ElementSet>> ka(wide.size());
  std::vector<std::vector<char>> ka_nonzero(wide.size());
  for (std::size_t w = 0; w < wide.size(); ++w) {
    ka[w].reserve(n);
    for (std::size_t a = 0; a < n; ++a) {
      ElementSet s(n);
      lat.ideals[wide[w]].for_each([&](Elem x) { s.set(r.mul(x, static_cast<Elem>(a))); });
      ka_nonzero[w].push_back(s.count() > 1);
      ka[w].push_back(std::move(s));
    }
  }
  std::vector<ElementSet> principal;
  principal.reserve(n);
  for (std::size_t x = 0; x < n; ++x) principal.push_back(principal_set(r, static_cast<Elem>(x)));
  std::vector<std::vector<std::size_t>> kl(wide.size(), std::vector<std::size_t>(c.size()));
  for (std::size_t w = 0; w < wide.size(); ++w) {
    for (std::size_t l = 0; l < c.size(); ++l) {
      ElementSet s(n);
      s.set(r.zero());
      for (Elem x : lat.generators[wide[w]]) {
        for (Elem y : lat.generators[l]) {
          const Elem p = r.mul(x, y);
          if (!s.test(p)) s = sum_set(r, s, principal[p]);
        }
      }
      kl[w][l] = c.index_of(s);
    }
  }

  for (std::size_t i : proper_in_scope(e)) {
    const ElementSet& in = c.set(i);
    const bool c1 = c.weakly_j(i);
    bool c2 = true, c3 = true;
    for (std::size_t a = 0; a < n; ++a) {
      const auto ea = static_cast<Elem>(a);
      if (jr.test(a) && in.test(a)) continue;
      const ElementSet res = mul_preimage(r, ea, in);
      const ElementSet ann = zero_products(r, ea);
      if (!jr.test(a) && !(res == (in | ann))) c2 = false;
      if (!in.test(a) && !res.subset_of(jr | ann)) c3 = false;
    }
    bool c4 = true;
    for (std::size_t w = 0; w < wide.size() && c4; ++w) {
      for (std::size_t a = 0; a < n && c4; ++a) {
        if (in.test(a)) continue;
        if (ka_nonzero[w][a] && ka[w][a].subset_of(in)) c4 = false;
      }
    }
    bool c5 = true;
    for (std::size_t w = 0; w < wide.size() && c5; ++w) {
      for (std::size_t l = 0; l < c.size() && c5; ++l) {
        if (lat.ideals[l].subset_of(in)) continue;
        const std::size_t p = kl[w][l];
        if (p != 0 && lat.ideals[p].subset_of(in)) c5 = false;
      }
    }
    const bool agree = c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5;
    e.record(agree ? Outcome::pass : Outcome::fail,
             [&] { return e.on_ideal("clauses 1-5 = " + flags({c1, c2, c3, c4, c5}), i); });
  }
}

void p_quot(Env& e) {
  RingContext& c = e.ctx;
  const Ring& r = c.ring();
  const std::size_t n = r.order();
  for (std::size_t i : proper_in_scope(e)) {
    const bool wj_i = c.weakly_j(i);
    auto check = [&](const ElementSet& s, const std::string& what) {
      if (!wj_i || s.subset_of(c.set(i))) {
        e.record(Outcome::vacuous, [] { return Witness{}; });
        return;
      }
      const std::size_t ann = c.index_of(residual(Ideal::zero(e.rp()), s).members());
      const bool hyp = c.weakly_j(ann);
      const std::size_t res = c.index_of(residual(c.ideal(i), s).members());
      e.implication(hyp, c.weakly_j(res), [&] {
        Witness w = e.on_ideal("(I:S) not weakly J for S = " + what, i);
        w.parts.push_back(elem_part("S", e.rp(), s.members()));
        return w;
      });
    };
    for (std::size_t a = 0; a < n; ++a) check(ElementSet(n, {static_cast<Elem>(a)}), "{a}");
    for (std::size_t k = 0; k < c.size(); ++k) check(c.set(k), "an ideal");
  }
}

void p_wp(Env& e) {
  RingContext& c = e.ctx;
  for (std::size_t i : proper_in_scope(e)) {
    e.implication(c.weakly_prime(i) && c.in_jacobson(i), c.weakly_j(i),
                  [&] { return e.on_ideal("weakly prime inside J(R) but not weakly J", i); });
  }
}

void c_wp2(Env& e) {
  RingContext& c = e.ctx;
  const Ring& r = c.ring();
  std::vector<std::size_t> ann(r.order());
  for (std::size_t a = 0; a < r.order(); ++a) ann[a] = c.index_of(zero_products(r, static_cast<Elem>(a)));
  std::vector<char> phi(c.size(), 0);
  for (std::size_t i = 0; i < c.whole(); ++i) {
    bool ok = c.weakly_j(i);
    for (std::size_t a = 0; a < r.order() && ok; ++a) {
      if (!c.set(i).test(a)) ok = c.weakly_j(ann[a]);
    }
    phi[i] = ok;
  }
  for (std::size_t i : proper_in_scope(e)) {
    bool maximal = phi[i];
    for (std::size_t j = 0; j < c.whole() && maximal; ++j) {
      if (j != i && phi[j] && c.set(i).subset_of(c.set(j))) maximal = false;
    }
    e.implication(maximal, c.weakly_prime(i), [&] { return e.on_ideal("maximal for the property, not weakly prime", i); });
  }
}

template <class Op>
void pair_closure(Env& e, Op op, const char* what) {
  RingContext& c = e.ctx;
  for (std::size_t i : proper_in_scope(e)) {
    for (std::size_t j = 0; j < c.whole(); ++j) {
      const bool hyp = c.weakly_j(i) && c.weakly_j(j);
      const std::size_t k = hyp ? op(c, i, j) : 0;
      e.implication(hyp, hyp && c.weakly_j(k), [&] {
        Witness w = e.on_ideal(std::string(what) + " of weakly J ideals is not weakly J", i);
        w.parts.push_back(ideal_part("I2", e.rp(), c.set(j)));
        return w;
      });
    }
  }
}

void p_int(Env& e) {
  pair_closure(e, [](RingContext& c, std::size_t a, std::size_t b) { return c.meet(a, b); }, "intersection");
}

void p_sum(Env& e) {
  pair_closure(e, [](RingContext& c, std::size_t a, std::size_t b) { return c.sum(a, b); }, "sum");
}

void p_cart(Env& e) {
  RingContext& c = e.ctx;
  const ProductRing& p = *e.subject().product;
  const RingPtr& r1 = p.first.target();
  const RingPtr& r2 = p.second.target();
  for (std::size_t i : proper_in_scope(e)) {
    if (i == c.zero_index()) continue;
    const ElementSet i1 = p.first.image_of(c.set(i));
    const ElementSet i2 = p.second.image_of(c.set(i));
    const bool c2 = (i2.is_full() && !i1.is_full() && e.aux.j(r1, i1)) ||
                    (i1.is_full() && !i2.is_full() && e.aux.j(r2, i2));
    const bool c1 = c.weakly_j(i);
    const bool c3 = c.j(i);
    e.record(c1 == c2 && c2 == c3 ? Outcome::pass : Outcome::fail,
             [&] { return e.on_ideal("clauses 1-3 = " + flags({c1, c2, c3}), i); });
  }
}

std::vector<ElementSet> mult_closed_sets(const Ring& r, std::size_t seed_cap) {
  const std::size_t n = r.order();
  std::vector<ElementSet> out;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  auto close = [&](std::initializer_list<Elem> gens) {
    ElementSet s(n);
    s.set(r.one());
    for (Elem g : gens) {
      bool grew = true;
      while (grew) {
        grew = false;
        for (Elem x : s.members()) {
          const Elem y = r.mul(x, g);
          if (!s.test(y)) {
            s.set(y);
            grew = true;
          }
        }
      }
    }
    // Products of powers of two generators are already products of members.
    if (s.test(r.zero())) return;
    if (seen.insert(s).second) out.push_back(std::move(s));
  };
  std::size_t seeds = 0;
  close({});
  for (std::size_t a = 0; a < n && seeds < seed_cap; ++a, ++seeds) close({static_cast<Elem>(a)});
  for (std::size_t a = 0; a < n && seeds < seed_cap; ++a) {
    for (std::size_t b = a + 1; b < n && seeds < seed_cap; ++b, ++seeds) {
      close({static_cast<Elem>(a), static_cast<Elem>(b)});
    }
  }
  return out;
}

void p_loc(Env& e) {
  RingContext& c = e.ctx;
  const Ring& r = c.ring();
  const ElementSet zr = zero_divisors(r);
  const ElementSet& jr = c.lat().jacobson;
  const ElementSet z_j = zi_set(Ideal::trusted(e.rp(), jr));
  for (const ElementSet& s : mult_closed_sets(r, 4096)) {
    const Localization loc = localization(MultSet{e.rp(), s});
    e.aux.share_lattice(loc.ring);
    const bool hyp = extend_ideal(loc, Ideal::trusted(e.rp(), jr)).members() == lattice(*loc.ring).jacobson;
    const bool s_regular = s.disjoint_from(zr) && s.disjoint_from(z_j);
    for (std::size_t i : proper_in_scope(e)) {
      const ElementSet ext = extend_ideal(loc, c.ideal(i)).members();
      const bool ext_wj = !ext.is_full() && e.aux.wj(loc.ring, ext);
      auto describe = [&](const char* note) {
        return [&, note] {
          Witness w = e.on_ideal(note, i);
          w.parts.push_back(elem_part("S", e.rp(), s.members()));
          return w;
        };
      };
      e.implication(hyp && c.weakly_j(i) && c.set(i).disjoint_from(s), ext_wj,
                    describe("I weakly J missing S, S^-1 I not weakly J"));
      const bool regular = s_regular && s.disjoint_from(zi_set(c.ideal(i)));
      e.implication(hyp && ext_wj && regular, c.weakly_j(i), describe("S^-1 I weakly J, I not weakly J"));
    }
  }
}

struct HomCase {
  std::string name;
  RingHom hom;
  bool mono;
  bool epi;
};

std::vector<HomCase> homs_for(RingContext& c, const Subject& s) {
  std::vector<HomCase> out;
  out.push_back({"identity", identity_hom(s.ring), true, true});
  for (std::size_t k = 0; k < c.whole(); ++k) {
    out.push_back({"projection onto R/K", c.quotient(k).projection, k == c.zero_index(), true});
  }
  if (s.product) {
    out.push_back({"first projection", s.product->first, false, true});
    out.push_back({"second projection", s.product->second, false, true});
    const auto m1 = s.product->first.target()->zn_modulus();
    const auto m2 = s.product->second.target()->zn_modulus();
    if (m1 && m2) {
      const unsigned l = std::lcm(*m1, *m2);
      if (l <= default_caps().direct) {
        RingPtr zl = make_zn(l);
        std::vector<Elem> map(l);
        for (unsigned x = 0; x < l; ++x) map[x] = *s.ring->pair_index(x % *m1, x % *m2);
        RingHom f(zl, s.ring, std::move(map));
        out.push_back({"residues from Z" + std::to_string(l), f, f.is_mono(), f.is_epi()});
      }
    }
  }
  if (s.idealization) {
    const Idealization& idl = *s.idealization;
    out.push_back({"inclusion r -> (r,0)", idl.inclusion, true, idl.module->order() == 1});
    std::vector<Elem> proj(s.ring->order());
    for (std::size_t x = 0; x < proj.size(); ++x) proj[x] = s.ring->pairs()->coords[x].first;
    out.push_back({"projection (r,x) -> r", RingHom(s.ring, idl.base, std::move(proj)), idl.module->order() == 1,
                   true});
  }
  if (s.amalgamation) {
    const Amalgamation& am = *s.amalgamation;
    out.push_back({"projection onto R", am.base_projection, am.base_projection.is_mono(), true});
    if (am.ambient) out.push_back({"inclusion into R x S", am.inclusion, true, am.inclusion.is_epi()});
  }
  return out;
}

void p_hom(Env& e) {
  RingContext& c = e.ctx;
  for (const HomCase& h : homs_for(c, e.subject())) {
    RingContext& src = e.aux.of(h.hom.source());
    RingContext& dst = e.aux.of(h.hom.target());
    const bool src_is_subject = &src == &c;
    const ElementSet ker = h.hom.kernel();
    auto scoped = [&](std::size_t src_idx, std::size_t dst_idx) {
      return src_is_subject ? e.in_scope(src_idx) : (&dst == &c ? e.in_scope(dst_idx) : e.scope.empty());
    };
    auto describe = [&](const char* note, const RingPtr& ring, const ElementSet& set) {
      Witness w{std::string(note) + " (" + h.name + ")", {ideal_part("I", ring, set)}, std::nullopt};
      if (ring == e.rp()) w.scope = set;
      return w;
    };
    if (h.mono) {
      for (std::size_t i2 = 0; i2 < dst.whole(); ++i2) {
        const ElementSet pre = h.hom.preimage_of(dst.set(i2));
        const std::size_t i1 = src.index_of(pre);
        if (!scoped(i1, i2)) continue;
        e.implication(dst.weakly_j(i2), src.weakly_j(i1),
                      [&] { return describe("f^-1(I2) not weakly J", h.hom.target(), dst.set(i2)); });
      }
    }
    if (h.epi) {
      for (std::size_t i1 = 0; i1 < src.whole(); ++i1) {
        const bool hyp = src.weakly_j(i1) && ker.subset_of(src.set(i1));
        const std::size_t i2 = hyp ? dst.index_of(h.hom.image_of(src.set(i1))) : dst.whole();
        if (!scoped(i1, i2)) continue;
        e.implication(hyp, hyp && dst.weakly_j(i2),
                      [&] { return describe("f(I1) not weakly J", h.hom.source(), src.set(i1)); });
      }
    }
  }
}

void c_quo(Env& e) {
  RingContext& c = e.ctx;
  for (std::size_t k = 0; k < c.whole(); ++k) {
    for (std::size_t i : proper_in_scope(e)) {
      if (!c.set(k).subset_of(c.set(i))) continue;
      const QuotientRing& q = c.quotient(k);
      const bool quot_wj = e.aux.wj(q.ring, q.projection.image_of(c.set(i)));
      auto describe = [&](const char* note) {
        return [&, note] {
          Witness w = e.on_ideal(note, i);
          w.parts.push_back(ideal_part("K", e.rp(), c.set(k)));
          return w;
        };
      };
      e.implication(c.weakly_j(i), quot_wj, describe("clause 1: I/K not weakly J"));
      e.implication(c.j(k) && quot_wj, c.j(i), describe("clause 2: I not J"));
      e.implication(c.weakly_j(k) && quot_wj, c.weakly_j(i), describe("clause 3: I not weakly J"));
    }
  }
}

void p_pres(Env& e) {
  RingContext& c = e.ctx;
  for (std::size_t i : proper_in_scope(e)) {
    e.implication(c.presimplifiable() && c.weakly_j(i), c.j(i),
                  [&] { return e.on_ideal("presimplifiable ring, weakly J but not J", i); });
  }
}

void c_pre(Env& e) {
  RingContext& c = e.ctx;
  for (std::size_t i : proper_in_scope(e)) {
    const bool hyp = c.presimplifiable() && c.weakly_j(i);
    e.implication(hyp, hyp && e.aux.of(c.quotient(i).ring).presimplifiable(),
                  [&] { return e.on_ideal("R/I not presimplifiable", i); });
  }
}

void p_qpres(Env& e) {
  RingContext& c = e.ctx;
  for (std::size_t i : proper_in_scope(e)) {
    const bool hyp = c.quasi_presimplifiable() && c.weakly_j(i);
    e.implication(hyp, hyp && e.aux.of(c.quotient(i).ring).quasi_presimplifiable(),
                  [&] { return e.on_ideal("R/I not quasi presimplifiable", i); });
  }
}

void l_qp(Env& e) {
  RingContext& c = e.ctx;
  for (std::size_t i : proper_in_scope(e)) {
    const bool lhs = c.quasi_j(i);
    const bool rhs = c.in_jacobson(i) && e.aux.of(c.quotient(i).ring).quasi_presimplifiable();
    e.equivalence(lhs, rhs, [&] { return e.on_ideal("quasiJ=" + flags({lhs}) + " rhs=" + flags({rhs}), i); });
  }
}

void t_spres(Env& e) {
  RingContext& c = e.ctx;
  for (std::size_t i : proper_in_scope(e)) {
    if (i == c.zero_index()) continue;
    const bool lhs = c.weakly_j(i);
    const bool rhs = c.in_jacobson(i) && c.s_presimp(i);
    e.equivalence(lhs, rhs, [&] { return e.on_ideal("weaklyJ=" + flags({lhs}) + " rhs=" + flags({rhs}), i); });
  }
}

void l_sup(Env& e) {
  RingContext& c = e.ctx;
  for (std::size_t i : proper_in_scope(e)) {
    e.implication(c.weakly_j(i), c.superfluous(i), [&] { return e.on_ideal("weakly J but not superfluous", i); });
  }
}

bool mult_closed_holds(const RingPtr& r, const ElementSet& s) {
  try {
    return is_weakly_j_mult_closed(MultSet{r, s}).holds;
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::definition_precondition) throw;
    return false;
  }
}

void p_mc(Env& e) {
  RingContext& c = e.ctx;
  for (std::size_t i : proper_in_scope(e)) {
    const bool lhs = c.weakly_j(i);
    const bool rhs = mult_closed_holds(e.rp(), c.set(i).complement());
    e.equivalence(lhs, rhs, [&] { return e.on_ideal("weaklyJ=" + flags({lhs}) + " R-I=" + flags({rhs}), i); });
  }
}

void p_maxs(Env& e) {
  RingContext& c = e.ctx;
  const Ring& r = c.ring();
  const ElementSet& jr = c.lat().jacobson;
  ElementSet killed(r.order());
  for (std::size_t a = 0; a < r.order(); ++a) {
    if (!jr.test(a)) killed |= zero_products(r, static_cast<Elem>(a));
  }
  for (std::size_t k = 0; k < c.whole(); ++k) {
    if (!c.in_jacobson(k)) continue;
    const ElementSet s = c.set(k).complement();
    const bool hyp = mult_closed_holds(e.rp(), s) && s.disjoint_from(killed);
    for (std::size_t i : proper_in_scope(e)) {
      bool maximal = c.set(i).disjoint_from(s);
      for (std::size_t j = 0; j < c.whole() && maximal; ++j) {
        if (j != i && c.set(j).disjoint_from(s) && c.set(i).subset_of(c.set(j))) maximal = false;
      }
      e.implication(hyp && maximal, c.weakly_j(i), [&] {
        Witness w = e.on_ideal("maximal disjoint from S but not weakly J", i);
        w.parts.push_back(ideal_part("R-S", e.rp(), c.set(k)));
        return w;
      });
    }
  }
}

// ----- constructions -----------------------------------------------------

void t_idl(Env& e) {
  RingContext& c = e.ctx;
  const Idealization& idl = *e.subject().idealization;
  RingContext& base = e.aux.of(idl.base);
  const Ring& r = *idl.base;
  const ModuleTable& m = *idl.module;
  const ElementSet ann = module_annihilator(m);
  const std::vector<ElementSet> subs = submodules(m);
  const ElementSet& jr = base.lat().jacobson;
  for (std::size_t i = 0; i < base.whole(); ++i) {
    const ElementSet im = ideal_times_module(base.ideal(i), m);
    bool cond = true;
    for (std::size_t x = 0; x < r.order() && cond; ++x) {
      if (jr.test(x)) continue;
      const ElementSet ys = zero_products(r, static_cast<Elem>(x)) - base.set(i);
      if (ys.empty()) continue;
      cond = ann.test(x) && ys.subset_of(ann);
    }
    for (const ElementSet& n : subs) {
      if (!im.subset_of(n)) continue;
      const std::size_t x = c.index_of(ideal_in_idealization(idl, base.ideal(i), n).members());
      if (!e.in_scope(x)) continue;
      auto describe = [&](const char* note) {
        return [&, note] {
          Witness w{note, {ideal_part("I", idl.base, base.set(i)), elem_part("N", nullptr, n.members())}, c.set(x)};
          return w;
        };
      };
      e.implication(c.weakly_j(x), base.weakly_j(i), describe("clause 1: I(+)N weakly J, I not"));
      if (n.is_full()) {
        const bool rhs = base.weakly_j(i) && cond;
        e.equivalence(c.weakly_j(x), rhs, describe("clause 2: I(+)M and its characterization disagree"));
      }
    }
  }
}

bool is_duplication(const Amalgamation& am) {
  if (am.spec.base != am.spec.target) return false;
  const auto t = am.spec.hom.table();
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (t[x] != x) return false;
  }
  return true;
}

std::vector<std::size_t> maximal_of(RingContext& c) { return c.lat().maximal; }

void l_max(Env& e) {
  RingContext& c = e.ctx;
  const Amalgamation& am = *e.subject().amalgamation;
  RingContext& rc = e.aux.of(am.spec.base);
  RingContext& sc = e.aux.of(am.spec.target);
  const ElementSet& jset = am.spec.ideal.members();
  std::vector<ElementSet> expected;
  for (std::size_t m : maximal_of(rc)) expected.push_back(amalgamated_ideal_I(am, rc.ideal(m)).members());
  for (std::size_t q : maximal_of(sc)) {
    if (!jset.subset_of(sc.set(q))) expected.push_back(amalgamated_bar_set(am, sc.set(q)));
  }
  std::vector<ElementSet> actual;
  for (std::size_t m : maximal_of(c)) actual.push_back(c.set(m));
  auto canon = [](std::vector<ElementSet>& v) {
    std::sort(v.begin(), v.end(), [](const ElementSet& a, const ElementSet& b) { return canonical_order(a, b) < 0; });
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  canon(expected);
  canon(actual);
  e.record(expected == actual ? Outcome::pass : Outcome::fail, [&] {
    Witness w{"maximal ideals differ from the two families", {}, std::nullopt};
    for (const auto& s : actual) w.parts.push_back(ideal_part("computed", e.rp(), s));
    for (const auto& s : expected) w.parts.push_back(ideal_part("formula", e.rp(), s));
    return w;
  });
  const bool small_j = jset.subset_of(sc.lat().jacobson);
  const ElementSet formula = amalgamated_ideal_I(am, Ideal::trusted(am.spec.base, rc.lat().jacobson)).members();
  e.implication(small_j, c.lat().jacobson == formula, [&] {
    return Witness{"J inside J(S) but J(R join J) != J(R) join J",
                   {ideal_part("computed", e.rp(), c.lat().jacobson), ideal_part("formula", e.rp(), formula)},
                   std::nullopt};
  });
}

void p_pp(Env& e) {
  RingContext& c = e.ctx;
  const Amalgamation& am = *e.subject().amalgamation;
  const bool hyp = e.aux.of(am.spec.base).quasi_local() &&
                   am.spec.ideal.members().subset_of(e.aux.of(am.spec.target).lat().jacobson);
  for (std::size_t i : proper_in_scope(e)) {
    e.implication(hyp, c.j(i) && c.weakly_j(i), [&] { return e.on_ideal("proper ideal that is not a J-ideal", i); });
  }
}

void t_aml_i(Env& e) {
  RingContext& c = e.ctx;
  const Amalgamation& am = *e.subject().amalgamation;
  RingContext& rc = e.aux.of(am.spec.base);
  const Ring& ar = c.ring();
  const auto& coords = ar.pairs()->coords;
  const Ring& s = *am.spec.target;
  const ElementSet& jr = rc.lat().jacobson;
  const bool guard = am.spec.ideal.members().subset_of(e.aux.of(am.spec.target).lat().jacobson);
  for (std::size_t i = 0; i < rc.whole(); ++i) {
    const std::size_t x = c.index_of(amalgamated_ideal_I(am, rc.ideal(i)).members());
    if (!e.in_scope(x)) continue;
    // (f(a)+i)(f(b)+j) = 0 for all i, j in J whenever ab = 0, a outside J(R), b outside I.
    bool cond = true;
    for (std::size_t p = 0; p < coords.size() && cond; ++p) {
      const auto [a, sa] = coords[p];
      if (jr.test(a)) continue;
      for (std::size_t q = 0; q < coords.size() && cond; ++q) {
        const auto [b, sb] = coords[q];
        if (rc.set(i).test(b) || am.spec.base->mul(a, b) != am.spec.base->zero()) continue;
        cond = s.mul(sa, sb) == s.zero();
      }
    }
    auto describe = [&](const char* note) {
      return [&, note] {
        return Witness{note, {ideal_part("I", am.spec.base, rc.set(i))}, c.set(x)};
      };
    };
    e.implication(c.j(x), rc.j(i), describe("clause 1: I join J is J, I is not"));
    e.guarded(guard, rc.j(i), c.j(x), describe("clause 1 converse: I is J, I join J is not"));
    e.implication(c.weakly_j(x), rc.weakly_j(i) && cond, describe("clause 2: I join J weakly J, condition fails"));
    e.guarded(guard, rc.weakly_j(i) && cond, c.weakly_j(x),
              describe("clause 2 converse: I weakly J with condition, I join J not weakly J"));
  }
}

void c_cj(Env& e) {
  RingContext& c = e.ctx;
  const Amalgamation& am = *e.subject().amalgamation;
  RingContext& rc = e.aux.of(am.spec.base);
  const bool hyp = am.spec.ideal.members().subset_of(e.aux.of(am.spec.target).lat().jacobson);
  for (std::size_t k : proper_in_scope(e)) {
    if (!am.zero_times_ideal.subset_of(c.set(k))) continue;
    const ElementSet base = am.base_projection.image_of(c.set(k));
    const bool of_form = amalgamated_ideal_I(am, Ideal::trusted(am.spec.base, base)).members() == c.set(k);
    const bool concl = of_form && !base.is_full() && rc.j(rc.index_of(base));
    e.implication(hyp && c.j(k), concl, [&] { return e.on_ideal("J-ideal containing 0 x J not of the form", k); });
  }
  for (std::size_t i = 0; i < rc.whole(); ++i) {
    const std::size_t x = c.index_of(amalgamated_ideal_I(am, rc.ideal(i)).members());
    if (!e.in_scope(x)) continue;
    e.implication(hyp && rc.j(i), c.j(x), [&] {
      return Witness{"I is J but I join J is not", {ideal_part("I", am.spec.base, rc.set(i))}, c.set(x)};
    });
  }
}

// Shared by T-AML-K and C-12: K ranges over proper ideals of S = f(R) + J.
void bar_k_checks(Env& e, bool guard_override, bool use_override) {
  RingContext& c = e.ctx;
  const Amalgamation& am = *e.subject().amalgamation;
  RingContext& rc = e.aux.of(am.spec.base);
  RingContext& sc = e.aux.of(am.spec.target);
  const Ring& s = *am.spec.target;
  const ElementSet& jset = am.spec.ideal.members();
  const bool j_maximal = std::any_of(sc.lat().maximal.begin(), sc.lat().maximal.end(),
                                     [&](std::size_t m) { return sc.set(m) == jset; });
  const bool hyp = j_maximal && am.spec.hom.is_epi();
  bool guard = false;
  if (use_override) {
    guard = guard_override;
  } else if (hyp) {
    const ElementSet fj = am.spec.hom.image_of(rc.lat().jacobson);
    guard = fj == sum_set(s, sc.lat().jacobson, jset) && am.spec.hom.kernel().subset_of(rc.lat().jacobson);
  }
  const auto& coords = c.ring().pairs()->coords;
  for (std::size_t k = 0; k < sc.whole(); ++k) {
    if (!hyp) {
      e.record(Outcome::vacuous, [] { return Witness{}; });
      continue;
    }
    const ElementSet bar = amalgamated_ideal_K(am, restrict_to_subring(am, sc.set(k))).members();
    const std::size_t x = c.index_of(bar);
    if (!e.in_scope(x)) continue;
    // (f(a)+j)(f(b)+k) = 0 with f(a)+j outside J(S), f(b)+k outside K forces ab = 0.
    bool cond = true;
    for (std::size_t p = 0; p < coords.size() && cond; ++p) {
      const auto [a, sa] = coords[p];
      if (sc.lat().jacobson.test(sa)) continue;
      for (std::size_t q = 0; q < coords.size() && cond; ++q) {
        const auto [b, sb] = coords[q];
        if (sc.set(k).test(sb) || s.mul(sa, sb) != s.zero()) continue;
        cond = am.spec.base->mul(a, b) == am.spec.base->zero();
      }
    }
    auto describe = [&](const char* note) {
      return [&, note] {
        return Witness{note, {ideal_part("K", am.spec.target, sc.set(k))}, c.set(x)};
      };
    };
    e.implication(c.j(x), sc.j(k), describe("clause 1: K-bar is J, K is not"));
    e.guarded(guard, sc.j(k), c.j(x), describe("clause 1 converse: K is J, K-bar is not"));
    e.implication(c.weakly_j(x), sc.weakly_j(k) && cond, describe("clause 2: K-bar weakly J, condition fails"));
    e.guarded(guard, sc.weakly_j(k) && cond, c.weakly_j(x),
              describe("clause 2 converse: K weakly J with condition, K-bar not weakly J"));
  }
}

void t_aml_k(Env& e) { bar_k_checks(e, false, false); }

void c_12(Env& e) {
  const Amalgamation& am = *e.subject().amalgamation;
  const bool guard = am.spec.ideal.members().subset_of(e.aux.of(am.spec.base).lat().jacobson);
  bar_k_checks(e, guard, true);
}

void p_13(Env& e) {
  RingContext& c = e.ctx;
  const Amalgamation& am = *e.subject().amalgamation;
  RingContext& rc = e.aux.of(am.spec.base);
  RingContext& sub = e.aux.of(am.subring);
  const ElementSet& jset = am.spec.ideal.members();
  for (std::size_t i = 0; i < rc.whole(); ++i) {
    const ElementSet fij = image_times_ideal(am, rc.ideal(i));
    for (std::size_t t = 0; t < sub.size(); ++t) {
      ElementSet in_s(am.spec.target->order());
      sub.set(t).for_each([&](Elem y) { in_s.set(am.subring_embedding[y]); });
      if (!fij.subset_of(in_s) || !in_s.subset_of(jset)) continue;
      const std::size_t x = c.index_of(amalgamated_ideal_T(am, rc.ideal(i), sub.ideal(t)).members());
      if (!e.in_scope(x)) continue;
      e.implication(c.weakly_j(x), rc.weakly_j(i), [&] {
        return Witness{"I join T weakly J, I not",
                       {ideal_part("I", am.spec.base, rc.set(i)), ideal_part("T", am.subring, sub.set(t))},
                       c.set(x)};
      });
    }
  }
}

using Runner = void (*)(Env&);

const std::map<std::string_view, Runner>& runners() {
  static const std::map<std::string_view, Runner> table = {
      {"T-QUASI", t_quasi}, {"P-JR", p_jr},       {"T-SQ", t_sq},       {"C-NAK", c_nak},
      {"T-EQ", t_eq},       {"P-QUOT", p_quot},   {"P-WP", p_wp},       {"C-WP2", c_wp2},
      {"P-INT", p_int},     {"P-SUM", p_sum},     {"P-CART", p_cart},   {"P-LOC", p_loc},
      {"P-HOM", p_hom},     {"C-QUO", c_quo},     {"P-PRES", p_pres},   {"C-PRE", c_pre},
      {"P-QPRES", p_qpres}, {"L-QP", l_qp},       {"T-SPRES", t_spres}, {"L-SUP", l_sup},
      {"P-MC", p_mc},       {"P-MAXS", p_maxs},   {"T-IDL", t_idl},     {"L-MAX", l_max},
      {"P-PP", p_pp},       {"T-AML-I", t_aml_i}, {"C-CJ", c_cj},       {"T-AML-K", t_aml_k},
      {"C-12", c_12},       {"P-13", p_13},
  };
  return table;
}

const TheoremInfo& info(std::string_view id) {
  auto it = std::find_if(kCatalog.begin(), kCatalog.end(), [&](const TheoremInfo& t) { return t.id == id; });
  if (it == kCatalog.end()) throw Error(ErrorKind::unknown_theorem, "unknown theorem id: " + std::string(id));
  return *it;
}

TheoremVerdict run_one(std::string_view id, RingContext& ctx, AuxPool& aux, const std::vector<ElementSet>& scope,
                       std::size_t subject_index) {
  TheoremVerdict v;
  v.theorem_id = std::string(id);
  v.subject_index = subject_index;
  v.subject = ctx.subject().recipe;
  Env env{ctx, aux, scope, v};
  try {
    runners().at(id)(env);
  } catch (const Error& err) {
    ++v.checked;
    ++v.nonvacuous;
    ++v.failures;
    v.witness = Witness{std::string("error: ") + err.what(), {}, std::nullopt};
  }
  return v;
}

// Re-runs a failing verdict on fresh caches, narrowed to the witness scope.
void replay_witness(TheoremVerdict& v, const Subject& subject) {
  if (!v.witness || v.witness->note.rfind("error:", 0) == 0) return;
  RingContext fresh(subject);
  AuxPool aux(fresh);
  std::vector<ElementSet> scope;
  if (v.witness->scope) scope.push_back(*v.witness->scope);
  const TheoremVerdict again = run_one(v.theorem_id, fresh, aux, scope, v.subject_index);
  v.replayed = v.failures > 0 ? again.failures > 0 : again.guard_outside > 0;
}

}  // namespace

const std::vector<TheoremInfo>& catalog() { return kCatalog; }

bool is_known_theorem(std::string_view id) {
  return std::any_of(kCatalog.begin(), kCatalog.end(), [&](const TheoremInfo& t) { return t.id == id; });
}

std::vector<std::string> resolve_theorem_ids(const std::vector<std::string>& requested) {
  std::vector<std::string> out;
  const bool all = requested.empty() || (requested.size() == 1 && requested[0] == "all");
  for (const TheoremInfo& t : kCatalog) {
    if (all || std::find(requested.begin(), requested.end(), t.id) != requested.end()) out.emplace_back(t.id);
  }
  if (!all) {
    for (const std::string& id : requested) {
      if (!is_known_theorem(id)) throw Error(ErrorKind::unknown_theorem, "unknown theorem id: " + id);
    }
  }
  return out;
}

bool applies(std::string_view id, const Subject& subject) {
  const std::string_view kind = info(id).subjects;
  if (kind == "any") return true;
  if (kind == "product") return subject.product.has_value();
  if (kind == "idealization") return subject.idealization.has_value();
  if (kind == "amalgamation") return subject.amalgamation.has_value();
  if (kind == "duplication") return subject.amalgamation && is_duplication(*subject.amalgamation);
  return false;
}

TheoremVerdict check_theorem(std::string_view id, const Instance& instance) {
  const TheoremInfo& t = info(id);
  if (!applies(id, instance.subject)) {
    throw Error(ErrorKind::instance_shape_mismatch,
                std::string(id) + " needs a " + std::string(t.subjects) + " subject, got " + instance.subject.recipe);
  }
  for (const ElementSet& s : instance.ideals) {
    if (s.universe() != instance.subject.ring->order() || !lattice(*instance.subject.ring).find(s)) {
      throw Error(ErrorKind::instance_shape_mismatch, "instance ideal is not an ideal of " + instance.subject.recipe);
    }
  }
  RingContext ctx(instance.subject);
  AuxPool aux(ctx);
  TheoremVerdict v = run_one(id, ctx, aux, instance.ideals, 0);
  if (v.witness) replay_witness(v, instance.subject);
  return v;
}

SweepResult sweep(const std::vector<Subject>& subjects, const SweepOptions& options) {
  const std::vector<std::string> ids = resolve_theorem_ids(options.theorems);
  std::vector<std::vector<TheoremVerdict>> per_subject(subjects.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t s = next++; s < subjects.size(); s = next++) {
      RingContext ctx(subjects[s]);
      AuxPool aux(ctx);
      const std::vector<ElementSet> no_scope;
      for (const std::string& id : ids) {
        if (!applies(id, subjects[s])) continue;
        TheoremVerdict v = run_one(id, ctx, aux, no_scope, s);
        if (v.witness) replay_witness(v, subjects[s]);
        per_subject[s].push_back(std::move(v));
      }
    }
  };
  const unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
  }

  SweepResult out;
  for (auto& vs : per_subject) {
    for (auto& v : vs) out.verdicts.push_back(std::move(v));
  }
  for (const std::string& id : ids) {
    TheoremSummary s{id, 0, 0, 0, 0, 0};
    for (const TheoremVerdict& v : out.verdicts) {
      if (v.theorem_id != id) continue;
      ++s.subjects;
      s.checked += v.checked;
      s.nonvacuous += v.nonvacuous;
      s.failures += v.failures;
      s.guard_outside += v.guard_outside;
    }
    out.summary.push_back(std::move(s));
  }
  return out;
}

}  // namespace idealforge
