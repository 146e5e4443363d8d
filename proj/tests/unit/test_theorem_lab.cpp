#include <doctest.h>

#include <set>

#include "idealforge/corpus.hpp"
#include "idealforge/theorem_lab.hpp"
#include "support.hpp"

using namespace testing;

namespace {

CorpusSpec small_spec() {
  CorpusSpec s;
  s.zn_max = 16;
  s.product_max = 16;
  s.quotient_depth = 1;
  s.idealization_max = 32;
  s.duplication_max = 6;
  s.amalgamation_max = 8;
  return s;
}

bool same(const SweepResult& a, const SweepResult& b) {
  if (a.verdicts.size() != b.verdicts.size()) return false;
  for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
    const auto& x = a.verdicts[i];
    const auto& y = b.verdicts[i];
    if (x.theorem_id != y.theorem_id || x.subject_index != y.subject_index || x.checked != y.checked ||
        x.nonvacuous != y.nonvacuous || x.failures != y.failures || x.guard_outside != y.guard_outside ||
        x.witness.has_value() != y.witness.has_value()) {
      return false;
    }
    if (x.witness && x.witness->note != y.witness->note) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("theorem-lab") {
  TEST_CASE("catalog") {
    const auto& cat = catalog();
    CHECK(cat.size() == 30);
    std::set<std::string_view> ids;
    for (const auto& t : cat) ids.insert(t.id);
    CHECK(ids.size() == cat.size());
    CHECK(resolve_theorem_ids({"all"}).size() == 30);
    CHECK(resolve_theorem_ids({}).size() == 30);
    CHECK(resolve_theorem_ids({"T-SQ", "P-INT"}) == std::vector<std::string>{"T-SQ", "P-INT"});
    try {
      resolve_theorem_ids({"NOPE"});
      FAIL("unknown id accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::unknown_theorem);
    }
  }

  TEST_CASE("single instances") {
    const Subject z32 = ring("Z32");
    const TheoremVerdict q = check_theorem("T-QUASI", {z32, {}});
    CHECK(q.holds());
    CHECK(q.nonvacuous > 0);

    const Subject z6 = ring("Z6");
    const TheoremVerdict sq = check_theorem("T-SQ", {z6, {ElementSet(6, {0})}});
    CHECK(sq.holds());
    CHECK(sq.checked == 1);
    CHECK(sq.nonvacuous == 1);

    // {0} is not weakly J-and-not-J in Z7, so T-SQ is vacuous there.
    const Subject z7 = ring("Z7");
    const TheoremVerdict v = check_theorem("T-SQ", {z7, {ElementSet(7, {0})}});
    CHECK(v.holds());
    CHECK(v.vacuous());
  }

  TEST_CASE("P-CART clause (2) => (3) fails on Z2 x Z2") {
    // I = {0} x Z2 has the form I1 x R2 with I1 = {0}, a J-ideal of the
    // field Z2, so clause (2) holds. A non-local ring has no J-ideals, so
    // clause (3) does not. Recorded as computed.
    const Subject p = ring("Z2 x Z2");
    const Ideal i = ideal(p, "<(0, 1)>");
    const TheoremVerdict v = check_theorem("P-CART", {p, {i.members()}});
    CHECK(v.failures == 1);
    REQUIRE(v.witness.has_value());
    CHECK(v.replayed);
    CHECK(v.witness->note.find("010") != std::string::npos);
  }

  TEST_CASE("shape mismatches") {
    const Subject z6 = ring("Z6");
    CHECK_FALSE(applies("T-IDL", z6));
    CHECK_FALSE(applies("L-MAX", z6));
    CHECK(applies("T-QUASI", z6));
    for (const char* id : {"T-IDL", "P-CART", "L-MAX", "C-12"}) {
      try {
        check_theorem(id, {z6, {}});
        FAIL("shape accepted for " << id);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::instance_shape_mismatch);
      }
    }
    CHECK_THROWS_AS(check_theorem("NOPE", {z6, {}}), Error);
  }

  TEST_CASE("empty corpus") {
    const SweepResult r = sweep({}, {{}, 2});
    CHECK(r.verdicts.empty());
    REQUIRE(r.summary.size() == 30);
    for (const auto& s : r.summary) {
      CHECK(s.subjects == 0);
      CHECK(s.checked == 0);
      CHECK(s.failures == 0);
    }
  }

  TEST_CASE("sweep is independent of the worker count") {
    const Corpus c = build_corpus(small_spec());
    const SweepResult one = sweep(c.subjects, {{}, 1});
    const SweepResult four = sweep(c.subjects, {{}, 4});
    CHECK(same(one, four));
    for (const auto& s : one.summary) {
      CAPTURE(s.theorem_id);
      if (s.theorem_id != "P-CART") CHECK(s.failures == 0);
    }
  }

  TEST_CASE("idealization sweep up to order 256") {
    CorpusSpec s;
    s.zn_min = 2;
    s.zn_max = 0;
    s.product_max = 0;
    s.quotient_depth = 0;
    s.idealization_max = 256;
    s.duplication_max = 0;
    s.amalgamation_max = 0;
    const Corpus c = build_corpus(s);
    CHECK(c.subjects.size() > 20);
    const SweepResult r = sweep(c.subjects, {{"T-IDL"}, 2});
    REQUIRE(r.summary.size() == 1);
    CHECK(r.summary[0].failures == 0);
    CHECK(r.summary[0].nonvacuous > 0);
  }

  TEST_CASE("guarded converses outside their guard are not failures") {
    const Corpus c = build_corpus(load_corpus_spec(IDEALFORGE_TEST_DATA "/guarded_converse.json"));
    CHECK(c.diagnostics.empty());
    const SweepResult r = sweep(c.subjects, {{"T-AML-I"}, 1});
    REQUIRE(r.summary.size() == 1);
    CHECK(r.summary[0].failures == 0);
    CHECK(r.summary[0].guard_outside > 0);
    bool saw_witness = false;
    for (const auto& v : r.verdicts) {
      if (v.guard_outside > 0) {
        REQUIRE(v.witness.has_value());
        saw_witness = true;
      }
    }
    CHECK(saw_witness);
  }

  TEST_CASE("witness replay") {
    const Subject p = ring("Z2 x Z3");
    const SweepResult r = sweep({p}, {{"P-CART"}, 1});
    for (const auto& v : r.verdicts) {
      if (v.failures) CHECK(v.replayed);
    }
  }
}
