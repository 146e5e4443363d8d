#include <doctest.h>

#include "idealforge/corpus.hpp"
#include "idealforge/search.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::vector<Subject> zn_corpus(unsigned hi) {
  CorpusSpec s;
  s.zn_max = hi;
  s.product_max = 0;
  s.quotient_depth = 0;
  s.idealization_max = 0;
  s.duplication_max = 0;
  s.amalgamation_max = 0;
  return build_corpus(s).subjects;
}

std::string hit_text(const SearchHit& h) {
  std::string out = h.subject;
  for (const auto& b : h.bindings) out += " " + b.variable + "=" + dsl::ideal_text(*b.ring, b.ideal);
  return out;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("expression grammar") {
    const PredicateExpr e = parse_predicate("weaklyJ(I1) & weaklyJ(I2) & !weaklyJ(I1*I2)");
    CHECK(e.variables() == std::vector<std::string>{"I1", "I2"});
    CHECK_FALSE(e.needs_amalgamation());
    const PredicateExpr a = parse_predicate("!JinJS & weaklyJ(I) & !weaklyJ(I><J)");
    CHECK(a.needs_amalgamation());
    CHECK(a.variable_is_base(0));
    CHECK(parse_predicate("(J | prime) & !(zero)").variables() == std::vector<std::string>{"I"});

    struct Case {
      const char* text;
      std::size_t column;
    };
    for (const Case& c : std::initializer_list<Case>{
             {"", 1}, {"weaklyJ &", 10}, {"frob", 1}, {"weaklyJ(K)", 9}, {"(J", 3}, {"J )", 3}, {"weaklyJ(I1 *)", 13}}) {
      CAPTURE(c.text);
      try {
        parse_predicate(c.text);
        FAIL("parsed");
      } catch (const dsl::DslError& e) {
        CHECK(e.kind() == ErrorKind::malformed_expression);
        CHECK(e.diagnostic().position.column == c.column);
      }
    }
  }

  TEST_CASE("weaklyJ & !J finds the zero ideal of Z6 first") {
    const auto hits = search(parse_predicate("weaklyJ & !J"), zn_corpus(64), 1);
    REQUIRE(hits.size() == 1);
    CHECK(hit_text(hits[0]) == "Z6 I=<>");
  }

  TEST_CASE("weaklyJ & !weaklyPrime") {
    const auto hits = search(parse_predicate("weaklyJ & !weaklyPrime"), zn_corpus(64), 100);
    REQUIRE_FALSE(hits.empty());
    CHECK(hit_text(hits[0]) == "Z8 I=<4>");
    bool z32 = false;
    for (const auto& h : hits) z32 |= hit_text(h) == "Z32 I=<16>";
    CHECK(z32);
  }

  TEST_CASE("limit zero and determinism") {
    const auto corpus = zn_corpus(30);
    CHECK(search(parse_predicate("weaklyJ"), corpus, 0).empty());
    const auto a = search(parse_predicate("J | prime"), corpus, 50);
    const auto b = search(parse_predicate("J | prime"), corpus, 50);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(hit_text(a[i]) == hit_text(b[i]));
  }

  TEST_CASE("searches with no finite witness") {
    // Non-local finite rings have only {0} as weakly J ideal, and local ones
    // make every proper ideal J; both searches come back empty.
    CorpusSpec s;
    s.zn_max = 24;
    s.product_max = 24;
    s.idealization_max = 48;
    s.duplication_max = 8;
    s.amalgamation_max = 8;
    const auto corpus = build_corpus(s).subjects;
    CHECK(search(parse_predicate("weaklyJ(I1) & weaklyJ(I2) & !weaklyJ(I1*I2)"), corpus, 1).empty());
    CHECK(search(parse_predicate("quasiJ & !weaklyJ"), corpus, 1).empty());
  }

  TEST_CASE("guarded converse witness over duplications") {
    CorpusSpec s;
    s.zn_max = 0;
    s.product_max = 0;
    s.quotient_depth = 0;
    s.idealization_max = 0;
    s.duplication_max = 12;
    s.amalgamation_max = 0;
    const auto corpus = build_corpus(s).subjects;
    const auto hits = search(parse_predicate("!JinJS & weaklyJ(I) & !weaklyJ(I><J)"), corpus, 1);
    REQUIRE(hits.size() == 1);
    CHECK(hit_text(hits[0]) == "Z6 >< <3> I=<>");
    CHECK(hits[0].bindings[0].ring->label() == "Z6");
  }
}
