#include <doctest.h>

#include "dsl_fixtures.hpp"
#include "support.hpp"

using namespace testing;
using dsl::Node;
using dsl::NodeKind;

namespace {

dsl::Diagnostic diagnose(std::string_view text) {
  try {
    dsl::parse_ring(text);
  } catch (const dsl::DslError& e) {
    CHECK(e.kind() == ErrorKind::syntax_error);
    return e.diagnostic();
  }
  FAIL("parsed: " << text);
  return {};
}

void spans_inside(const Node& n, std::size_t size) {
  CHECK(n.span.begin <= n.span.end);
  CHECK(n.span.end <= size);
  for (const Node& c : n.children) spans_inside(c, size);
}

}  // namespace

TEST_SUITE("ring-dsl") {
  TEST_CASE("parse examples") {
    const Node z = dsl::parse_ring("Z6");
    CHECK(z.kind == NodeKind::ZnLit);
    CHECK(z.value == 6);
    const Node d = dsl::parse_ring("Z4 >< <2>");
    CHECK(d.kind == NodeKind::Duplicate);
    CHECK(d.children[1].kind == NodeKind::IdealGen);
    CHECK(d.children[1].children[0].value == 2);
    // "/" and "><" bind tighter than "x"
    const Node p = dsl::parse_ring("Z2 x Z4 / <2>");
    CHECK(p.kind == NodeKind::Product);
    CHECK(p.children[1].kind == NodeKind::Quotient);
    CHECK(dsl::print(dsl::parse_ring("(Z2 x Z4) / <(0, 2)>")) == "(Z2 x Z4) / <(0, 2)>");
    CHECK(dsl::print(dsl::parse_ring("Z2xZ3")) == "Z2 x Z3");
  }

  TEST_CASE("round trip over generated ASTs") {
    AstGen g(2024);
    for (int i = 0; i < 1000; ++i) {
      const Node ast = g.ring(1 + i % 4);
      const std::string text = dsl::print(ast);
      CAPTURE(text);
      const Node back = dsl::parse_ring(text);
      CHECK(dsl::same_tree(ast, back));
      CHECK(dsl::print(back) == text);
      spans_inside(back, text.size());
    }
  }

  TEST_CASE("positioned diagnostics") {
    for (const SyntaxErrorCase& c : kSyntaxErrors) {
      CAPTURE(c.text);
      const dsl::Diagnostic d = diagnose(c.text);
      CHECK(d.position.line == c.line);
      CHECK(d.position.column == c.column);
      CHECK_FALSE(d.message.empty());
    }
    // expected-token sets are reported
    const dsl::Diagnostic d = diagnose("Z6 x");
    CHECK_FALSE(d.expected.empty());
  }

  TEST_CASE("nesting and length caps") {
    std::string deep(dsl::kMaxDepth + 5, '(');
    deep += "Z2";
    deep += std::string(dsl::kMaxDepth + 5, ')');
    CHECK_THROWS_AS(dsl::parse_ring(deep), dsl::DslError);
    CHECK_THROWS_AS(dsl::parse_ring(std::string(dsl::kMaxInput + 1, ' ')), dsl::DslError);
  }

  TEST_CASE("evaluation") {
    CHECK(ring("Z12 / <4>").ring->order() == 4);
    const Subject id = ring("Z6 (+) mod(Z6)");
    CHECK(id.ring->order() == 36);
    CHECK(id.idealization.has_value());
    const Subject a = ring("amalg(Z4, Z4, id, <2>)");
    CHECK(a.ring->order() == 8);
    CHECK(a.amalgamation.has_value());
    CHECK(ring("Z2 x Z3").product.has_value());
    CHECK(ring("loc(Z6, {1, 3})").ring->order() == 2);
    CHECK(ring("poly(Z2, 3)").ring->order() == 8);
    CHECK(ring("Z8 (+) mod(Z8, 4)").ring->order() == 32);
  }

  TEST_CASE("evaluation errors carry spans") {
    struct Case {
      const char* text;
      std::size_t column;
    };
    for (const Case& c : std::initializer_list<Case>{
             {"Z1", 1},
             {"Z6 / <7>", 7},
             {"Z6 / <1>", 1},
             {"Z6 (+) mod(Z6, 4)", 8},
             {"Z6 (+) mod(Z4)", 8},
             {"amalg(Z4, Z6, id, <>)", 15},
             {"amalg(Z4, Z3, mod 3, <>)", 15},
             {"loc(Z6, {0, 1})", 1},
             {"Z2 x Z3 / <(1, 1)>", 12},
         }) {
      CAPTURE(c.text);
      try {
        dsl::evaluate_ring(c.text);
        FAIL("evaluated");
      } catch (const dsl::DslError& e) {
        CHECK(e.kind() == ErrorKind::evaluation_error);
        CHECK(e.diagnostic().position.column == c.column);
        CHECK(e.diagnostic().span.end > e.diagnostic().span.begin);
      }
    }
    const Subject z6 = ring("Z6");
    try {
      dsl::evaluate_ideal("<7>", z6.ring);
      FAIL("out-of-range element accepted");
    } catch (const dsl::DslError& e) {
      CHECK(e.detail().find("element_out_of_range") != std::string::npos);
    }
  }

  TEST_CASE("element and ideal text reparse") {
    for (const char* text : {"Z12", "Z2 x Z6", "Z4 >< <2>", "Z4 (+) mod(Z4, 2)"}) {
      const Subject s = ring(text);
      for (const Ideal& i : all_ideals(s.ring)) {
        const std::string t = dsl::ideal_text(*s.ring, i.members());
        CAPTURE(t);
        CHECK(dsl::evaluate_ideal(t, s.ring) == i);
      }
    }
  }
}
