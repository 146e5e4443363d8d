#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "idealforge/dsl.hpp"

namespace testing {

using idealforge::dsl::Node;
using idealforge::dsl::NodeKind;

// Random well-formed ring ASTs shaped the way the parser builds them.
class AstGen {
 public:
  explicit AstGen(std::uint64_t seed) : rng_(seed) {}

  Node ring(int depth) {
    const int choice = depth <= 0 ? 0 : pick(0, 7);
    switch (choice) {
      case 0: return leaf(NodeKind::ZnLit, pick(0, 300));
      case 1: return node(NodeKind::Product, {ring(depth - 1), ring(depth - 1)});
      case 2: return node(NodeKind::Quotient, {ring(depth - 1), ideal()});
      case 3: return node(NodeKind::Duplicate, {ring(depth - 1), ideal()});
      case 4: {
        Node m = node(NodeKind::ModuleRef, {ring(depth - 1)});
        if (pick(0, 1)) {
          m.name = "zn";
          m.value = pick(0, 50);
        } else {
          m.name = "self";
        }
        return node(NodeKind::Idealize, {ring(depth - 1), std::move(m)});
      }
      case 5: return node(NodeKind::Amalgam, {ring(depth - 1), ring(depth - 1), hom(), ideal()});
      case 6: return node(NodeKind::Localize, {ring(depth - 1), set()});
      default: {
        Node p = node(NodeKind::TruncPoly, {ring(depth - 1)});
        p.value = pick(0, 9);
        return p;
      }
    }
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  static Node leaf(NodeKind k, std::uint64_t v) {
    Node n;
    n.kind = k;
    n.value = v;
    return n;
  }
  static Node node(NodeKind k, std::vector<Node> children) {
    Node n;
    n.kind = k;
    n.children = std::move(children);
    return n;
  }

  Node element(int depth = 2) {
    if (depth > 0 && pick(0, 3) == 0) return node(NodeKind::Pair, {element(depth - 1), element(depth - 1)});
    return leaf(NodeKind::IntLit, pick(0, 1000));
  }
  Node ideal() {
    Node n = node(NodeKind::IdealGen, {});
    for (int i = pick(0, 3); i > 0; --i) n.children.push_back(element());
    return n;
  }
  Node set() {
    Node n = node(NodeKind::SetLit, {});
    for (int i = pick(1, 4); i > 0; --i) n.children.push_back(element());
    return n;
  }
  Node hom() {
    Node h = node(NodeKind::HomRef, {});
    switch (pick(0, 3)) {
      case 0: h.name = "id"; break;
      case 1: h.name = "mod"; h.value = pick(0, 99); break;
      case 2: h.name = "proj"; h.value = pick(1, 2); break;
      default:
        h.name = "table";
        for (int i = pick(1, 6); i > 0; --i) h.children.push_back(leaf(NodeKind::IntLit, pick(0, 99)));
    }
    return h;
  }

  std::mt19937_64 rng_;
};

struct SyntaxErrorCase {
  const char* text;
  std::size_t line;
  std::size_t column;
};

// One malformed input per grammar production, with where the diagnostic
// must point.
inline constexpr SyntaxErrorCase kSyntaxErrors[] = {
    {"Z6 (+ ) Z6", 1, 5},  // stray '+'
    {"", 1, 1},            // empty input
    {"Z", 1, 2},           // missing modulus
    {"Z6 x", 1, 5},        // dangling operator
    {"Z6 / 4", 1, 6},      // ideal without brackets
    {"Z6 / <2", 1, 8},     // unclosed ideal
    {"Z6 / <2,>", 1, 9},   // empty generator
    {"Z6 / <(1 2)>", 1, 10},
    {"(Z6", 1, 4},         // unclosed paren
    {"amalg(Z4, Z4, id)", 1, 17},
    {"amalg(Z4, Z4, foo, <>)", 1, 15},
    {"amalg(Z4, Z4, table(), <>)", 1, 21},
    {"amalg(Z4, Z4, mod, <>)", 1, 18},
    {"loc(Z6, {})", 1, 10},
    {"loc(Z6, 1)", 1, 9},
    {"poly(Z2)", 1, 8},
    {"poly(Z2, x)", 1, 10},
    {"Z6 (+) mod Z6", 1, 12},
    {"Z6 (+) mod(Z6,)", 1, 15},
    {"Z6 (+) Z6", 1, 8},
    {"Z6 Z6", 1, 4},
    {"Z6 ><", 1, 6},
    {"Z6\n  / <2> ] ", 2, 9},
    {"Zq", 1, 1},
    {"Z99999999999", 1, 2},
};

}  // namespace testing
