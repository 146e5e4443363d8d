#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "idealforge/context.hpp"
#include "idealforge/error.hpp"

namespace idealforge::dsl {

// Byte offsets into the source text, half open.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position position_of(std::string_view text, std::size_t offset);

enum class NodeKind {
  ZnLit,      // value = n
  Product,    // ring, ring
  Quotient,   // ring, IdealGen
  Idealize,   // ring, ModuleRef
  Amalgam,    // ring, ring, HomRef, IdealGen
  Duplicate,  // ring, IdealGen
  Localize,   // ring, SetLit
  TruncPoly,  // ring; value = k
  IdealGen,   // generators (IntLit | Pair)
  HomRef,     // name in {id, mod, proj, table}; value for mod/proj; IntLit children for table
  SetLit,     // elements (IntLit | Pair)
  ModuleRef,  // ring; value = m, or 0 for the ring over itself
  Pair,       // element, element
  IntLit,     // value
};

std::string_view to_string(NodeKind kind) noexcept;

struct Node {
  NodeKind kind = NodeKind::IntLit;
  Span span;
  std::uint64_t value = 0;
  std::string name;
  std::vector<Node> children;
};

// Structural equality; spans are ignored.
bool same_tree(const Node& a, const Node& b) noexcept;

struct Diagnostic {
  Span span;
  Position position;
  std::vector<std::string> expected;  // empty for evaluation errors
  std::string message;
};

// Error with a source location. kind() is syntax_error or evaluation_error.
class DslError : public Error {
 public:
  DslError(ErrorKind kind, Diagnostic diagnostic, std::string detail = {});
  const Diagnostic& diagnostic() const noexcept { return diagnostic_; }

 private:
  Diagnostic diagnostic_;
};

inline constexpr std::size_t kMaxInput = 1 << 16;
inline constexpr std::size_t kMaxDepth = 200;

Node parse_ring(std::string_view text);
Node parse_ideal(std::string_view text);
Node parse_set(std::string_view text);

std::string print(const Node& node);

// Evaluates a ring expression; the subject carries the outermost
// construction when it is a product, idealization or amalgamation.
Subject evaluate_ring(const Node& ast, std::string_view text, const Caps& caps = default_caps());
Subject evaluate_ring(std::string_view text, const Caps& caps = default_caps());

// Resolves generators against `ring` and returns the ideal they generate.
Ideal evaluate_ideal(const Node& ast, std::string_view text, const RingPtr& ring);
Ideal evaluate_ideal(std::string_view text, const RingPtr& ring);

// Element indices named by a set literal.
ElementSet evaluate_set(const Node& ast, std::string_view text, const RingPtr& ring);

// Surface syntax for an element ("3", "(1, 2)") and for an ideal by its
// canonical generators ("<2>", "<>"); both reparse against `ring`.
std::string element_text(const Ring& ring, Elem e);
std::string ideal_text(const Ring& ring, const ElementSet& ideal);

// Element index of an IntLit or Pair node in `ring`; throws DslError.
Elem resolve_element(const Node& node, std::string_view text, const Ring& ring);

}  // namespace idealforge::dsl
