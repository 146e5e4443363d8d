#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "idealforge/context.hpp"

namespace idealforge {

// Boolean expression over classifier verdict names, e.g.
//   weaklyJ & !J
//   weaklyJ(I1) & weaklyJ(I2) & !weaklyJ(I1*I2)
//   !JinJS & weaklyJ(I) & !weaklyJ(I><J)
// Ideal variables are I, I1, I2, ... and range over the proper ideals of the
// subject ring in lattice order. A variable written as "I><J" anywhere ranges
// over the proper ideals of the amalgamation's base ring instead, and
// "I><J" names the amalgamated ideal. Predicates without an argument apply to I.
class PredicateExpr {
 public:
  struct Term {
    enum Kind { var, amalgamated, product, sum, meet } kind = var;
    std::size_t var_index = 0;
    std::size_t lhs = 0;
    std::size_t rhs = 0;
    bool base = false;  // lives in the amalgamation's base ring
  };
  struct Node {
    enum Kind { pred, negate, conj, disj } kind = pred;
    std::size_t predicate = 0;
    std::size_t term = 0;  // when the predicate takes an ideal
    std::size_t lhs = 0;
    std::size_t rhs = 0;
  };

  const std::string& text() const noexcept { return text_; }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  bool variable_is_base(std::size_t v) const { return var_base_[v]; }
  bool needs_amalgamation() const noexcept;

  const std::vector<Term>& terms() const noexcept { return terms_; }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::size_t root() const noexcept { return root_; }

 private:
  friend PredicateExpr parse_predicate(std::string_view text);
  std::string text_;
  std::vector<std::string> vars_;
  std::vector<char> var_base_;
  std::vector<Term> terms_;
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
};

// Names accepted as predicates, ideal-level first.
const std::vector<std::string_view>& predicate_names();

// Throws DslError{malformed_expression} with the offending position.
PredicateExpr parse_predicate(std::string_view text);

struct SearchBinding {
  std::string variable;
  RingPtr ring;
  ElementSet ideal;
};

struct SearchHit {
  std::size_t subject_index = 0;
  std::string subject;
  std::vector<SearchBinding> bindings;
};

// Exhaustive in subject order, then variable assignments in lattice order.
std::vector<SearchHit> search(const PredicateExpr& expr, const std::vector<Subject>& subjects, std::size_t limit);

}  // namespace idealforge
