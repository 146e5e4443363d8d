#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace idealforge {

enum class ErrorKind {
  order_out_of_range,
  order_cap_exceeded,
  axiom_violation,
  hom_violation,
  module_violation,
  improper_ideal,
  ring_mismatch,
  empty_set,
  containment_violation,
  not_an_ideal,
  invalid_mult_set,
  definition_precondition,
  element_out_of_range,
  unknown_theorem,
  instance_shape_mismatch,
  syntax_error,
  evaluation_error,
  malformed_expression,
  corpus_spec,
  io_error,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure in the library is reported through this type. `detail`
// carries the axiom or rule name, `witness` the element indices that
// falsify it when there are any.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::string detail = {},
        std::vector<std::size_t> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string detail_;
  std::vector<std::size_t> witness_;
};

}  // namespace idealforge
