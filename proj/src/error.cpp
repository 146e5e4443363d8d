#include "idealforge/error.hpp"

#include <utility>

namespace idealforge {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::order_out_of_range: return "order-out-of-range";
    case ErrorKind::order_cap_exceeded: return "order-cap-exceeded";
    case ErrorKind::axiom_violation: return "axiom-violation";
    case ErrorKind::hom_violation: return "hom-violation";
    case ErrorKind::module_violation: return "invalid-module";
    case ErrorKind::improper_ideal: return "improper-ideal";
    case ErrorKind::ring_mismatch: return "ring-mismatch";
    case ErrorKind::empty_set: return "empty-set";
    case ErrorKind::containment_violation: return "containment-violation";
    case ErrorKind::not_an_ideal: return "not-an-ideal";
    case ErrorKind::invalid_mult_set: return "invalid-mult-set";
    case ErrorKind::definition_precondition: return "definition-precondition-violated";
    case ErrorKind::element_out_of_range: return "element-out-of-range";
    case ErrorKind::unknown_theorem: return "unknown-theorem-id";
    case ErrorKind::instance_shape_mismatch: return "instance-shape-mismatch";
    case ErrorKind::syntax_error: return "syntax-error";
    case ErrorKind::evaluation_error: return "evaluation-error";
    case ErrorKind::malformed_expression: return "malformed-expression";
    case ErrorKind::corpus_spec: return "bad-corpus-spec";
    case ErrorKind::io_error: return "io-error";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, std::string message, std::string detail,
             std::vector<std::size_t> witness)
    : std::runtime_error(std::move(message)),
      kind_(kind),
      detail_(std::move(detail)),
      witness_(std::move(witness)) {}

}  // namespace idealforge
