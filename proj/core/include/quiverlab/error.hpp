#ifndef QUIVERLAB_ERROR_HPP
#define QUIVERLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace quiverlab {

enum class ErrorKind {
  bad_parameter,
  parse_error,
  not_admissible,
  malformed_relation,
  disconnected,
  not_dynkin,
  not_a_root,
  relation_violated,
  shape_mismatch,
  algebra_mismatch,
  field_mismatch,
  no_such_vertex,
  not_a_node,
  precondition_failed,
  budget_exceeded,
  zero_module,
  guard_tripped,
  undecidable,
};

const char* to_string(ErrorKind k);

// Single exception type used across the library; `kind` lets callers
// distinguish usage errors from computational refusals (budget/guard trips).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind(kind) {}
  ErrorKind kind;
};

}  // namespace quiverlab

#endif
