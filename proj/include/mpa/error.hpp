#pragma once

#include <stdexcept>
#include <string>

namespace mpa {

/// Error categories raised by parsing, validation and evaluation.
enum class errc {
  syntax_error,
  duplicate_definition,
  unknown_reference,
  mutual_recursion,
  unguarded_recursion,
  tau_in_comm_rule,
  tau_in_allow_set,
  invalid_comm_rule,
  invalid_rename,
  not_sequential,
  not_basic_process,
  not_tau_free,
  action_outside_alphabet,
  reserved_separator,
  overlapping_comm_rules,
  state_bound_exceeded,
  arity_mismatch,
  dangling_node,
  duplicate_channel,
  unknown_end,
  topology_error,
  usage_error,
  io_error,
};

const char* to_string(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message);
  error(errc code, const std::string& message, int line, int column);

  errc code() const noexcept { return code_; }
  /// 1-based source position; 0 when not applicable.
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  errc code_;
  int line_ = 0;
  int column_ = 0;
};

}  // namespace mpa
