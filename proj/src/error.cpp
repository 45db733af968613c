#include "mpa/error.hpp"

namespace mpa {

const char* to_string(errc c) {
  switch (c) {
    case errc::syntax_error: return "SyntaxError";
    case errc::duplicate_definition: return "DuplicateDefinition";
    case errc::unknown_reference: return "UnknownReference";
    case errc::mutual_recursion: return "MutualRecursion";
    case errc::unguarded_recursion: return "UnguardedRecursion";
    case errc::tau_in_comm_rule: return "TauInCommRule";
    case errc::tau_in_allow_set: return "TauInAllowSet";
    case errc::invalid_comm_rule: return "InvalidCommRule";
    case errc::invalid_rename: return "InvalidRename";
    case errc::not_sequential: return "NotSequential";
    case errc::not_basic_process: return "NotBasicProcess";
    case errc::not_tau_free: return "NotTauFree";
    case errc::action_outside_alphabet: return "ActionOutsideAlphabet";
    case errc::reserved_separator: return "ReservedSeparatorInAction";
    case errc::overlapping_comm_rules: return "OverlappingCommRules";
    case errc::state_bound_exceeded: return "StateBoundExceeded";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::dangling_node: return "DanglingNode";
    case errc::duplicate_channel: return "DuplicateChannel";
    case errc::unknown_end: return "UnknownEnd";
    case errc::topology_error: return "TopologyError";
    case errc::usage_error: return "UsageError";
    case errc::io_error: return "IoError";
  }
  return "Error";
}

static std::string compose_message(errc code, const std::string& message,
                                   int line, int column) {
  std::string out = to_string(code);
  if (line > 0) {
    out += " at " + std::to_string(line) + ":" + std::to_string(column);
  }
  out += ": " + message;
  return out;
}

error::error(errc code, const std::string& message)
    : std::runtime_error(compose_message(code, message, 0, 0)), code_(code) {}

error::error(errc code, const std::string& message, int line, int column)
    : std::runtime_error(compose_message(code, message, line, column)),
      code_(code),
      line_(line),
      column_(column) {}

}  // namespace mpa
