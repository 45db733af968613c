#pragma once

#include <cstddef>
#include <vector>

#include "mpa/lts.hpp"
#include "mpa/process.hpp"

namespace mpa {

/// One outgoing transition of a term. A null successor means successful
/// termination after the step.
struct step_result {
  multi_action label;
  term_ptr successor;
};

/// The one-step transitions of t, as a set: successors normalized, sorted by
/// (label, successor), duplicates removed. Assumes spec validates (guarded,
/// resolvable recursion); comm nodes may raise overlapping_comm_rules.
std::vector<step_result> step(const term_ptr& t, const specification& spec);

inline constexpr std::size_t default_max_states = 100000;

/// Breadth-first state-space exploration from `root` (a term). States are
/// identified by normalized AST; a state whose normal form equals a
/// definition body folds back to the bare reference, so guarded recursion
/// closes cycles. Deterministic numbering in discovery order. Throws
/// state_bound_exceeded beyond max_states.
lts explore(const term_ptr& root, const specification& spec,
            std::size_t max_states = default_max_states);

/// Explore the specification root (validates first).
lts explore(const specification& spec,
            std::size_t max_states = default_max_states);

/// Explore a selected definition of spec.
lts explore(const specification& spec, const std::string& root_name,
            std::size_t max_states = default_max_states);

}  // namespace mpa
