#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mpa/lts.hpp"

namespace mpa {

/// Coarsest strong-bisimulation partition of the states of l, computed by
/// signature refinement. Initial split: terminating vs ordinary states.
/// Block ids are dense, deterministic (first occurrence by state index).
std::vector<std::size_t> bisimulation_partition(const lts& l);

struct bisim_result {
  bool equivalent = false;
  /// On a negative verdict: a short distinguishing label trace plus a note
  /// saying what differs after it.
  std::vector<multi_action> witness;
  std::string note;
};

/// Strong bisimilarity of the initial states of a and b.
bisim_result bisimilar(const lts& a, const lts& b);

/// Quotient of l under its coarsest strong bisimulation.
lts reduce(const lts& l);

}  // namespace mpa
