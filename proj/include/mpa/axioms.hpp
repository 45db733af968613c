#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mpa {

/// Result of checking one axiom schema on random closed instances.
struct axiom_check {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::string first_failure;  // formatted lhs / rhs of the first failing pair
};

/// Instantiate every axiom of the equational theory `per_axiom` times with
/// seeded random closed terms (alphabet <= 3, depth <= 3, side conditions
/// respected) and compare both sides by strong bisimulation of their state
/// spaces. Deterministic for a fixed seed.
std::vector<axiom_check> run_axiom_suite(std::uint64_t seed, int per_axiom);

}  // namespace mpa
