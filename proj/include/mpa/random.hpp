#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mpa/lts.hpp"
#include "mpa/process.hpp"

namespace mpa {

using rng_engine = std::mt19937_64;

/// Seeded generators for randomized checks. All draw actions from a small
/// lowercase alphabet {a, b, ...}.

std::vector<action> small_alphabet(int size);

multi_action random_multi_action(rng_engine& rng, const std::vector<action>& alphabet,
                                 int max_size, bool tau_free);

/// Sequential term: multi-action leaves, deadlock, alt, seq.
term_ptr random_sequential_term(rng_engine& rng, const std::vector<action>& alphabet,
                                int max_depth, bool tau_free);

/// Term over the full operator set with valid payloads (tau-free allow sets,
/// disjoint comm rules, functional renamings). References are not generated.
term_ptr random_term(rng_engine& rng, const std::vector<action>& alphabet,
                     int max_depth);

/// Specification with a single guarded self-recursive root definition.
specification random_recursive_specification(rng_engine& rng,
                                             const std::vector<action>& alphabet,
                                             int max_depth, bool tau_free);

/// Arbitrary small LTS (not necessarily from a term); for oracle tests.
lts random_lts(rng_engine& rng, int max_states, int num_labels);

}  // namespace mpa
