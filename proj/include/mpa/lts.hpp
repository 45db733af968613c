#pragma once

#include <cstddef>
#include <iosfwd>
#include <set>
#include <vector>

#include "mpa/multiaction.hpp"

namespace mpa {

struct transition {
  std::size_t src;
  multi_action label;
  std::size_t dst;

  auto operator<=>(const transition&) const = default;
};

/// Explicit labeled transition system. Successful termination is a pseudo
/// state: it has no outgoing transitions and is listed in `terminating`.
struct lts {
  std::size_t initial = 0;
  std::size_t num_states = 0;
  std::vector<transition> transitions;
  std::set<std::size_t> terminating;
};

/// Aldebaran (.aut) export. Terminating states go into a trailing comment
/// line "-- term: i j k" (omitted when there are none); readers that ignore
/// trailing garbage still accept the file.
void write_aut(std::ostream& out, const lts& l);

}  // namespace mpa
