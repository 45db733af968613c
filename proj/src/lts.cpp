#include "mpa/lts.hpp"

#include <ostream>

namespace mpa {

void write_aut(std::ostream& out, const lts& l) {
  out << "des (" << l.initial << "," << l.transitions.size() << ","
      << l.num_states << ")\n";
  for (const transition& t : l.transitions) {
    out << "(" << t.src << ",\"" << to_string(t.label) << "\"," << t.dst << ")\n";
  }
  if (!l.terminating.empty()) {
    out << "-- term:";
    for (std::size_t s : l.terminating) out << " " << s;
    out << "\n";
  }
}

}  // namespace mpa
