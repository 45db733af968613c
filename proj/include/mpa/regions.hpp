#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mpa/lts.hpp"
#include "mpa/reo.hpp"

namespace mpa {

/// A partition of the actions occurring in transition labels.
struct region_set {
  std::vector<action_set> regions;  // pairwise disjoint, sorted by least member
};

/// Synchronous region of action a in l: the least set containing a that is
/// closed under label co-occurrence and same-source co-enabledness. For an
/// action labeling nothing the region is {a}.
action_set sync_region(const lts& l, const action& a);

/// All synchronous regions of the labeled actions of l.
region_set sync_regions(const lts& l);

/// Asynchronous pairs: per channel of topo whose two nodes fall into
/// different regions of x, the node-action pair (sorted). Channel ends
/// missing from the region alphabet are skipped with a warning.
std::vector<std::pair<action, action>> async_regions(
    const region_set& x, const connector_topology& topo,
    std::vector<std::string>* warnings = nullptr);

}  // namespace mpa
