#include "mpa/regions.hpp"

#include <algorithm>
#include <map>

namespace mpa {

namespace {

// Union-find over actions; co-occurring and co-enabled actions share a root.
class action_partition {
 public:
  explicit action_partition(const lts& l) {
    for (const transition& t : l.transitions) touch(t.label);
    // All actions of all labels leaving one state belong together: this is
    // co-enabledness, and it subsumes co-occurrence within one label.
    std::map<std::size_t, std::vector<const multi_action*>> by_src;
    for (const transition& t : l.transitions) by_src[t.src].push_back(&t.label);
    for (const auto& [src, labels] : by_src) {
      const action* first = nullptr;
      for (const multi_action* m : labels) {
        for (const action& a : m->actions()) {
          if (first == nullptr) {
            first = &a;
          } else {
            unite(*first, a);
          }
        }
      }
    }
  }

  bool known(const action& a) const { return parent_.count(a) > 0; }

  action_set members(const action& a) const {
    action_set out;
    const action& r = find(a);
    for (const auto& [x, _] : parent_) {
      if (find(x) == r) out.insert(x);
    }
    return out;
  }

  std::vector<action_set> classes() const {
    std::map<action, action_set> grouped;
    for (const auto& [x, _] : parent_) grouped[find(x)].insert(x);
    std::vector<action_set> out;
    out.reserve(grouped.size());
    for (auto& [_, cls] : grouped) out.push_back(std::move(cls));
    return out;
  }

 private:
  void touch(const multi_action& m) {
    for (const action& a : m.actions()) parent_.try_emplace(a, a);
  }

  const action& find(const action& a) const {
    const action* x = &a;
    while (true) {
      const action& p = parent_.at(*x);
      if (p == *x) return parent_.find(*x)->first;
      x = &p;
    }
  }

  void unite(const action& a, const action& b) {
    const action ra = find(a);
    const action rb = find(b);
    if (ra == rb) return;
    if (ra < rb) {
      parent_.at(rb) = ra;
    } else {
      parent_.at(ra) = rb;
    }
  }

  std::map<action, action> parent_;
};

}  // namespace

action_set sync_region(const lts& l, const action& a) {
  action_partition p(l);
  if (!p.known(a)) return {a};
  return p.members(a);
}

region_set sync_regions(const lts& l) {
  region_set out;
  out.regions = action_partition(l).classes();
  std::sort(out.regions.begin(), out.regions.end());
  return out;
}

std::vector<std::pair<action, action>> async_regions(
    const region_set& x, const connector_topology& topo,
    std::vector<std::string>* warnings) {
  auto region_of = [&](const action& a) -> const action_set* {
    for (const action_set& r : x.regions) {
      if (r.count(a) > 0) return &r;
    }
    return nullptr;
  };
  std::set<std::pair<action, action>> pairs;
  for (const channel_decl& c : topo.channels()) {
    if (c.first == c.second) continue;
    action first(c.first);
    action second(c.second);
    const action_set* rf = region_of(first);
    const action_set* rs = region_of(second);
    if (rf == nullptr || rs == nullptr) {
      if (warnings) {
        const std::string& missing = rf == nullptr ? c.first : c.second;
        warnings->push_back("channel end at node '" + missing +
                            "' does not occur in the region alphabet; skipped");
      }
      continue;
    }
    if (rf == rs) continue;
    pairs.insert(first < second ? std::make_pair(first, second)
                                : std::make_pair(second, first));
  }
  return {pairs.begin(), pairs.end()};
}

}  // namespace mpa
