#include "mpa/equivalence.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace mpa {

namespace {

// Both input systems side by side, labels interned.
struct arena {
  std::size_t n = 0;
  std::vector<multi_action> labels;
  std::vector<std::vector<std::pair<int, std::size_t>>> out;  // (label, dst)
  std::vector<char> terminating;

  void absorb(const lts& l, std::size_t base) {
    for (const transition& t : l.transitions) {
      out[base + t.src].push_back({intern(t.label), base + t.dst});
    }
    for (std::size_t s : l.terminating) terminating[base + s] = 1;
  }

  int intern(const multi_action& m) {
    auto [it, inserted] = ids_.try_emplace(m, static_cast<int>(labels.size()));
    if (inserted) labels.push_back(m);
    return it->second;
  }

 private:
  std::map<multi_action, int> ids_;
};

arena build_arena(const lts& a, const lts* b) {
  arena ar;
  ar.n = a.num_states + (b ? b->num_states : 0);
  ar.out.resize(ar.n);
  ar.terminating.assign(ar.n, 0);
  ar.absorb(a, 0);
  if (b) ar.absorb(*b, a.num_states);
  return ar;
}

using blocks = std::vector<std::size_t>;
using signature = std::vector<std::pair<int, std::size_t>>;

signature signature_of(const arena& ar, std::size_t s, const blocks& pi) {
  signature sig;
  sig.reserve(ar.out[s].size());
  for (const auto& [label, dst] : ar.out[s]) sig.push_back({label, pi[dst]});
  std::sort(sig.begin(), sig.end());
  sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
  return sig;
}

// Kanellakis-Smolka style signature refinement. Returns the partition after
// every round; history[0] splits on the termination flag only.
std::vector<blocks> refine(const arena& ar) {
  std::vector<blocks> history;
  blocks pi(ar.n);
  {
    std::map<char, std::size_t> ids;
    for (std::size_t s = 0; s < ar.n; ++s) {
      auto [it, _] = ids.try_emplace(ar.terminating[s], ids.size());
      pi[s] = it->second;
    }
  }
  history.push_back(pi);
  std::size_t count = history.back().empty() ? 0 : 1 + *std::max_element(pi.begin(), pi.end());
  while (true) {
    std::map<std::pair<std::size_t, signature>, std::size_t> ids;
    blocks next(ar.n);
    for (std::size_t s = 0; s < ar.n; ++s) {
      auto key = std::make_pair(pi[s], signature_of(ar, s, pi));
      auto [it, _] = ids.try_emplace(std::move(key), ids.size());
      next[s] = it->second;
    }
    if (ids.size() == count) break;
    count = ids.size();
    pi = std::move(next);
    history.push_back(pi);
  }
  return history;
}

std::size_t differ_round(const std::vector<blocks>& history, std::size_t x,
                         std::size_t y) {
  for (std::size_t r = 0; r < history.size(); ++r) {
    if (history[r][x] != history[r][y]) return r;
  }
  return history.size();
}

// Shortest-first distinguishing trace: descend through the refinement
// history along the earliest signature mismatch until one side cannot match
// a label or the termination flags differ.
void build_witness(const arena& ar, const std::vector<blocks>& history,
                   std::size_t s1, std::size_t s2, bisim_result& out) {
  std::size_t r = differ_round(history, s1, s2);
  if (r == 0) {
    out.note = ar.terminating[s1]
                   ? "first process terminates here, second does not"
                   : "second process terminates here, first does not";
    return;
  }
  const blocks& prev = history[r - 1];
  signature sig1 = signature_of(ar, s1, prev);
  signature sig2 = signature_of(ar, s2, prev);
  // first element present on exactly one side
  std::pair<int, std::size_t> elem{};
  bool from_first = true;
  {
    signature only1, only2;
    std::set_difference(sig1.begin(), sig1.end(), sig2.begin(), sig2.end(),
                        std::back_inserter(only1));
    std::set_difference(sig2.begin(), sig2.end(), sig1.begin(), sig1.end(),
                        std::back_inserter(only2));
    if (!only1.empty() && (only2.empty() || only1.front() <= only2.front())) {
      elem = only1.front();
    } else {
      elem = only2.front();
      from_first = false;
    }
  }
  std::size_t mover = from_first ? s1 : s2;
  std::size_t other = from_first ? s2 : s1;
  std::size_t t_mover = ar.n;
  for (const auto& [label, dst] : ar.out[mover]) {
    if (label == elem.first && prev[dst] == elem.second && dst < t_mover) {
      t_mover = dst;
    }
  }
  out.witness.push_back(ar.labels[elem.first]);
  std::size_t t_other = ar.n;
  std::size_t best = history.size() + 1;
  for (const auto& [label, dst] : ar.out[other]) {
    if (label != elem.first) continue;
    std::size_t d = differ_round(history, t_mover, dst);
    if (d < best || (d == best && dst < t_other)) {
      best = d;
      t_other = dst;
    }
  }
  if (t_other == ar.n) {
    out.note = std::string("only the ") + (from_first ? "first" : "second") +
               " process can perform " + to_string(ar.labels[elem.first]) +
               " at this point";
    return;
  }
  build_witness(ar, history, from_first ? t_mover : t_other,
                from_first ? t_other : t_mover, out);
}

blocks dense_final(const std::vector<blocks>& history, std::size_t n) {
  // renumber final blocks by first occurrence
  const blocks& fin = history.back();
  blocks out(n);
  std::map<std::size_t, std::size_t> ids;
  for (std::size_t s = 0; s < n; ++s) {
    auto [it, _] = ids.try_emplace(fin[s], ids.size());
    out[s] = it->second;
  }
  return out;
}

}  // namespace

std::vector<std::size_t> bisimulation_partition(const lts& l) {
  arena ar = build_arena(l, nullptr);
  return dense_final(refine(ar), ar.n);
}

bisim_result bisimilar(const lts& a, const lts& b) {
  arena ar = build_arena(a, &b);
  std::vector<blocks> history = refine(ar);
  std::size_t ia = a.initial;
  std::size_t ib = a.num_states + b.initial;
  bisim_result out;
  out.equivalent = history.back()[ia] == history.back()[ib];
  if (!out.equivalent) build_witness(ar, history, ia, ib, out);
  return out;
}

lts reduce(const lts& l) {
  std::vector<std::size_t> pi = bisimulation_partition(l);
  lts out;
  out.num_states = pi.empty() ? 0 : 1 + *std::max_element(pi.begin(), pi.end());
  out.initial = pi.empty() ? 0 : pi[l.initial];
  std::vector<transition> ts;
  ts.reserve(l.transitions.size());
  for (const transition& t : l.transitions) {
    ts.push_back({pi[t.src], t.label, pi[t.dst]});
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  out.transitions = std::move(ts);
  for (std::size_t s : l.terminating) out.terminating.insert(pi[s]);
  return out;
}

}  // namespace mpa
