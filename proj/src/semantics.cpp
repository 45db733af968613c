#include "mpa/semantics.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>

#include "mpa/error.hpp"

namespace mpa {

namespace {

using raw_steps = std::vector<step_result>;

// null successors mark successful termination and absorb in parallel
// composition: v || q = q, p || v = p, v || v = v.
term_ptr par_after(const term_ptr& l, const term_ptr& r) {
  if (l == nullptr) return r;
  if (r == nullptr) return l;
  return make_par(l, r);
}

void steps_of(const term_ptr& t, const specification& spec, raw_steps& out);

raw_steps steps_of(const term_ptr& t, const specification& spec) {
  raw_steps out;
  steps_of(t, spec, out);
  return out;
}

void steps_of(const term_ptr& t, const specification& spec, raw_steps& out) {
  switch (t->kind()) {
    case op::multi_act:
      out.push_back({t->label(), nullptr});
      return;
    case op::deadlock:
      return;
    case op::reference: {
      const definition* def = spec.find(t->reference());
      if (def == nullptr) {
        throw error(errc::unknown_reference, "undefined process '" + t->reference() + "'");
      }
      steps_of(def->body, spec, out);
      return;
    }
    case op::alt:
      steps_of(t->left(), spec, out);
      steps_of(t->right(), spec, out);
      return;
    case op::seq:
      for (step_result& s : steps_of(t->left(), spec)) {
        out.push_back({std::move(s.label),
                       s.successor ? make_seq(s.successor, t->right()) : t->right()});
      }
      return;
    case op::par: {
      raw_steps ls = steps_of(t->left(), spec);
      raw_steps rs = steps_of(t->right(), spec);
      for (const step_result& s : ls) {
        out.push_back({s.label, par_after(s.successor, t->right())});
      }
      for (const step_result& s : rs) {
        out.push_back({s.label, par_after(t->left(), s.successor)});
      }
      for (const step_result& a : ls) {
        for (const step_result& b : rs) {
          out.push_back({join(a.label, b.label), par_after(a.successor, b.successor)});
        }
      }
      return;
    }
    case op::left_merge:
      for (const step_result& s : steps_of(t->left(), spec)) {
        out.push_back({s.label, par_after(s.successor, t->right())});
      }
      return;
    case op::sync: {
      raw_steps ls = steps_of(t->left(), spec);
      raw_steps rs = steps_of(t->right(), spec);
      for (const step_result& a : ls) {
        for (const step_result& b : rs) {
          out.push_back({join(a.label, b.label), par_after(a.successor, b.successor)});
        }
      }
      return;
    }
    case op::allow:
      for (step_result& s : steps_of(t->operand(), spec)) {
        if (!s.label.is_tau() && t->allow_set().count(s.label) == 0) continue;
        out.push_back({std::move(s.label),
                       s.successor ? make_allow(t->allow_set(), s.successor) : nullptr});
      }
      return;
    case op::block:
      for (step_result& s : steps_of(t->operand(), spec)) {
        bool hit = false;
        for (const action& a : s.label.actions()) {
          if (t->actions_arg().count(a) > 0) { hit = true; break; }
        }
        if (hit) continue;
        out.push_back({std::move(s.label),
                       s.successor ? make_block(t->actions_arg(), s.successor) : nullptr});
      }
      return;
    case op::ren:
      for (step_result& s : steps_of(t->operand(), spec)) {
        std::vector<action> renamed;
        renamed.reserve(s.label.size());
        for (const action& a : s.label.actions()) {
          auto it = t->rename_map().find(a);
          renamed.push_back(it == t->rename_map().end() ? a : it->second);
        }
        out.push_back({multi_action(std::move(renamed)),
                       s.successor ? make_rename(t->rename_map(), s.successor) : nullptr});
      }
      return;
    case op::comm:
      for (step_result& s : steps_of(t->operand(), spec)) {
        out.push_back({gamma(t->comm_rules(), s.label),
                       s.successor ? make_comm(t->comm_rules(), s.successor) : nullptr});
      }
      return;
    case op::hide:
      for (step_result& s : steps_of(t->operand(), spec)) {
        std::vector<action> kept;
        for (const action& a : s.label.actions()) {
          if (t->actions_arg().count(a) == 0) kept.push_back(a);
        }
        out.push_back({multi_action(std::move(kept)),
                       s.successor ? make_hide(t->actions_arg(), s.successor) : nullptr});
      }
      return;
  }
}

bool step_less(const step_result& a, const step_result& b) {
  if (a.label != b.label) return a.label < b.label;
  if (a.successor == nullptr || b.successor == nullptr) {
    return a.successor == nullptr && b.successor != nullptr;
  }
  return compare(*a.successor, *b.successor) < 0;
}

bool step_eq(const step_result& a, const step_result& b) {
  if (a.label != b.label) return false;
  if ((a.successor == nullptr) != (b.successor == nullptr)) return false;
  return a.successor == nullptr || compare(*a.successor, *b.successor) == 0;
}

}  // namespace

std::vector<step_result> step(const term_ptr& t, const specification& spec) {
  raw_steps out = steps_of(t, spec);
  for (step_result& s : out) {
    if (s.successor) s.successor = normalize(s.successor);
  }
  std::sort(out.begin(), out.end(), step_less);
  out.erase(std::unique(out.begin(), out.end(), step_eq), out.end());
  return out;
}

namespace {

// State identity: normalized AST, with one extra fold. A state whose normal
// form coincides with some definition body is represented by the bare
// reference, so recursive definitions return to the state they started in
// instead of spawning an unfolded twin of it.
class state_namer {
 public:
  explicit state_namer(const specification& spec) {
    for (const definition& def : spec.definitions()) {
      bodies_.push_back({normalize(def.body), def.name});
    }
  }

  term_ptr canonical(const term_ptr& t) const {
    term_ptr n = normalize(t);
    if (n->kind() != op::reference) {
      for (const auto& [body, name] : bodies_) {
        if (compare(*n, *body) == 0) return make_reference(name);
      }
    }
    return n;
  }

 private:
  std::vector<std::pair<term_ptr, std::string>> bodies_;
};

}  // namespace

lts explore(const term_ptr& root, const specification& spec,
            std::size_t max_states) {
  state_namer namer(spec);
  lts out;
  std::map<term_ptr, std::size_t, term_less> index;
  std::deque<term_ptr> queue;
  std::optional<std::size_t> terminated;

  auto intern = [&](const term_ptr& t) {
    auto [it, inserted] = index.try_emplace(t, out.num_states);
    if (inserted) {
      if (++out.num_states > max_states) {
        throw error(errc::state_bound_exceeded,
                    "state space exceeds " + std::to_string(max_states) +
                        " states (possibly infinite)");
      }
      queue.push_back(t);
    }
    return it->second;
  };
  auto intern_terminated = [&]() {
    if (!terminated) {
      terminated = out.num_states;
      if (++out.num_states > max_states) {
        throw error(errc::state_bound_exceeded,
                    "state space exceeds " + std::to_string(max_states) + " states");
      }
      out.terminating.insert(*terminated);
    }
    return *terminated;
  };

  out.initial = intern(namer.canonical(root));
  while (!queue.empty()) {
    term_ptr t = queue.front();
    queue.pop_front();
    std::size_t src = index.at(t);
    raw_steps ss = steps_of(t, spec);
    for (step_result& s : ss) {
      if (s.successor) s.successor = namer.canonical(s.successor);
    }
    std::sort(ss.begin(), ss.end(), step_less);
    ss.erase(std::unique(ss.begin(), ss.end(), step_eq), ss.end());
    for (const step_result& s : ss) {
      std::size_t dst = s.successor ? intern(s.successor) : intern_terminated();
      out.transitions.push_back({src, s.label, dst});
    }
  }
  return out;
}

lts explore(const specification& spec, std::size_t max_states) {
  return explore(spec, spec.root(), max_states);
}

lts explore(const specification& spec, const std::string& root_name,
            std::size_t max_states) {
  validate(spec);
  if (spec.find(root_name) == nullptr) {
    throw error(errc::unknown_reference, "undefined process '" + root_name + "'");
  }
  return explore(make_reference(root_name), spec, max_states);
}

}  // namespace mpa
