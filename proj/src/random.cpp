#include "mpa/random.hpp"

#include <algorithm>
#include <string>

namespace mpa {

namespace {

int pick(rng_engine& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(rng_engine& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

const action& pick_action(rng_engine& rng, const std::vector<action>& alphabet) {
  return alphabet[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(alphabet.size()) - 1))];
}

}  // namespace

std::vector<action> small_alphabet(int size) {
  std::vector<action> out;
  for (int i = 0; i < size; ++i) {
    if (i < 26) {
      out.emplace_back(std::string(1, static_cast<char>('a' + i)));
    } else {
      out.emplace_back("a" + std::to_string(i));
    }
  }
  return out;
}

multi_action random_multi_action(rng_engine& rng, const std::vector<action>& alphabet,
                                 int max_size, bool tau_free) {
  int size = pick(rng, tau_free ? 1 : 0, max_size);
  std::vector<action> acts;
  for (int i = 0; i < size; ++i) acts.push_back(pick_action(rng, alphabet));
  return multi_action(std::move(acts));
}

term_ptr random_sequential_term(rng_engine& rng, const std::vector<action>& alphabet,
                                int max_depth, bool tau_free) {
  if (max_depth <= 0 || chance(rng, 0.3)) {
    if (chance(rng, 0.1)) return make_deadlock();
    return make_multi_action(random_multi_action(rng, alphabet, 2, tau_free));
  }
  term_ptr a = random_sequential_term(rng, alphabet, max_depth - 1, tau_free);
  term_ptr b = random_sequential_term(rng, alphabet, max_depth - 1, tau_free);
  return chance(rng, 0.45) ? make_alt(a, b) : make_seq(a, b);
}

term_ptr random_term(rng_engine& rng, const std::vector<action>& alphabet,
                     int max_depth) {
  if (max_depth <= 0 || chance(rng, 0.25)) {
    if (chance(rng, 0.1)) return make_deadlock();
    return make_multi_action(random_multi_action(rng, alphabet, 2, false));
  }
  auto sub = [&] { return random_term(rng, alphabet, max_depth - 1); };
  switch (pick(rng, 0, 9)) {
    case 0: return make_alt(sub(), sub());
    case 1: return make_seq(sub(), sub());
    case 2: return make_par(sub(), sub());
    case 3: return make_left_merge(sub(), sub());
    case 4: return make_sync(sub(), sub());
    case 5: {
      std::set<multi_action> allowed;
      int n = pick(rng, 1, 3);
      for (int i = 0; i < n; ++i) {
        allowed.insert(random_multi_action(rng, alphabet, 2, true));
      }
      return make_allow(std::move(allowed), sub());
    }
    case 6: {
      action_set acts;
      int n = pick(rng, 0, 2);
      for (int i = 0; i < n; ++i) acts.insert(pick_action(rng, alphabet));
      return make_block(std::move(acts), sub());
    }
    case 7: {
      std::map<action, action> ren;
      int n = pick(rng, 1, 2);
      for (int i = 0; i < n; ++i) {
        ren.emplace(pick_action(rng, alphabet), pick_action(rng, alphabet));
      }
      return make_rename(std::move(ren), sub());
    }
    case 8: {
      // one rule with two distinct partners and a result outside the lhs;
      // small alphabets may not admit one
      std::vector<action> rest = alphabet;
      if (rest.size() >= 3) {
        std::shuffle(rest.begin(), rest.end(), rng);
        comm_rule rule{multi_action{rest[0], rest[1]}, rest[2]};
        return make_comm({rule}, sub());
      }
      return make_seq(sub(), sub());
    }
    default: {
      action_set acts;
      int n = pick(rng, 0, 2);
      for (int i = 0; i < n; ++i) acts.insert(pick_action(rng, alphabet));
      return make_hide(std::move(acts), sub());
    }
  }
}

namespace {

term_ptr random_tail(rng_engine& rng, const std::vector<action>& alphabet,
                     const std::string& name, int max_depth, bool tau_free) {
  if (max_depth <= 0 || chance(rng, 0.3)) {
    if (chance(rng, 0.5)) return make_reference(name);
    return make_multi_action(random_multi_action(rng, alphabet, 2, tau_free));
  }
  switch (pick(rng, 0, 2)) {
    case 0:
      return make_alt(random_tail(rng, alphabet, name, max_depth - 1, tau_free),
                      random_tail(rng, alphabet, name, max_depth - 1, tau_free));
    case 1:
      return make_seq(
          make_multi_action(random_multi_action(rng, alphabet, 2, tau_free)),
          random_tail(rng, alphabet, name, max_depth - 1, tau_free));
    default:
      return make_reference(name);
  }
}

}  // namespace

specification random_recursive_specification(rng_engine& rng,
                                             const std::vector<action>& alphabet,
                                             int max_depth, bool tau_free) {
  const std::string name = "P";
  // every self-reference sits right of a seq with an action prefix
  int branches = pick(rng, 1, 3);
  term_ptr body;
  for (int i = 0; i < branches; ++i) {
    term_ptr prefix =
        make_multi_action(random_multi_action(rng, alphabet, 2, tau_free));
    term_ptr branch;
    if (chance(rng, 0.25)) {
      branch = prefix;  // a terminating branch keeps the process finite-ish
    } else {
      branch = make_seq(prefix,
                        random_tail(rng, alphabet, name, max_depth - 1, tau_free));
    }
    body = body ? make_alt(std::move(body), std::move(branch)) : std::move(branch);
  }
  specification spec;
  spec.add({name, body});
  return spec;
}

lts random_lts(rng_engine& rng, int max_states, int num_labels) {
  lts out;
  int n = pick(rng, 1, max_states);
  out.num_states = static_cast<std::size_t>(n);
  out.initial = 0;
  std::vector<action> letters = small_alphabet(num_labels);
  for (int s = 0; s < n; ++s) {
    int degree = pick(rng, 0, 3);
    for (int d = 0; d < degree; ++d) {
      multi_action label{letters[static_cast<std::size_t>(pick(rng, 0, num_labels - 1))]};
      out.transitions.push_back({static_cast<std::size_t>(s), label,
                                 static_cast<std::size_t>(pick(rng, 0, n - 1))});
    }
    if (chance(rng, 0.2)) out.terminating.insert(static_cast<std::size_t>(s));
  }
  std::sort(out.transitions.begin(), out.transitions.end());
  out.transitions.erase(
      std::unique(out.transitions.begin(), out.transitions.end()),
      out.transitions.end());
  return out;
}

}  // namespace mpa
