#include "mpa/multiaction.hpp"

#include <algorithm>

#include "mpa/error.hpp"

namespace mpa {

action::action(std::string name) : name_(std::move(name)) {
  if (name_.empty()) {
    throw error(errc::usage_error, "action name must be nonempty");
  }
}

multi_action::multi_action(std::vector<action> actions)
    : bag_(std::move(actions)) {
  std::sort(bag_.begin(), bag_.end());
}

multi_action::multi_action(std::initializer_list<action> actions)
    : multi_action(std::vector<action>(actions)) {}

multi_action join(const multi_action& a, const multi_action& b) {
  std::vector<action> merged;
  merged.reserve(a.size() + b.size());
  std::merge(a.actions().begin(), a.actions().end(), b.actions().begin(),
             b.actions().end(), std::back_inserter(merged));
  return multi_action(std::move(merged));
}

bool submulti(const multi_action& a, const multi_action& b) {
  return std::includes(b.actions().begin(), b.actions().end(),
                       a.actions().begin(), a.actions().end());
}

multi_action subtract(const multi_action& a, const multi_action& b) {
  std::vector<action> rest;
  std::set_difference(a.actions().begin(), a.actions().end(),
                      b.actions().begin(), b.actions().end(),
                      std::back_inserter(rest));
  return multi_action(std::move(rest));
}

action_set acts_of(const multi_action& a) {
  return action_set(a.actions().begin(), a.actions().end());
}

bool is_tau(const multi_action& a) { return a.is_tau(); }

std::string to_string(const action& a) { return a.name(); }

std::string to_string(const multi_action& a) {
  if (a.is_tau()) return "tau";
  std::string out;
  for (const action& act : a.actions()) {
    if (!out.empty()) out += '|';
    out += act.name();
  }
  return out;
}

}  // namespace mpa
