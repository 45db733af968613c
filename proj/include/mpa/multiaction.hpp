#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace mpa {

/// A named atomic action. Identity is the name.
class action {
 public:
  explicit action(std::string name);

  const std::string& name() const noexcept { return name_; }

  auto operator<=>(const action&) const = default;

 private:
  std::string name_;
};

using action_set = std::set<action>;

/// A finite multiset of actions. The empty multiset is the silent step tau.
/// Always kept in canonical form: actions sorted by name, multiplicity as
/// repetition. Structural equality on the canonical form therefore decides
/// multiset equality.
class multi_action {
 public:
  multi_action() = default;  // tau
  explicit multi_action(std::vector<action> actions);
  multi_action(std::initializer_list<action> actions);

  bool is_tau() const noexcept { return bag_.empty(); }
  std::size_t size() const noexcept { return bag_.size(); }
  const std::vector<action>& actions() const noexcept { return bag_; }

  auto operator<=>(const multi_action&) const = default;

 private:
  std::vector<action> bag_;
};

/// Multiset union.
multi_action join(const multi_action& a, const multi_action& b);

/// True iff a is a sub-multiset of b (counting multiplicity).
bool submulti(const multi_action& a, const multi_action& b);

/// Multiset difference a minus b; surplus occurrences in b are ignored.
multi_action subtract(const multi_action& a, const multi_action& b);

/// Support set: the distinct actions occurring in a.
action_set acts_of(const multi_action& a);

bool is_tau(const multi_action& a);

/// Plain rendering: "a|b|b", or "tau" for the empty multi-action.
std::string to_string(const action& a);
std::string to_string(const multi_action& a);

}  // namespace mpa
