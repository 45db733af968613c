#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "mpa/multiaction.hpp"

namespace mpa {

/// Node kinds of the process AST.
enum class op {
  multi_act,   // multi-action leaf; tau is the empty one
  deadlock,    // delta
  reference,   // named process reference
  alt,         // choice p + q
  seq,         // sequence p . q
  par,         // parallel p || q
  left_merge,  // p starts first, then parallel
  sync,        // synchronous product
  allow,       // keep only listed multi-actions (tau always passes)
  block,       // drop transitions containing a listed action
  ren,         // actionwise renaming
  comm,        // communication: fuse sub-multiactions by rule
  hide,        // delete listed actions from labels
};

/// One communication rule lhs -> result. lhs is a multi-action with at
/// least two actions (checked by validate, not by construction).
struct comm_rule {
  multi_action lhs;
  action result;

  auto operator<=>(const comm_rule&) const = default;
};

class process_term;
using term_ptr = std::shared_ptr<const process_term>;

/// Immutable, shareable process term. Build through the make_* factories.
class process_term {
 public:
  op kind() const noexcept { return kind_; }

  // Accessors are only meaningful for the matching kind.
  const multi_action& label() const noexcept { return label_; }
  const std::string& reference() const noexcept { return name_; }
  const term_ptr& left() const noexcept { return left_; }
  const term_ptr& right() const noexcept { return right_; }
  const term_ptr& operand() const noexcept { return left_; }
  const std::set<multi_action>& allow_set() const noexcept { return allowed_; }
  const action_set& actions_arg() const noexcept { return acts_; }  // block/hide
  const std::map<action, action>& rename_map() const noexcept { return renaming_; }
  const std::vector<comm_rule>& comm_rules() const noexcept { return rules_; }

  struct key;  // construction guard

  process_term(key, op kind);

 private:
  friend term_ptr make_multi_action(multi_action);
  friend term_ptr make_deadlock();
  friend term_ptr make_reference(std::string);
  friend term_ptr make_binary(op, term_ptr, term_ptr);
  friend term_ptr make_allow(std::set<multi_action>, term_ptr);
  friend term_ptr make_block(action_set, term_ptr);
  friend term_ptr make_rename(std::map<action, action>, term_ptr);
  friend term_ptr make_comm(std::vector<comm_rule>, term_ptr);
  friend term_ptr make_hide(action_set, term_ptr);

  op kind_;
  multi_action label_;
  std::string name_;
  term_ptr left_;
  term_ptr right_;
  std::set<multi_action> allowed_;
  action_set acts_;
  std::map<action, action> renaming_;
  std::vector<comm_rule> rules_;
};

term_ptr make_multi_action(multi_action label);
term_ptr make_tau();
term_ptr make_deadlock();
term_ptr make_reference(std::string name);
term_ptr make_binary(op kind, term_ptr left, term_ptr right);
term_ptr make_alt(term_ptr left, term_ptr right);
term_ptr make_seq(term_ptr left, term_ptr right);
term_ptr make_par(term_ptr left, term_ptr right);
term_ptr make_left_merge(term_ptr left, term_ptr right);
term_ptr make_sync(term_ptr left, term_ptr right);
term_ptr make_allow(std::set<multi_action> allowed, term_ptr operand);
term_ptr make_block(action_set blocked, term_ptr operand);
term_ptr make_rename(std::map<action, action> renaming, term_ptr operand);
term_ptr make_comm(std::vector<comm_rule> rules, term_ptr operand);
term_ptr make_hide(action_set hidden, term_ptr operand);

/// Total order on terms; 0 on structural equality.
int compare(const process_term& a, const process_term& b);
bool equal(const term_ptr& a, const term_ptr& b);

struct term_less {
  bool operator()(const term_ptr& a, const term_ptr& b) const {
    return compare(*a, *b) < 0;
  }
};

/// Local normal form: alt and seq chains re-associated to the right.
/// No axiom-level rewriting (no reordering, no deduplication).
term_ptr normalize(const term_ptr& t);

/// Right-leaning chain view of nested alt (or seq) nodes.
std::vector<term_ptr> chain_view(const term_ptr& t, op kind);

struct definition {
  std::string name;
  term_ptr body;
};

/// An ordered collection of definitions. The first definition is the root.
class specification {
 public:
  specification() = default;
  explicit specification(std::vector<definition> definitions);

  const std::vector<definition>& definitions() const noexcept { return defs_; }
  bool empty() const noexcept { return defs_.empty(); }
  const std::string& root() const;
  const definition* find(const std::string& name) const;
  void add(definition def);  // rejects duplicate names

 private:
  std::vector<definition> defs_;
};

/// Distinct actions of all multi-action leaves reachable from t, following
/// each referenced definition once. Operator payloads do not contribute.
action_set acts(const term_ptr& t, const specification& spec);

/// acts of the root closure.
action_set acts(const specification& spec);

/// True iff t is built from multi-actions, deadlock, alt and seq only.
bool is_sequential(const term_ptr& t);

/// True iff no multi-action leaf reachable from t is tau.
bool is_tau_free(const term_ptr& t, const specification& spec);
bool is_tau_free(const specification& spec);

/// Apply communication rules to a multi-action: every disjoint occurrence of
/// a rule lhs is replaced by the rule result. Requires rule lhs supports to
/// be pairwise disjoint and no result action to occur in any lhs.
multi_action gamma(const std::vector<comm_rule>& rules, const multi_action& a);

/// Alphabet of a sequential (basic) process: the set of multi-actions at its
/// leaves, where tau and deadlock contribute nothing.
std::set<multi_action> alphabet(const term_ptr& t);

/// All nonempty sub-multisets of the members of v, tau excluded.
std::set<multi_action> downclose(const std::set<multi_action>& v);

/// Left-hand sides of a rule set.
std::set<multi_action> comm_domain(const std::vector<comm_rule>& rules);

/// Whole-specification well-formedness: references resolve, recursion is
/// self-only and action-guarded, no tau in allow sets or comm rule sides,
/// comm lhs sizes are >= 2. Throws mpa::error on the first violation.
void validate(const specification& spec);

}  // namespace mpa
