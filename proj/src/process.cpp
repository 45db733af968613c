#include "mpa/process.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "mpa/error.hpp"

namespace mpa {

struct process_term::key {};

process_term::process_term(key, op kind) : kind_(kind) {}

namespace {

template <typename T>
int cmp(const T& a, const T& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

std::shared_ptr<process_term> blank(op kind) {
  return std::make_shared<process_term>(process_term::key{}, kind);
}

}  // namespace

term_ptr make_multi_action(multi_action label) {
  auto t = blank(op::multi_act);
  t->label_ = std::move(label);
  return t;
}

term_ptr make_tau() { return make_multi_action(multi_action()); }

term_ptr make_deadlock() { return blank(op::deadlock); }

term_ptr make_reference(std::string name) {
  if (name.empty()) {
    throw error(errc::usage_error, "reference name must be nonempty");
  }
  auto t = blank(op::reference);
  t->name_ = std::move(name);
  return t;
}

term_ptr make_binary(op kind, term_ptr left, term_ptr right) {
  auto t = blank(kind);
  t->left_ = std::move(left);
  t->right_ = std::move(right);
  return t;
}

term_ptr make_alt(term_ptr l, term_ptr r) { return make_binary(op::alt, std::move(l), std::move(r)); }
term_ptr make_seq(term_ptr l, term_ptr r) { return make_binary(op::seq, std::move(l), std::move(r)); }
term_ptr make_par(term_ptr l, term_ptr r) { return make_binary(op::par, std::move(l), std::move(r)); }
term_ptr make_left_merge(term_ptr l, term_ptr r) { return make_binary(op::left_merge, std::move(l), std::move(r)); }
term_ptr make_sync(term_ptr l, term_ptr r) { return make_binary(op::sync, std::move(l), std::move(r)); }

term_ptr make_allow(std::set<multi_action> allowed, term_ptr operand) {
  auto t = blank(op::allow);
  t->allowed_ = std::move(allowed);
  t->left_ = std::move(operand);
  return t;
}

term_ptr make_block(action_set blocked, term_ptr operand) {
  auto t = blank(op::block);
  t->acts_ = std::move(blocked);
  t->left_ = std::move(operand);
  return t;
}

term_ptr make_rename(std::map<action, action> renaming, term_ptr operand) {
  auto t = blank(op::ren);
  t->renaming_ = std::move(renaming);
  t->left_ = std::move(operand);
  return t;
}

term_ptr make_comm(std::vector<comm_rule> rules, term_ptr operand) {
  std::sort(rules.begin(), rules.end());
  rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
  auto t = blank(op::comm);
  t->rules_ = std::move(rules);
  t->left_ = std::move(operand);
  return t;
}

term_ptr make_hide(action_set hidden, term_ptr operand) {
  auto t = blank(op::hide);
  t->acts_ = std::move(hidden);
  t->left_ = std::move(operand);
  return t;
}

int compare(const process_term& a, const process_term& b) {
  if (&a == &b) return 0;
  if (int c = cmp(static_cast<int>(a.kind()), static_cast<int>(b.kind()))) return c;
  switch (a.kind()) {
    case op::multi_act:
      return cmp(a.label(), b.label());
    case op::deadlock:
      return 0;
    case op::reference:
      return cmp(a.reference(), b.reference());
    case op::alt:
    case op::seq:
    case op::par:
    case op::left_merge:
    case op::sync:
      if (int c = compare(*a.left(), *b.left())) return c;
      return compare(*a.right(), *b.right());
    case op::allow:
      if (int c = cmp(a.allow_set(), b.allow_set())) return c;
      return compare(*a.operand(), *b.operand());
    case op::block:
    case op::hide:
      if (int c = cmp(a.actions_arg(), b.actions_arg())) return c;
      return compare(*a.operand(), *b.operand());
    case op::ren:
      if (int c = cmp(a.rename_map(), b.rename_map())) return c;
      return compare(*a.operand(), *b.operand());
    case op::comm:
      if (int c = cmp(a.comm_rules(), b.comm_rules())) return c;
      return compare(*a.operand(), *b.operand());
  }
  return 0;
}

bool equal(const term_ptr& a, const term_ptr& b) { return compare(*a, *b) == 0; }

namespace {

void collect_chain(const term_ptr& t, op kind, std::vector<term_ptr>& out) {
  if (t->kind() == kind) {
    collect_chain(t->left(), kind, out);
    collect_chain(t->right(), kind, out);
  } else {
    out.push_back(t);
  }
}

}  // namespace

std::vector<term_ptr> chain_view(const term_ptr& t, op kind) {
  std::vector<term_ptr> out;
  collect_chain(t, kind, out);
  return out;
}

term_ptr normalize(const term_ptr& t) {
  switch (t->kind()) {
    case op::multi_act:
    case op::deadlock:
    case op::reference:
      return t;
    case op::alt:
    case op::seq: {
      std::vector<term_ptr> items = chain_view(t, t->kind());
      for (term_ptr& item : items) item = normalize(item);
      term_ptr acc = items.back();
      for (std::size_t i = items.size() - 1; i-- > 0;) {
        acc = make_binary(t->kind(), items[i], acc);
      }
      return acc;
    }
    case op::par:
    case op::left_merge:
    case op::sync: {
      term_ptr l = normalize(t->left());
      term_ptr r = normalize(t->right());
      if (l == t->left() && r == t->right()) return t;
      return make_binary(t->kind(), std::move(l), std::move(r));
    }
    case op::allow: {
      term_ptr x = normalize(t->operand());
      return x == t->operand() ? t : make_allow(t->allow_set(), std::move(x));
    }
    case op::block: {
      term_ptr x = normalize(t->operand());
      return x == t->operand() ? t : make_block(t->actions_arg(), std::move(x));
    }
    case op::ren: {
      term_ptr x = normalize(t->operand());
      return x == t->operand() ? t : make_rename(t->rename_map(), std::move(x));
    }
    case op::comm: {
      term_ptr x = normalize(t->operand());
      return x == t->operand() ? t : make_comm(t->comm_rules(), std::move(x));
    }
    case op::hide: {
      term_ptr x = normalize(t->operand());
      return x == t->operand() ? t : make_hide(t->actions_arg(), std::move(x));
    }
  }
  return t;
}

specification::specification(std::vector<definition> definitions) {
  for (definition& def : definitions) add(std::move(def));
}

const std::string& specification::root() const {
  if (defs_.empty()) {
    throw error(errc::usage_error, "specification has no definitions");
  }
  return defs_.front().name;
}

const definition* specification::find(const std::string& name) const {
  for (const definition& def : defs_) {
    if (def.name == name) return &def;
  }
  return nullptr;
}

void specification::add(definition def) {
  if (find(def.name) != nullptr) {
    throw error(errc::duplicate_definition, "definition '" + def.name + "' declared twice");
  }
  defs_.push_back(std::move(def));
}

namespace {

void acts_into(const term_ptr& t, const specification& spec,
               std::set<std::string>& visited, action_set& out) {
  switch (t->kind()) {
    case op::multi_act:
      for (const action& a : t->label().actions()) out.insert(a);
      return;
    case op::deadlock:
      return;
    case op::reference: {
      if (!visited.insert(t->reference()).second) return;
      const definition* def = spec.find(t->reference());
      if (def == nullptr) {
        throw error(errc::unknown_reference, "undefined process '" + t->reference() + "'");
      }
      acts_into(def->body, spec, visited, out);
      return;
    }
    case op::alt:
    case op::seq:
    case op::par:
    case op::left_merge:
    case op::sync:
      acts_into(t->left(), spec, visited, out);
      acts_into(t->right(), spec, visited, out);
      return;
    default:
      acts_into(t->operand(), spec, visited, out);
      return;
  }
}

}  // namespace

action_set acts(const term_ptr& t, const specification& spec) {
  action_set out;
  std::set<std::string> visited;
  acts_into(t, spec, visited, out);
  return out;
}

action_set acts(const specification& spec) {
  return acts(make_reference(spec.root()), spec);
}

bool is_sequential(const term_ptr& t) {
  switch (t->kind()) {
    case op::multi_act:
    case op::deadlock:
      return true;
    case op::alt:
    case op::seq:
      return is_sequential(t->left()) && is_sequential(t->right());
    default:
      return false;
  }
}

namespace {

bool tau_free_walk(const term_ptr& t, const specification& spec,
                   std::set<std::string>& visited) {
  switch (t->kind()) {
    case op::multi_act:
      return !t->label().is_tau();
    case op::deadlock:
      return true;
    case op::reference: {
      if (!visited.insert(t->reference()).second) return true;
      const definition* def = spec.find(t->reference());
      if (def == nullptr) {
        throw error(errc::unknown_reference, "undefined process '" + t->reference() + "'");
      }
      return tau_free_walk(def->body, spec, visited);
    }
    case op::alt:
    case op::seq:
    case op::par:
    case op::left_merge:
    case op::sync:
      return tau_free_walk(t->left(), spec, visited) &&
             tau_free_walk(t->right(), spec, visited);
    default:
      return tau_free_walk(t->operand(), spec, visited);
  }
}

}  // namespace

bool is_tau_free(const term_ptr& t, const specification& spec) {
  std::set<std::string> visited;
  return tau_free_walk(t, spec, visited);
}

bool is_tau_free(const specification& spec) {
  return is_tau_free(make_reference(spec.root()), spec);
}

multi_action gamma(const std::vector<comm_rule>& rules, const multi_action& a) {
  action_set lhs_support;
  for (const comm_rule& rule : rules) {
    if (rule.lhs.is_tau()) {
      throw error(errc::invalid_comm_rule, "communication lhs must not be tau");
    }
    for (const action& act : rule.lhs.actions()) {
      if (!lhs_support.insert(act).second) {
        throw error(errc::overlapping_comm_rules,
                    "action '" + act.name() + "' occurs in two communication lhs");
      }
    }
  }
  // A result action inside some lhs would make the outcome depend on rule
  // order; reject to keep the function confluent.
  for (const comm_rule& rule : rules) {
    if (lhs_support.count(rule.result) > 0) {
      throw error(errc::overlapping_comm_rules,
                  "result action '" + rule.result.name() +
                      "' occurs in a communication lhs");
    }
  }
  multi_action rest = a;
  std::vector<action> produced;
  for (const comm_rule& rule : rules) {
    while (submulti(rule.lhs, rest)) {
      rest = subtract(rest, rule.lhs);
      produced.push_back(rule.result);
    }
  }
  return join(rest, multi_action(std::move(produced)));
}

std::set<multi_action> alphabet(const term_ptr& t) {
  switch (t->kind()) {
    case op::multi_act:
      if (t->label().is_tau()) return {};
      return {t->label()};
    case op::deadlock:
      return {};
    case op::alt:
    case op::seq: {
      std::set<multi_action> out = alphabet(t->left());
      std::set<multi_action> r = alphabet(t->right());
      out.insert(r.begin(), r.end());
      return out;
    }
    default:
      throw error(errc::not_basic_process,
                  "alphabet is defined on basic (sequential) processes only");
  }
}

namespace {

void sub_multisets(const std::vector<std::pair<action, int>>& counts,
                   std::size_t i, std::vector<action>& acc,
                   std::set<multi_action>& out) {
  if (i == counts.size()) {
    if (!acc.empty()) out.insert(multi_action(acc));
    return;
  }
  sub_multisets(counts, i + 1, acc, out);
  for (int k = 1; k <= counts[i].second; ++k) {
    for (int j = 0; j < k; ++j) acc.push_back(counts[i].first);
    sub_multisets(counts, i + 1, acc, out);
    for (int j = 0; j < k; ++j) acc.pop_back();
  }
}

}  // namespace

std::set<multi_action> downclose(const std::set<multi_action>& v) {
  std::set<multi_action> out;
  for (const multi_action& m : v) {
    std::vector<std::pair<action, int>> counts;
    for (const action& a : m.actions()) {
      if (!counts.empty() && counts.back().first == a) {
        ++counts.back().second;
      } else {
        counts.emplace_back(a, 1);
      }
    }
    std::vector<action> acc;
    sub_multisets(counts, 0, acc, out);
  }
  return out;
}

std::set<multi_action> comm_domain(const std::vector<comm_rule>& rules) {
  std::set<multi_action> out;
  for (const comm_rule& rule : rules) out.insert(rule.lhs);
  return out;
}

namespace {

// A reference occurs unguarded when the one-step relation of the enclosing
// term inspects it before any action happens: anywhere except the right
// argument of seq.
bool unguarded(const term_ptr& t, const std::string& name) {
  switch (t->kind()) {
    case op::multi_act:
    case op::deadlock:
      return false;
    case op::reference:
      return t->reference() == name;
    case op::seq:
      return unguarded(t->left(), name);
    case op::alt:
    case op::par:
    case op::left_merge:
    case op::sync:
      return unguarded(t->left(), name) || unguarded(t->right(), name);
    default:
      return unguarded(t->operand(), name);
  }
}

void check_payloads(const term_ptr& t, const specification& spec,
                    const std::string& def_name) {
  switch (t->kind()) {
    case op::multi_act:
    case op::deadlock:
      return;
    case op::reference:
      if (spec.find(t->reference()) == nullptr) {
        throw error(errc::unknown_reference,
                    "undefined process '" + t->reference() + "' in " + def_name);
      }
      return;
    case op::alt:
    case op::seq:
    case op::par:
    case op::left_merge:
    case op::sync:
      check_payloads(t->left(), spec, def_name);
      check_payloads(t->right(), spec, def_name);
      return;
    case op::allow:
      for (const multi_action& m : t->allow_set()) {
        if (m.is_tau()) {
          throw error(errc::tau_in_allow_set,
                      "tau in allow set in " + def_name);
        }
      }
      check_payloads(t->operand(), spec, def_name);
      return;
    case op::comm:
      for (const comm_rule& rule : t->comm_rules()) {
        if (rule.lhs.is_tau()) {
          throw error(errc::tau_in_comm_rule,
                      "tau as communication lhs in " + def_name);
        }
        if (rule.lhs.size() < 2) {
          throw error(errc::invalid_comm_rule,
                      "communication lhs needs at least two actions in " +
                          def_name + " (a single action would be a rename)");
        }
      }
      check_payloads(t->operand(), spec, def_name);
      return;
    default:
      check_payloads(t->operand(), spec, def_name);
      return;
  }
}

void collect_refs(const term_ptr& t, std::set<std::string>& out) {
  switch (t->kind()) {
    case op::multi_act:
    case op::deadlock:
      return;
    case op::reference:
      out.insert(t->reference());
      return;
    case op::alt:
    case op::seq:
    case op::par:
    case op::left_merge:
    case op::sync:
      collect_refs(t->left(), out);
      collect_refs(t->right(), out);
      return;
    default:
      collect_refs(t->operand(), out);
      return;
  }
}

}  // namespace

void validate(const specification& spec) {
  if (spec.empty()) {
    throw error(errc::usage_error, "specification has no definitions");
  }
  for (const definition& def : spec.definitions()) {
    check_payloads(def.body, spec, def.name);
    if (unguarded(def.body, def.name)) {
      throw error(errc::unguarded_recursion,
                  "definition '" + def.name + "' reaches itself without a step");
    }
  }
  // Cross-definition cycles are out; only self-reference may recurse.
  std::map<std::string, std::set<std::string>> graph;
  for (const definition& def : spec.definitions()) {
    std::set<std::string> refs;
    collect_refs(def.body, refs);
    refs.erase(def.name);
    graph[def.name] = std::move(refs);
  }
  std::map<std::string, int> color;  // 0 new, 1 active, 2 done
  std::function<void(const std::string&)> visit = [&](const std::string& n) {
    color[n] = 1;
    for (const std::string& m : graph[n]) {
      if (color[m] == 1) {
        throw error(errc::mutual_recursion,
                    "definitions '" + n + "' and '" + m + "' reference each other");
      }
      if (color[m] == 0) visit(m);
    }
    color[n] = 2;
  };
  for (const definition& def : spec.definitions()) {
    if (color[def.name] == 0) visit(def.name);
  }
}

}  // namespace mpa
