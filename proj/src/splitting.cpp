#include "mpa/splitting.hpp"

#include <algorithm>
#include <map>

#include "mpa/error.hpp"

namespace mpa {

branch_word::branch_word(std::string digits) : digits_(std::move(digits)) {
  for (char c : digits_) {
    if (c != '1' && c != '2') {
      throw error(errc::usage_error, "branch word must be a string over {1,2}");
    }
  }
}

branch_word branch_word::child(int i) const {
  branch_word w = *this;
  w.digits_ += static_cast<char>('0' + i);
  return w;
}

action fresh(tag t, const action& base, const branch_word& w) {
  if (base.name().find(name_separator) != std::string::npos) {
    throw error(errc::reserved_separator,
                "action '" + base.name() + "' already carries a generated name");
  }
  return action(base.name() + name_separator + (t == tag::disseminate ? "f" : "g") +
                name_separator + w.digits());
}

std::string split_reference_name(const std::string& def_name,
                                 const action_set& a, const branch_word& w) {
  std::string joined;
  for (const action& act : a) {
    if (!joined.empty()) joined += ',';
    joined += act.name();
  }
  return def_name + name_separator + "split" + name_separator + joined +
         name_separator + w.digits();
}

substitution_environment::substitution_environment(definition main,
                                                  action_set alphabet,
                                                  action tau_action)
    : main_(std::move(main)), alphabet_(std::move(alphabet)), tau_(std::move(tau_action)) {
  if (alphabet_.count(tau_) > 0) {
    throw error(errc::usage_error,
                "the silent placeholder '" + tau_.name() + "' must stay outside the alphabet");
  }
  for (const action& a : alphabet_) {
    if (a.name().find(name_separator) != std::string::npos) {
      throw error(errc::reserved_separator,
                  "alphabet action '" + a.name() + "' contains the reserved separator");
    }
  }
}

action substitution_environment::disseminate(const action& a, const branch_word& w) const {
  if (alphabet_.count(a) == 0) {
    throw error(errc::action_outside_alphabet,
                "action '" + a.name() + "' is not in the environment alphabet");
  }
  return fresh(tag::disseminate, a, w);
}

action substitution_environment::discover(const action& a, const branch_word& w) const {
  if (alphabet_.count(a) == 0) {
    throw error(errc::action_outside_alphabet,
                "action '" + a.name() + "' is not in the environment alphabet");
  }
  return fresh(tag::discover, a, w);
}

tag_pair_set env_dom(const substitution_environment& env,
                     const std::set<branch_word>& words) {
  tag_pair_set out;
  for (const action& a : env.alphabet()) {
    for (const branch_word& w : words) out.insert({a, w});
  }
  return out;
}

std::vector<comm_rule> env_comm(const substitution_environment& env,
                                const tag_pair_set& used) {
  std::vector<comm_rule> rules;
  rules.reserve(used.size());
  for (const auto& [a, w] : used) {
    rules.push_back({multi_action{env.disseminate(a, w), env.discover(a, w)},
                     env.tau_action()});
  }
  return rules;
}

action_set env_img(const substitution_environment& env, const tag_pair_set& used) {
  action_set out;
  for (const auto& [a, w] : used) {
    out.insert(env.disseminate(a, w));
    out.insert(env.discover(a, w));
  }
  return out;
}

namespace {

void require_subset(const action_set& a, const action_set& alphabet) {
  for (const action& x : a) {
    if (alphabet.count(x) == 0) {
      throw error(errc::action_outside_alphabet,
                  "action '" + x.name() + "' is not in the environment alphabet");
    }
  }
}

// Shared worker for both isolation halves. `keep` holds the actions this
// half performs itself (tagged f); the complement is observed as bare g
// tags. Choice branches extend the word so tags from different branches can
// never fuse across the choice.
term_ptr isolate_impl(const term_ptr& t, const action_set& keep,
                      const branch_word& w, const substitution_environment& env,
                      tag_pair_set* used, bool advance) {
  switch (t->kind()) {
    case op::multi_act: {
      if (t->label().is_tau()) return t;
      std::vector<action> mapped;
      for (const action& a : t->label().actions()) {
        if (keep.count(a) > 0) {
          mapped.push_back(a);
          mapped.push_back(env.disseminate(a, w));
        } else {
          mapped.push_back(env.discover(a, w));
        }
        if (used) used->insert({a, w});
      }
      return make_multi_action(multi_action(std::move(mapped)));
    }
    case op::deadlock:
      return t;
    case op::alt:
      return make_alt(
          isolate_impl(t->left(), keep, advance ? w.child(1) : w, env, used, advance),
          isolate_impl(t->right(), keep, advance ? w.child(2) : w, env, used, advance));
    case op::seq:
      return make_seq(isolate_impl(t->left(), keep, w, env, used, advance),
                      isolate_impl(t->right(), keep, w, env, used, advance));
    default:
      throw error(errc::not_sequential,
                  "isolation is defined on sequential processes only");
  }
}

action_set alphabet_complement(const action_set& a,
                               const substitution_environment& env) {
  action_set keep;
  for (const action& x : env.alphabet()) {
    if (a.count(x) == 0) keep.insert(x);
  }
  return keep;
}

}  // namespace

term_ptr isolate(const term_ptr& t, const action_set& a, const branch_word& w,
                 const substitution_environment& env, tag_pair_set* used) {
  require_subset(a, env.alphabet());
  return isolate_impl(t, a, w, env, used, true);
}

term_ptr coisolate(const term_ptr& t, const action_set& a, const branch_word& w,
                   const substitution_environment& env, tag_pair_set* used) {
  require_subset(a, env.alphabet());
  return isolate_impl(t, alphabet_complement(a, env), w, env, used, true);
}

term_ptr enclose(const term_ptr& t, const substitution_environment& env,
                 const tag_pair_set& used) {
  return make_block(env_img(env, used),
                    make_hide({env.tau_action()},
                              make_comm(env_comm(env, used), t)));
}

namespace {

struct splitter {
  const specification& spec;
  const substitution_environment& env;
  const action_set& a;
  branch_word w;
  split_options opts;
  std::map<std::string, std::string> memo;
  std::vector<definition> new_definitions;
  std::vector<std::string> warnings;

  term_ptr enclose_chunk(const term_ptr& t) {
    tag_pair_set used;
    term_ptr iso = isolate_impl(t, a, w, env, &used, opts.advance_branch_words);
    term_ptr coiso = isolate_impl(t, alphabet_complement(a, env), w, env, &used,
                                  opts.advance_branch_words);
    return enclose(make_par(iso, coiso), env, used);
  }

  term_ptr go(const term_ptr& t) {
    if (is_sequential(t)) return enclose_chunk(t);
    switch (t->kind()) {
      case op::alt:
      case op::seq: {
        // Group maximal sequential runs so e.g. a.b.P splits the whole a.b
        // block into one enclosure instead of one per action.
        std::vector<term_ptr> items = chain_view(t, t->kind());
        std::vector<term_ptr> pieces;
        for (std::size_t i = 0; i < items.size();) {
          if (is_sequential(items[i])) {
            std::size_t j = i;
            while (j + 1 < items.size() && is_sequential(items[j + 1])) ++j;
            term_ptr chunk = items[j];
            for (std::size_t k = j; k-- > i;) {
              chunk = make_binary(t->kind(), items[k], chunk);
            }
            pieces.push_back(enclose_chunk(chunk));
            i = j + 1;
          } else {
            pieces.push_back(go(items[i]));
            ++i;
          }
        }
        term_ptr acc = pieces.back();
        for (std::size_t k = pieces.size() - 1; k-- > 0;) {
          acc = make_binary(t->kind(), pieces[k], acc);
        }
        return acc;
      }
      case op::par:
      case op::left_merge:
      case op::sync:
        return make_binary(t->kind(), go(t->left()), go(t->right()));
      case op::allow:
        return make_allow(t->allow_set(), go(t->operand()));
      case op::block:
        return make_block(t->actions_arg(), go(t->operand()));
      case op::ren:
        return make_rename(t->rename_map(), go(t->operand()));
      case op::comm:
        return make_comm(t->comm_rules(), go(t->operand()));
      case op::hide: {
        action_set inner = acts(t->operand(), spec);
        for (const action& h : t->actions_arg()) {
          if (inner.count(h) > 0) {
            warnings.push_back(
                "splitting under hide{" + h.name() +
                "}: hiding occurring actions can introduce silent steps, which "
                "voids the equivalence guarantee");
            break;
          }
        }
        return make_hide(t->actions_arg(), go(t->operand()));
      }
      case op::reference: {
        auto it = memo.find(t->reference());
        if (it != memo.end()) return make_reference(it->second);
        std::string gen = split_reference_name(t->reference(), a, w);
        memo.emplace(t->reference(), gen);
        const definition* def = spec.find(t->reference());
        if (def == nullptr) {
          throw error(errc::unknown_reference,
                      "undefined process '" + t->reference() + "'");
        }
        term_ptr body = go(normalize(def->body));
        new_definitions.push_back({gen, body});
        return make_reference(gen);
      }
      default:
        return t;  // unreachable: leaves are sequential
    }
  }
};

}  // namespace

split_result split(const term_ptr& t, const action_set& a, const branch_word& w,
                   const substitution_environment& env, const specification& spec,
                   const split_options& opts) {
  require_subset(a, env.alphabet());
  require_subset(acts(t, spec), env.alphabet());
  if (!is_tau_free(t, spec)) {
    throw error(errc::not_tau_free, "the subject of a split must not contain tau");
  }
  splitter s{spec, env, a, w, opts, {}, {}, {}};
  term_ptr out = s.go(normalize(t));
  return {out, std::move(s.new_definitions), std::move(s.warnings)};
}

specification split_specification(const specification& spec, const action_set& a,
                                  const branch_word& w, const split_options& opts,
                                  std::vector<std::string>* warnings) {
  validate(spec);
  if (!is_tau_free(spec)) {
    throw error(errc::not_tau_free, "the subject of a split must not contain tau");
  }
  const definition* root = spec.find(spec.root());
  action_set alpha = acts(spec);
  alpha.insert(a.begin(), a.end());
  substitution_environment env(*root, std::move(alpha));
  require_subset(a, env.alphabet());

  splitter s{spec, env, a, w, opts, {}, {}, {}};
  std::string root_name = split_reference_name(root->name, a, w);
  s.memo.emplace(root->name, root_name);
  term_ptr body = s.go(normalize(root->body));

  specification out;
  out.add({root_name, body});
  for (definition& def : s.new_definitions) out.add(std::move(def));
  if (warnings) {
    warnings->insert(warnings->end(), s.warnings.begin(), s.warnings.end());
  }
  return out;
}

}  // namespace mpa
