#include "mpa/axioms.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>

#include "mpa/equivalence.hpp"
#include "mpa/random.hpp"
#include "mpa/semantics.hpp"
#include "mpa/splitting.hpp"
#include "mpa/text.hpp"

namespace mpa {

namespace {

struct instance {
  term_ptr lhs;
  term_ptr rhs;
};

// One law of the equational theory; make returns nullopt when a random draw
// cannot satisfy the side condition (the runner redraws).
struct schema {
  const char* name;
  std::function<std::optional<instance>(rng_engine&)> make;
};

const std::vector<action>& alpha3() {
  static const std::vector<action> a = small_alphabet(3);
  return a;
}

term_ptr lit(const multi_action& m) { return make_multi_action(m); }

multi_action rma(rng_engine& rng) {
  return random_multi_action(rng, alpha3(), 2, false);
}

multi_action rma_act(rng_engine& rng) {
  return random_multi_action(rng, alpha3(), 2, true);
}

// multi-action literal or deadlock, the alpha-delta shape several laws allow
term_ptr adelta(rng_engine& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  if (u(rng) < 0.15) return make_deadlock();
  return lit(rma(rng));
}

term_ptr proc(rng_engine& rng) { return random_term(rng, alpha3(), 3); }

action one_of(rng_engine& rng, const std::vector<action>& pool) {
  std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
  return pool[d(rng)];
}

action_set rset(rng_engine& rng, int max_size) {
  std::uniform_int_distribution<int> d(0, max_size);
  action_set out;
  for (int n = d(rng); n > 0; --n) out.insert(one_of(rng, alpha3()));
  return out;
}

std::set<multi_action> rallow(rng_engine& rng) {
  std::uniform_int_distribution<int> d(1, 3);
  std::set<multi_action> out;
  for (int n = d(rng); n > 0; --n) out.insert(rma_act(rng));
  return out;
}

std::map<action, action> rrename(rng_engine& rng) {
  std::uniform_int_distribution<int> d(1, 2);
  std::map<action, action> out;
  for (int n = d(rng); n > 0; --n) {
    out.emplace(one_of(rng, alpha3()), one_of(rng, alpha3()));
  }
  return out;
}

// one rule x|y -> z with x, y, z pairwise distinct
std::vector<comm_rule> rcomm(rng_engine& rng) {
  std::vector<action> pool = alpha3();
  std::shuffle(pool.begin(), pool.end(), rng);
  return {{multi_action{pool[0], pool[1]}, pool[2]}};
}

instance eq(term_ptr l, term_ptr r) { return {std::move(l), std::move(r)}; }

// wrapper context shared by the Q laws: two base actions, their tag pairs at
// the empty word, and terms drawn over base plus tag actions
struct wrapper_context {
  substitution_environment env;
  tag_pair_set used;
  std::vector<action> mixed;

  wrapper_context()
      : env(definition{"Main", make_deadlock()},
            action_set{action("a"), action("b")}) {
    branch_word w;
    for (const action& a : env.alphabet()) {
      used.insert({a, w});
      mixed.push_back(a);
      mixed.push_back(env.disseminate(a, w));
      mixed.push_back(env.discover(a, w));
    }
  }

  term_ptr wrap(const term_ptr& t) const { return enclose(t, env, used); }
  term_ptr draw(rng_engine& rng) const { return random_term(rng, mixed, 2); }
};

const wrapper_context& wctx() {
  static const wrapper_context c;
  return c;
}

std::vector<schema> build_schemas() {
  using opt = std::optional<instance>;
  std::vector<schema> s;
  auto add = [&](const char* name, std::function<opt(rng_engine&)> f) {
    s.push_back({name, std::move(f)});
  };

  // multi-action laws, lifted to leaf processes
  add("MA1 commutativity of join", [](rng_engine& rng) -> opt {
    multi_action a = rma(rng), b = rma(rng);
    return eq(lit(join(a, b)), lit(join(b, a)));
  });
  add("MA2 associativity of join", [](rng_engine& rng) -> opt {
    multi_action a = rma(rng), b = rma(rng), c = rma(rng);
    return eq(lit(join(join(a, b), c)), lit(join(a, join(b, c))));
  });
  add("MA3 tau neutral for join", [](rng_engine& rng) -> opt {
    multi_action a = rma(rng);
    return eq(lit(join(a, multi_action())), lit(a));
  });

  // choice and sequence
  add("A1 choice commutes", [](rng_engine& rng) -> opt {
    term_ptr p = proc(rng), q = proc(rng);
    return eq(make_alt(p, q), make_alt(q, p));
  });
  add("A2 choice associates", [](rng_engine& rng) -> opt {
    term_ptr p = proc(rng), q = proc(rng), r = proc(rng);
    return eq(make_alt(p, make_alt(q, r)), make_alt(make_alt(p, q), r));
  });
  add("A3 choice idempotent", [](rng_engine& rng) -> opt {
    term_ptr p = proc(rng);
    return eq(make_alt(p, p), p);
  });
  add("A4 sequence distributes right over choice", [](rng_engine& rng) -> opt {
    term_ptr p = proc(rng), q = proc(rng), r = proc(rng);
    return eq(make_seq(make_alt(p, q), r),
              make_alt(make_seq(p, r), make_seq(q, r)));
  });
  add("A5 sequence associates", [](rng_engine& rng) -> opt {
    term_ptr p = proc(rng), q = proc(rng), r = proc(rng);
    return eq(make_seq(make_seq(p, q), r), make_seq(p, make_seq(q, r)));
  });
  add("A6 deadlock neutral for choice", [](rng_engine& rng) -> opt {
    term_ptr p = proc(rng);
    return eq(make_alt(p, make_deadlock()), p);
  });
  add("A7 deadlock absorbs sequence", [](rng_engine& rng) -> opt {
    term_ptr p = proc(rng);
    return eq(make_seq(make_deadlock(), p), make_deadlock());
  });

  // parallel expansion
  add("M merge expansion", [](rng_engine& rng) -> opt {
    term_ptr p = proc(rng), q = proc(rng);
    return eq(make_par(p, q),
              make_alt(make_alt(make_left_merge(p, q), make_left_merge(q, p)),
                       make_sync(p, q)));
  });
  add("LM1 left merge of a prefix", [](rng_engine& rng) -> opt {
    term_ptr a = adelta(rng), p = proc(rng);
    return eq(make_left_merge(a, p), make_seq(a, p));
  });
  add("LM2 left merge of deadlock", [](rng_engine& rng) -> opt {
    term_ptr p = proc(rng);
    return eq(make_left_merge(make_deadlock(), p), make_deadlock());
  });
  add("LM3 left merge shifts into parallel", [](rng_engine& rng) -> opt {
    term_ptr a = lit(rma(rng));
    term_ptr p = proc(rng), q = proc(rng);
    return eq(make_left_merge(make_seq(a, p), q),
              make_seq(a, make_par(p, q)));
  });
  add("LM4 left merge distributes over choice", [](rng_engine& rng) -> opt {
    term_ptr p = proc(rng), q = proc(rng), r = proc(rng);
    return eq(make_left_merge(make_alt(p, q), r),
              make_alt(make_left_merge(p, r), make_left_merge(q, r)));
  });

  // synchronous product
  add("S1 sync commutes", [](rng_engine& rng) -> opt {
    term_ptr p = proc(rng), q = proc(rng);
    return eq(make_sync(p, q), make_sync(q, p));
  });
  add("S2 sync associates", [](rng_engine& rng) -> opt {
    term_ptr p = proc(rng), q = proc(rng), r = proc(rng);
    return eq(make_sync(make_sync(p, q), r), make_sync(p, make_sync(q, r)));
  });
  add("S3 tau neutral for sync", [](rng_engine& rng) -> opt {
    term_ptr p = proc(rng);
    return eq(make_sync(p, make_tau()), p);
  });
  add("S4 deadlock absorbs sync", [](rng_engine& rng) -> opt {
    return eq(make_sync(adelta(rng), make_deadlock()), make_deadlock());
  });
  add("S5 sync against a prefix", [](rng_engine& rng) -> opt {
    term_ptr a = adelta(rng), b = adelta(rng), p = proc(rng);
    return eq(make_sync(make_seq(a, p), b), make_seq(make_sync(a, b), p));
  });
  add("S6 sync of two prefixes", [](rng_engine& rng) -> opt {
    term_ptr a = adelta(rng), b = adelta(rng);
    term_ptr p = proc(rng), q = proc(rng);
    return eq(make_sync(make_seq(a, p), make_seq(b, q)),
              make_seq(make_sync(a, b), make_par(p, q)));
  });
  add("S7 sync distributes over choice", [](rng_engine& rng) -> opt {
    term_ptr p = proc(rng), q = proc(rng), r = proc(rng);
    return eq(make_sync(make_alt(p, q), r),
              make_alt(make_sync(p, r), make_sync(q, r)));
  });
  add("SMA sync of multi-actions is join", [](rng_engine& rng) -> opt {
    multi_action a = rma(rng), b = rma(rng);
    return eq(make_sync(lit(a), lit(b)), lit(join(a, b)));
  });

  // allow
  add("V1 allow keeps permitted labels", [](rng_engine& rng) -> opt {
    std::set<multi_action> v = rallow(rng);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    multi_action a;
    if (u(rng) > 0.25) {
      std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
      a = *std::next(v.begin(), static_cast<std::ptrdiff_t>(d(rng)));
    }
    return eq(make_allow(v, lit(a)), lit(a));
  });
  add("V2 allow refuses other labels", [](rng_engine& rng) -> opt {
    std::set<multi_action> v = rallow(rng);
    for (int tries = 0; tries < 50; ++tries) {
      multi_action a = rma_act(rng);
      if (v.count(a) == 0) return eq(make_allow(v, lit(a)), make_deadlock());
    }
    return std::nullopt;
  });
  add("V3 allow of deadlock", [](rng_engine& rng) -> opt {
    return eq(make_allow(rallow(rng), make_deadlock()), make_deadlock());
  });
  add("V4 allow distributes over choice", [](rng_engine& rng) -> opt {
    std::set<multi_action> v = rallow(rng);
    term_ptr a = lit(rma(rng)), b = lit(rma(rng));
    return eq(make_allow(v, make_alt(a, b)),
              make_alt(make_allow(v, a), make_allow(v, b)));
  });
  add("V5 allow distributes over sequence", [](rng_engine& rng) -> opt {
    std::set<multi_action> v = rallow(rng);
    term_ptr a = lit(rma(rng)), b = lit(rma(rng));
    return eq(make_allow(v, make_seq(a, b)),
              make_seq(make_allow(v, a), make_allow(v, b)));
  });

  // block
  add("B1 block passes tau", [](rng_engine& rng) -> opt {
    return eq(make_block(rset(rng, 2), make_tau()), make_tau());
  });
  add("B2 block passes other actions", [](rng_engine& rng) -> opt {
    action_set b = rset(rng, 2);
    for (int tries = 0; tries < 50; ++tries) {
      action a = one_of(rng, alpha3());
      if (b.count(a) == 0) {
        return eq(make_block(b, lit(multi_action{a})), lit(multi_action{a}));
      }
    }
    return std::nullopt;
  });
  add("B3 block refuses blocked actions", [](rng_engine& rng) -> opt {
    action_set b = rset(rng, 2);
    if (b.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> d(0, b.size() - 1);
    action a = *std::next(b.begin(), static_cast<std::ptrdiff_t>(d(rng)));
    return eq(make_block(b, lit(multi_action{a})), make_deadlock());
  });
  add("B4 block distributes over sync", [](rng_engine& rng) -> opt {
    action_set b = rset(rng, 2);
    term_ptr x = lit(rma(rng)), y = lit(rma(rng));
    return eq(make_block(b, make_sync(x, y)),
              make_sync(make_block(b, x), make_block(b, y)));
  });
  add("B5 block of deadlock", [](rng_engine& rng) -> opt {
    return eq(make_block(rset(rng, 2), make_deadlock()), make_deadlock());
  });
  add("B6 block distributes over choice", [](rng_engine& rng) -> opt {
    action_set b = rset(rng, 2);
    term_ptr x = lit(rma(rng)), y = lit(rma(rng));
    return eq(make_block(b, make_alt(x, y)),
              make_alt(make_block(b, x), make_block(b, y)));
  });
  add("B7 block distributes over sequence", [](rng_engine& rng) -> opt {
    action_set b = rset(rng, 2);
    term_ptr x = lit(rma(rng)), y = lit(rma(rng));
    return eq(make_block(b, make_seq(x, y)),
              make_seq(make_block(b, x), make_block(b, y)));
  });

  // rename
  add("R1 rename passes tau", [](rng_engine& rng) -> opt {
    return eq(make_rename(rrename(rng), make_tau()), make_tau());
  });
  add("R2 rename maps a listed action", [](rng_engine& rng) -> opt {
    std::map<action, action> r = rrename(rng);
    std::uniform_int_distribution<std::size_t> d(0, r.size() - 1);
    auto it = std::next(r.begin(), static_cast<std::ptrdiff_t>(d(rng)));
    return eq(make_rename(r, lit(multi_action{it->first})),
              lit(multi_action{it->second}));
  });
  add("R3 rename keeps unlisted actions", [](rng_engine& rng) -> opt {
    std::map<action, action> r = rrename(rng);
    for (int tries = 0; tries < 50; ++tries) {
      action a = one_of(rng, alpha3());
      if (r.count(a) == 0) {
        return eq(make_rename(r, lit(multi_action{a})), lit(multi_action{a}));
      }
    }
    return std::nullopt;
  });
  add("R4 rename distributes over sync", [](rng_engine& rng) -> opt {
    std::map<action, action> r = rrename(rng);
    term_ptr x = lit(rma(rng)), y = lit(rma(rng));
    return eq(make_rename(r, make_sync(x, y)),
              make_sync(make_rename(r, x), make_rename(r, y)));
  });
  add("R5 rename of deadlock", [](rng_engine& rng) -> opt {
    return eq(make_rename(rrename(rng), make_deadlock()), make_deadlock());
  });
  add("R6 rename distributes over choice", [](rng_engine& rng) -> opt {
    std::map<action, action> r = rrename(rng);
    term_ptr x = lit(rma(rng)), y = lit(rma(rng));
    return eq(make_rename(r, make_alt(x, y)),
              make_alt(make_rename(r, x), make_rename(r, y)));
  });
  add("R7 rename distributes over sequence", [](rng_engine& rng) -> opt {
    std::map<action, action> r = rrename(rng);
    term_ptr x = lit(rma(rng)), y = lit(rma(rng));
    return eq(make_rename(r, make_seq(x, y)),
              make_seq(make_rename(r, x), make_rename(r, y)));
  });

  // communication
  add("C1 communication rewrites a leaf", [](rng_engine& rng) -> opt {
    std::vector<comm_rule> c = rcomm(rng);
    multi_action a = random_multi_action(rng, alpha3(), 3, false);
    return eq(make_comm(c, lit(a)), lit(gamma(c, a)));
  });
  add("C2 communication of deadlock", [](rng_engine& rng) -> opt {
    return eq(make_comm(rcomm(rng), make_deadlock()), make_deadlock());
  });
  add("C3 communication distributes over choice", [](rng_engine& rng) -> opt {
    std::vector<comm_rule> c = rcomm(rng);
    term_ptr x = lit(rma(rng)), y = lit(rma(rng));
    return eq(make_comm(c, make_alt(x, y)),
              make_alt(make_comm(c, x), make_comm(c, y)));
  });
  add("C4 communication distributes over sequence", [](rng_engine& rng) -> opt {
    std::vector<comm_rule> c = rcomm(rng);
    term_ptr x = lit(rma(rng)), y = lit(rma(rng));
    return eq(make_comm(c, make_seq(x, y)),
              make_seq(make_comm(c, x), make_comm(c, y)));
  });
  add("CL1 communication skips a disjoint process", [](rng_engine& rng) -> opt {
    // subject over {a} only, rule over {b, c}; the side condition asks that
    // the downclosed alphabet avoid the rule domain
    term_ptr p = random_sequential_term(rng, {action("a")}, 3, false);
    std::vector<comm_rule> c{{multi_action{action("b"), action("c")}, action("a")}};
    std::set<multi_action> reach = downclose(alphabet(p));
    for (const multi_action& m : comm_domain(c)) {
      if (reach.count(m)) return std::nullopt;
    }
    return eq(make_comm(c, p), p);
  });

  // hide
  add("H1 hide passes tau", [](rng_engine& rng) -> opt {
    return eq(make_hide(rset(rng, 2), make_tau()), make_tau());
  });
  add("H2 hide silences hidden actions", [](rng_engine& rng) -> opt {
    action_set i = rset(rng, 2);
    if (i.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> d(0, i.size() - 1);
    action a = *std::next(i.begin(), static_cast<std::ptrdiff_t>(d(rng)));
    return eq(make_hide(i, lit(multi_action{a})), make_tau());
  });
  add("H3 hide keeps other actions", [](rng_engine& rng) -> opt {
    action_set i = rset(rng, 2);
    for (int tries = 0; tries < 50; ++tries) {
      action a = one_of(rng, alpha3());
      if (i.count(a) == 0) {
        return eq(make_hide(i, lit(multi_action{a})), lit(multi_action{a}));
      }
    }
    return std::nullopt;
  });
  add("H4 hide distributes over sync", [](rng_engine& rng) -> opt {
    action_set i = rset(rng, 2);
    term_ptr x = lit(rma(rng)), y = lit(rma(rng));
    return eq(make_hide(i, make_sync(x, y)),
              make_sync(make_hide(i, x), make_hide(i, y)));
  });
  add("H5 hide of deadlock", [](rng_engine& rng) -> opt {
    return eq(make_hide(rset(rng, 2), make_deadlock()), make_deadlock());
  });
  add("H6 hide distributes over choice", [](rng_engine& rng) -> opt {
    action_set i = rset(rng, 2);
    term_ptr x = lit(rma(rng)), y = lit(rma(rng));
    return eq(make_hide(i, make_alt(x, y)),
              make_alt(make_hide(i, x), make_hide(i, y)));
  });
  add("H7 hide distributes over sequence", [](rng_engine& rng) -> opt {
    action_set i = rset(rng, 2);
    term_ptr x = lit(rma(rng)), y = lit(rma(rng));
    return eq(make_hide(i, make_seq(x, y)),
              make_seq(make_hide(i, x), make_hide(i, y)));
  });

  // the split wrapper
  add("Q1 wrapper passes tau", [](rng_engine&) -> opt {
    return eq(wctx().wrap(make_tau()), make_tau());
  });
  add("Q2 wrapper passes deadlock", [](rng_engine&) -> opt {
    return eq(wctx().wrap(make_deadlock()), make_deadlock());
  });
  add("Q3 wrapper distributes over choice", [](rng_engine& rng) -> opt {
    term_ptr p = wctx().draw(rng), q = wctx().draw(rng);
    return eq(wctx().wrap(make_alt(p, q)),
              make_alt(wctx().wrap(p), wctx().wrap(q)));
  });
  add("Q4 wrapper distributes over sequence", [](rng_engine& rng) -> opt {
    term_ptr p = wctx().draw(rng), q = wctx().draw(rng);
    return eq(wctx().wrap(make_seq(p, q)),
              make_seq(wctx().wrap(p), wctx().wrap(q)));
  });

  return s;
}

}  // namespace

std::vector<axiom_check> run_axiom_suite(std::uint64_t seed, int per_axiom) {
  static const specification no_defs;
  std::vector<schema> schemas = build_schemas();
  std::vector<axiom_check> out;
  out.reserve(schemas.size());
  for (std::size_t i = 0; i < schemas.size(); ++i) {
    const schema& s = schemas[i];
    axiom_check check;
    check.name = s.name;
    rng_engine rng(seed * 1000003u + i);
    int made = 0;
    for (int attempts = per_axiom * 40; made < per_axiom && attempts > 0;
         --attempts) {
      std::optional<instance> inst = s.make(rng);
      if (!inst) continue;
      ++made;
      lts left = explore(inst->lhs, no_defs, 20000);
      lts right = explore(inst->rhs, no_defs, 20000);
      if (bisimilar(left, right).equivalent) {
        ++check.passed;
      } else {
        ++check.failed;
        if (check.first_failure.empty()) {
          check.first_failure =
              format(inst->lhs) + "  vs  " + format(inst->rhs);
        }
      }
    }
    if (made < per_axiom) {
      check.failed += per_axiom - made;
      if (check.first_failure.empty()) {
        check.first_failure = "could not instantiate the side condition";
      }
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace mpa
