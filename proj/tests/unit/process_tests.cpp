#include "doctest.h"

#include <algorithm>

#include "mpa/error.hpp"
#include "mpa/process.hpp"
#include "mpa/random.hpp"

using namespace mpa;

namespace {

const action a{"a"}, b{"b"}, c{"c"}, d{"d"}, e{"e"};

term_ptr act(const char* name) {
  return make_multi_action(multi_action{action(name)});
}

}  // namespace

TEST_CASE("factories expose their payloads") {
  term_ptr m = make_multi_action(multi_action{a, b});
  CHECK(m->kind() == op::multi_act);
  CHECK(m->label() == multi_action{a, b});

  term_ptr r = make_reference("P");
  CHECK(r->kind() == op::reference);
  CHECK(r->reference() == "P");

  term_ptr s = make_seq(m, r);
  CHECK(s->kind() == op::seq);
  CHECK(equal(s->left(), m));
  CHECK(equal(s->right(), r));

  term_ptr h = make_hide({a}, s);
  CHECK(h->kind() == op::hide);
  CHECK(h->actions_arg() == action_set{a});
  CHECK(equal(h->operand(), s));
}

TEST_CASE("structural comparison is a strict total order") {
  std::vector<term_ptr> terms = {
      make_tau(),
      make_deadlock(),
      act("a"),
      act("b"),
      make_alt(act("a"), act("b")),
      make_seq(act("a"), act("b")),
      make_par(act("a"), act("b")),
      make_reference("P"),
      make_allow({multi_action{a}}, act("a")),
  };
  std::sort(terms.begin(), terms.end(), term_less{});
  for (std::size_t i = 0; i < terms.size(); ++i) {
    CHECK(compare(*terms[i], *terms[i]) == 0);
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      CHECK(compare(*terms[i], *terms[j]) < 0);
      CHECK(compare(*terms[j], *terms[i]) > 0);
    }
  }
  CHECK(equal(make_seq(act("a"), act("b")), make_seq(act("a"), act("b"))));
  CHECK_FALSE(equal(make_seq(act("a"), act("b")), make_seq(act("b"), act("a"))));
}

TEST_CASE("normalization re-associates chains to the right") {
  term_ptr left_leaning = make_alt(make_alt(act("a"), act("b")), act("c"));
  term_ptr n = normalize(left_leaning);
  CHECK(n->kind() == op::alt);
  CHECK(n->left()->kind() == op::multi_act);
  CHECK(n->right()->kind() == op::alt);
  CHECK(equal(n, make_alt(act("a"), make_alt(act("b"), act("c")))));

  term_ptr seqs = make_seq(make_seq(act("a"), act("b")), act("c"));
  CHECK(equal(normalize(seqs), make_seq(act("a"), make_seq(act("b"), act("c")))));

  // operand order is untouched; only the association changes
  term_ptr mixed = make_alt(make_alt(act("b"), act("a")), act("c"));
  CHECK(equal(normalize(mixed), make_alt(act("b"), make_alt(act("a"), act("c")))));
}

TEST_CASE("normalization is idempotent on random terms") {
  rng_engine rng(11);
  auto alphabet = small_alphabet(3);
  for (int i = 0; i < 100; ++i) {
    term_ptr t = random_term(rng, alphabet, 4);
    term_ptr n = normalize(t);
    CHECK(equal(n, normalize(n)));
  }
}

TEST_CASE("chain view flattens one operator level") {
  term_ptr t = make_alt(make_alt(act("a"), act("b")), make_alt(act("c"), act("d")));
  auto parts = chain_view(normalize(t), op::alt);
  REQUIRE(parts.size() == 4);
  CHECK(equal(parts[0], act("a")));
  CHECK(equal(parts[3], act("d")));
  CHECK(chain_view(act("a"), op::alt).size() == 1);
}

TEST_CASE("acts collects leaf actions through references, not payloads") {
  specification spec;
  spec.add({"P", make_seq(act("a"), make_reference("Q"))});
  spec.add({"Q", make_allow({multi_action{c}}, make_rename({{b, d}}, act("b")))});
  CHECK(acts(spec) == action_set{a, b});
  CHECK(acts(make_reference("Q"), spec) == action_set{b});
}

TEST_CASE("sequential and tau-free predicates") {
  CHECK(is_sequential(make_alt(make_seq(act("a"), make_deadlock()), act("b"))));
  CHECK_FALSE(is_sequential(make_par(act("a"), act("b"))));
  CHECK_FALSE(is_sequential(make_reference("P")));

  specification spec;
  spec.add({"P", make_seq(act("a"), make_reference("P"))});
  CHECK(is_tau_free(spec));
  specification spec2;
  spec2.add({"P", make_seq(make_tau(), make_reference("P"))});
  CHECK_FALSE(is_tau_free(spec2));
}

TEST_CASE("communication rewrites every disjoint occurrence") {
  std::vector<comm_rule> ab_to_c = {{multi_action{a, b}, c}};
  CHECK(gamma(ab_to_c, multi_action{a, b, a}) == multi_action{a, c});
  CHECK(gamma(ab_to_c, multi_action{a, a, b, b}) == multi_action{c, c});
  CHECK(gamma(ab_to_c, multi_action{a, c}) == multi_action{a, c});
  CHECK(gamma(ab_to_c, multi_action{}) == multi_action{});

  std::vector<comm_rule> two = {{multi_action{a, b}, c}, {multi_action{d, e}, c}};
  CHECK(gamma(two, multi_action{a, b, d, e, d}) == multi_action{c, c, d});
}

TEST_CASE("communication rejects overlapping or self-feeding rule sets") {
  CHECK_THROWS_WITH_AS(
      gamma({{multi_action{a, b}, c}, {multi_action{b, d}, e}}, multi_action{a}),
      doctest::Contains("occurs in two communication lhs"), error);
  // a repeated action inside one lhs overlaps with itself
  CHECK_THROWS_AS(gamma({{multi_action{a, a}, b}}, multi_action{a}), error);
  // a result occurring in a lhs would make the outcome order-dependent
  CHECK_THROWS_WITH_AS(gamma({{multi_action{a, b}, a}}, multi_action{a}),
                       doctest::Contains("result action"), error);
  CHECK_THROWS_AS(gamma({{multi_action{}, a}}, multi_action{a}), error);
}

TEST_CASE("alphabet of a basic process") {
  term_ptr t = make_alt(make_seq(make_multi_action(multi_action{a, b}), act("c")),
                        act("d"));
  CHECK(alphabet(t) ==
        std::set<multi_action>{multi_action{a, b}, multi_action{c}, multi_action{d}});
  CHECK(alphabet(make_alt(make_tau(), make_deadlock())) == std::set<multi_action>{});
  CHECK_THROWS_AS(alphabet(make_par(act("a"), act("b"))), error);
}

TEST_CASE("downward closure enumerates nonempty sub-multisets") {
  std::set<multi_action> v = {multi_action{a, b}, multi_action{c}};
  CHECK(downclose(v) == std::set<multi_action>{multi_action{a}, multi_action{b},
                                               multi_action{a, b}, multi_action{c}});
  CHECK(downclose({multi_action{a, a}}) ==
        std::set<multi_action>{multi_action{a}, multi_action{a, a}});
  CHECK(downclose({}) == std::set<multi_action>{});
}

TEST_CASE("comm domain lists the rule left-hand sides") {
  CHECK(comm_domain({{multi_action{a, b}, c}, {multi_action{d, e}, c}}) ==
        std::set<multi_action>{multi_action{a, b}, multi_action{d, e}});
}

TEST_CASE("validation catches ill-formed specifications") {
  auto check_error = [](specification spec, errc expected) {
    try {
      validate(spec);
      FAIL_CHECK("expected an error");
    } catch (const error& err) {
      CHECK(err.code() == expected);
    }
  };

  specification unknown;
  unknown.add({"P", make_reference("Q")});
  check_error(unknown, errc::unknown_reference);

  specification mutual;
  mutual.add({"P", make_seq(act("a"), make_reference("Q"))});
  mutual.add({"Q", make_seq(act("b"), make_reference("P"))});
  check_error(mutual, errc::mutual_recursion);

  specification unguarded;
  unguarded.add({"P", make_alt(make_reference("P"), act("a"))});
  check_error(unguarded, errc::unguarded_recursion);

  specification tau_allow;
  tau_allow.add({"P", make_allow({multi_action{}}, act("a"))});
  check_error(tau_allow, errc::tau_in_allow_set);

  specification short_rule;
  short_rule.add({"P", make_comm({{multi_action{a}, b}}, act("a"))});
  check_error(short_rule, errc::invalid_comm_rule);

  // a guard on the left of seq is enough, even through another operator
  specification fine;
  fine.add({"P", make_seq(make_alt(act("a"), act("b")), make_reference("P"))});
  CHECK_NOTHROW(validate(fine));
}

TEST_CASE("duplicate definitions are rejected at insertion") {
  specification spec;
  spec.add({"P", act("a")});
  CHECK_THROWS_AS(spec.add({"P", act("b")}), error);
}
