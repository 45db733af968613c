#include "doctest.h"

#include "mpa/error.hpp"
#include "mpa/random.hpp"
#include "mpa/text.hpp"

using namespace mpa;

namespace {

const action a{"a"}, b{"b"}, c{"c"}, d{"d"};

term_ptr body_of(const std::string& text) {
  specification spec = parse_specification(text);
  return spec.definitions().front().body;
}

term_ptr act(const char* name) {
  return make_multi_action(multi_action{action(name)});
}

}  // namespace

TEST_CASE("operator precedence: + below || below . below |") {
  term_ptr t = body_of("P = a|b . c + d;");
  REQUIRE(t->kind() == op::alt);
  CHECK(t->left()->kind() == op::seq);
  CHECK(t->left()->left()->label() == multi_action{a, b});
  CHECK(t->right()->label() == multi_action{d});

  t = body_of("P = a + b || c . d;");
  REQUIRE(t->kind() == op::alt);
  REQUIRE(t->right()->kind() == op::par);
  CHECK(t->right()->right()->kind() == op::seq);

  CHECK(equal(body_of("P = (a + b) . c;"),
              make_seq(make_alt(act("a"), act("b")), act("c"))));
}

TEST_CASE("chains parse right-associated") {
  CHECK(equal(body_of("P = a + b + c;"),
              make_alt(act("a"), make_alt(act("b"), act("c")))));
  CHECK(equal(body_of("P = a . b . c;"),
              make_seq(act("a"), make_seq(act("b"), act("c")))));
}

TEST_CASE("literals, calls and payload operators") {
  CHECK(body_of("P = tau;")->label().is_tau());
  CHECK(body_of("P = delta;")->kind() == op::deadlock);

  term_ptr t = body_of("P = lmerge(a, b);");
  CHECK(t->kind() == op::left_merge);
  t = body_of("P = sync(a . b, c);");
  CHECK(t->kind() == op::sync);

  t = body_of("P = allow{a|b, c}(a);");
  CHECK(t->kind() == op::allow);
  CHECK(t->allow_set() ==
        std::set<multi_action>{multi_action{a, b}, multi_action{c}});

  t = body_of("P = block{a, b}(c);");
  CHECK(t->actions_arg() == action_set{a, b});

  t = body_of("P = rename{a -> b, c -> d}(a);");
  CHECK(t->rename_map() == std::map<action, action>{{a, b}, {c, d}});

  t = body_of("P = comm{a|b -> c}(a);");
  REQUIRE(t->comm_rules().size() == 1);
  CHECK(t->comm_rules()[0].lhs == multi_action{a, b});
  CHECK(t->comm_rules()[0].result == c);

  t = body_of("P = hide{a}(a . b);");
  CHECK(t->kind() == op::hide);
}

TEST_CASE("identifiers naming definitions are references") {
  specification spec = parse_specification("P = a . Q;\nQ = b . Q;");
  term_ptr t = spec.definitions()[0].body;
  CHECK(t->right()->kind() == op::reference);
  CHECK(t->right()->reference() == "Q");
  // `a` names no definition, so it stays an action
  CHECK(t->left()->kind() == op::multi_act);
}

TEST_CASE("backtick quoting admits generated and keyword names") {
  term_ptr t = body_of("P = `a#f#12`;");
  CHECK(t->label() == multi_action{action("a#f#12")});
  // a quoted keyword is an ordinary action name
  t = body_of("P = `tau`;");
  CHECK(t->label() == multi_action{action("tau")});
  specification spec = parse_specification("`hide` = a . `hide`;");
  CHECK(spec.root() == "hide");
}

TEST_CASE("the bar operator only joins single actions") {
  CHECK_THROWS_WITH_AS(parse_specification("P = (a + b)|c;"),
                       doctest::Contains("sync"), error);
  CHECK_THROWS_AS(parse_specification("P = a|delta;"), error);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_specification("P = a .\n. b;");
    FAIL_CHECK("expected a syntax error");
  } catch (const error& err) {
    CHECK(err.code() == errc::syntax_error);
    CHECK(err.line() == 2);
    CHECK(err.column() == 1);
  }
  CHECK_THROWS_AS(parse_specification(""), error);
  CHECK_THROWS_AS(parse_specification("P = a"), error);       // missing ;
  CHECK_THROWS_AS(parse_specification("P = `a\nb`;"), error); // newline in quotes
  CHECK_THROWS_AS(parse_specification("P = a; P = b;"), error);
  CHECK_THROWS_AS(parse_specification("tau = a;"), error);
  CHECK_THROWS_AS(parse_specification("P = rename{tau -> a}(b);"), error);
  CHECK_THROWS_AS(parse_specification("P = comm{tau|a -> b}(c);"), error);
}

TEST_CASE("comments and whitespace are skipped") {
  specification spec = parse_specification(
      "% leading comment\nP = a . % trailing\n    Q;\n\nQ = b;\n");
  CHECK(spec.definitions().size() == 2);
}

TEST_CASE("formatting uses minimal parentheses") {
  CHECK(format(parse_specification("P = a|b.c + d;")) == "P = a|b . c + d;\n");
  CHECK(format(parse_specification("P = (a + b) . c;")) == "P = (a + b) . c;\n");
  CHECK(format(parse_specification("P = a + (b + c);")) == "P = a + b + c;\n");
  CHECK(format(parse_specification("P = (a + b) + c;")) == "P = (a + b) + c;\n");
  CHECK(format(parse_specification("P = a . (b . c);")) == "P = a . b . c;\n");
  CHECK(format(parse_specification("P = (a || b) . c;")) == "P = (a || b) . c;\n");
  CHECK(format(parse_specification("P = lmerge(a, sync(b, c));")) ==
        "P = lmerge(a, sync(b, c));\n");
}

TEST_CASE("formatting orders payloads canonically and quotes where needed") {
  CHECK(format(parse_specification("P = allow{c, a|b}(delta);")) ==
        "P = allow{a|b, c}(delta);\n");
  CHECK(format(parse_specification("P = `a#f#`|a;")) == "P = a|`a#f#`;\n");
  CHECK(format(parse_specification("P = `tau` . tau;")) == "P = `tau` . tau;\n");
  CHECK(format(parse_specification("P = hide{`x#g#1`}(a);")) ==
        "P = hide{`x#g#1`}(a);\n");
}

TEST_CASE("random specifications survive a parse and format round trip") {
  rng_engine rng(37);
  auto alphabet = small_alphabet(4);
  for (int i = 0; i < 200; ++i) {
    specification spec;
    spec.add({"P", random_term(rng, alphabet, 4)});
    std::string text = format(spec);
    specification back = parse_specification(text);
    REQUIRE(back.definitions().size() == 1);
    CHECK(equal(back.definitions()[0].body, spec.definitions()[0].body));
    // a second round trip is literally identical
    CHECK(format(back) == text);
  }
}

TEST_CASE("recursive random specifications round trip") {
  rng_engine rng(41);
  auto alphabet = small_alphabet(3);
  for (int i = 0; i < 100; ++i) {
    specification spec = random_recursive_specification(rng, alphabet, 4, false);
    specification back = parse_specification(format(spec));
    REQUIRE(back.definitions().size() == spec.definitions().size());
    for (std::size_t k = 0; k < spec.definitions().size(); ++k) {
      CHECK(back.definitions()[k].name == spec.definitions()[k].name);
      CHECK(equal(back.definitions()[k].body, spec.definitions()[k].body));
    }
  }
}
