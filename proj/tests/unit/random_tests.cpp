#include "doctest.h"

#include "mpa/process.hpp"
#include "mpa/random.hpp"

using namespace mpa;

TEST_CASE("generators are deterministic under a fixed seed") {
  auto alphabet = small_alphabet(3);
  rng_engine r1(99), r2(99);
  for (int i = 0; i < 20; ++i) {
    CHECK(random_multi_action(r1, alphabet, 3, false) ==
          random_multi_action(r2, alphabet, 3, false));
    CHECK(equal(random_term(r1, alphabet, 3), random_term(r2, alphabet, 3)));
  }
  lts a = random_lts(r1, 5, 2);
  lts b = random_lts(r2, 5, 2);
  CHECK(a.num_states == b.num_states);
  CHECK(a.transitions == b.transitions);
  CHECK(a.terminating == b.terminating);
}

TEST_CASE("the small alphabet runs a, b, c, ...") {
  auto alphabet = small_alphabet(3);
  REQUIRE(alphabet.size() == 3);
  CHECK(alphabet[0].name() == "a");
  CHECK(alphabet[2].name() == "c");
  CHECK(small_alphabet(30).size() == 30);
}

TEST_CASE("tau-free draws have no empty multi-action") {
  rng_engine rng(3);
  auto alphabet = small_alphabet(4);
  for (int i = 0; i < 300; ++i) {
    CHECK_FALSE(random_multi_action(rng, alphabet, 4, true).is_tau());
    CHECK(random_multi_action(rng, alphabet, 4, true).size() <= 4);
  }
}

TEST_CASE("sequential draws are sequential and respect tau freedom") {
  rng_engine rng(5);
  auto alphabet = small_alphabet(4);
  specification no_defs;
  for (int i = 0; i < 200; ++i) {
    term_ptr t = random_sequential_term(rng, alphabet, 4, true);
    CHECK(is_sequential(t));
    CHECK(is_tau_free(t, no_defs));
  }
}

TEST_CASE("full-operator draws produce valid specifications") {
  rng_engine rng(13);
  auto alphabet = small_alphabet(4);
  for (int i = 0; i < 200; ++i) {
    specification spec;
    spec.add({"P", random_term(rng, alphabet, 4)});
    CHECK_NOTHROW(validate(spec));
  }
}

TEST_CASE("recursive draws validate and honor tau freedom") {
  rng_engine rng(17);
  auto alphabet = small_alphabet(3);
  for (int i = 0; i < 200; ++i) {
    specification spec = random_recursive_specification(rng, alphabet, 4, true);
    CHECK_NOTHROW(validate(spec));
    CHECK(is_tau_free(spec));
  }
}

TEST_CASE("random systems stay within their bounds") {
  rng_engine rng(19);
  for (int i = 0; i < 100; ++i) {
    lts l = random_lts(rng, 6, 3);
    CHECK(l.num_states >= 1);
    CHECK(l.num_states <= 6);
    CHECK(l.initial == 0);
    for (const transition& t : l.transitions) {
      CHECK(t.src < l.num_states);
      CHECK(t.dst < l.num_states);
      CHECK(t.label.size() == 1);
    }
    CHECK(std::is_sorted(l.transitions.begin(), l.transitions.end()));
    CHECK(std::adjacent_find(l.transitions.begin(), l.transitions.end()) ==
          l.transitions.end());
  }
}
