#include "doctest.h"

#include "mpa/equivalence.hpp"
#include "mpa/random.hpp"
#include "mpa/semantics.hpp"
#include "mpa/text.hpp"
#include "support/oracles.hpp"

using namespace mpa;

namespace {

const action a{"a"};

lts explore_one(const char* text) { return explore(parse_specification(text)); }

}  // namespace

TEST_CASE("partition groups equivalent states") {
  // 0 -a-> 1, 0 -a-> 2, 1 -b-> 3, 2 -b-> 3: states 1 and 2 are equivalent
  lts l;
  l.num_states = 4;
  action b{"b"};
  l.transitions = {{0, multi_action{a}, 1},
                   {0, multi_action{a}, 2},
                   {1, multi_action{b}, 3},
                   {2, multi_action{b}, 3}};
  auto blocks = bisimulation_partition(l);
  REQUIRE(blocks.size() == 4);
  CHECK(blocks[1] == blocks[2]);
  CHECK(blocks[0] != blocks[1]);
  CHECK(blocks[0] != blocks[3]);
  CHECK(blocks[1] != blocks[3]);
}

TEST_CASE("terminating and deadlocked states are distinguished") {
  lts l;
  l.num_states = 2;
  l.terminating = {1};
  auto blocks = bisimulation_partition(l);
  CHECK(blocks[0] != blocks[1]);

  lts m;
  m.num_states = 2;
  m.terminating = {0, 1};
  blocks = bisimulation_partition(m);
  CHECK(blocks[0] == blocks[1]);
}

TEST_CASE("bisimilar processes get a positive verdict") {
  bisim_result r = bisimilar(explore_one("P = a . b + a . b;"),
                             explore_one("P = a . b;"));
  CHECK(r.equivalent);
  CHECK(r.witness.empty());

  CHECK(bisimilar(explore_one("P = (a + b) + c;"),
                  explore_one("P = a + (b + c);")).equivalent);
  CHECK(bisimilar(explore_one("P = a . P;"),
                  explore_one("Q = a . a . Q;")).equivalent);
}

TEST_CASE("distinguishable processes get a witness") {
  bisim_result r = bisimilar(explore_one("P = a . b;"), explore_one("P = a . c;"));
  REQUIRE_FALSE(r.equivalent);
  REQUIRE(!r.witness.empty());
  CHECK(r.witness[0] == multi_action{a});
  CHECK(!r.note.empty());

  // the classic choice-vs-prefix pair
  r = bisimilar(explore_one("P = a . b + a . c;"), explore_one("P = a . (b + c);"));
  CHECK_FALSE(r.equivalent);
  CHECK(!r.witness.empty());

  // termination vs deadlock after the same trace
  r = bisimilar(explore_one("P = a;"), explore_one("P = a . delta;"));
  CHECK_FALSE(r.equivalent);
}

TEST_CASE("quotient collapses equivalent states and preserves behavior") {
  lts l = explore_one("P = a . b + a . b + a . (b + b);");
  lts q = reduce(l);
  CHECK(q.num_states < l.num_states);
  CHECK(bisimilar(l, q).equivalent);
  // reducing twice changes nothing further
  lts qq = reduce(q);
  CHECK(qq.num_states == q.num_states);
  CHECK(qq.transitions == q.transitions);
}

TEST_CASE("reduction of random systems preserves equivalence") {
  rng_engine rng(23);
  for (int i = 0; i < 60; ++i) {
    lts l = random_lts(rng, 6, 2);
    lts q = reduce(l);
    CHECK(q.num_states <= l.num_states);
    CHECK(bisimilar(l, q).equivalent);
    CHECK(bisimulation_partition(q).size() == q.num_states);
  }
}

TEST_CASE("partition agrees with the brute-force relation") {
  rng_engine rng(29);
  for (int i = 0; i < 60; ++i) {
    lts l = random_lts(rng, 5, 2);
    auto blocks = bisimulation_partition(l);
    auto rel = mpa::testing::brute_force_relation(l, l);
    for (std::size_t s = 0; s < l.num_states; ++s) {
      for (std::size_t t = 0; t < l.num_states; ++t) {
        CHECK((blocks[s] == blocks[t]) == rel[s][t]);
      }
    }
  }
}

TEST_CASE("two-system verdict agrees with the brute-force oracle") {
  rng_engine rng(31);
  for (int i = 0; i < 60; ++i) {
    lts la = random_lts(rng, 5, 2);
    lts lb = random_lts(rng, 5, 2);
    CHECK(bisimilar(la, lb).equivalent ==
          mpa::testing::brute_force_bisimilar(la, lb));
  }
}
