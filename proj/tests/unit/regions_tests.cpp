#include "doctest.h"

#include "mpa/regions.hpp"
#include "mpa/semantics.hpp"
#include "mpa/text.hpp"

using namespace mpa;

namespace {

const action a{"a"}, b{"b"}, c{"c"}, d{"d"};

lts explore_one(const char* text) { return explore(parse_specification(text)); }

}  // namespace

TEST_CASE("co-occurrence and co-enabledness merge regions") {
  lts l = explore_one("P = a|b . c + d;");
  // a and b share a label; d is enabled alongside them in the initial state
  CHECK(sync_region(l, a) == action_set{a, b, d});
  CHECK(sync_region(l, b) == action_set{a, b, d});
  CHECK(sync_region(l, d) == action_set{a, b, d});
  // c only ever runs alone, after the others
  CHECK(sync_region(l, c) == action_set{c});

  region_set x = sync_regions(l);
  REQUIRE(x.regions.size() == 2);
  CHECK(x.regions[0] == action_set{a, b, d});
  CHECK(x.regions[1] == action_set{c});
}

TEST_CASE("an action labeling nothing is its own region") {
  lts l = explore_one("P = a . P;");
  CHECK(sync_region(l, action("z")) == action_set{action("z")});
  // and it does not show up in the labeled regions
  region_set x = sync_regions(l);
  REQUIRE(x.regions.size() == 1);
  CHECK(x.regions[0] == action_set{a});
}

TEST_CASE("sequential phases fall into separate regions") {
  lts l = explore_one("P = a . b . P;");
  region_set x = sync_regions(l);
  REQUIRE(x.regions.size() == 2);
  CHECK(x.regions[0] == action_set{a});
  CHECK(x.regions[1] == action_set{b});
}

TEST_CASE("closure runs through chains of labels") {
  // a|b and b|c co-occur through b, pulling c into the same region
  lts l = explore_one("P = a|b . b|c;");
  region_set x = sync_regions(l);
  REQUIRE(x.regions.size() == 1);
  CHECK(x.regions[0] == action_set{a, b, c});
}

TEST_CASE("asynchronous pairs connect regions through channels") {
  connector_topology topo =
      connector_topology::parse("fifo a -> b\nboundary a, b\n");
  region_set x;
  x.regions = {{a}, {b}};
  auto pairs = async_regions(x, topo);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0] == std::pair<action, action>{a, b});
}

TEST_CASE("channels inside one region yield no pairs") {
  connector_topology topo =
      connector_topology::parse("sync a -> b\nboundary a, b\n");
  region_set x;
  x.regions = {{a, b}};
  CHECK(async_regions(x, topo).empty());
}

TEST_CASE("unknown channel ends are skipped with a warning") {
  connector_topology topo =
      connector_topology::parse("fifo a -> b\nboundary a, b\n");
  region_set x;
  x.regions = {{a}};  // b is missing from the region alphabet
  std::vector<std::string> warnings;
  CHECK(async_regions(x, topo, &warnings).empty());
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("b") != std::string::npos);
}

TEST_CASE("a composed buffer chain has two synchronous regions") {
  connector_topology topo = connector_topology::parse(
      "sync a -> x\nfifo x -> y\nsync y -> b\nboundary a, b\n");
  lts l = explore(compose(topo));
  region_set x = sync_regions(l);
  REQUIRE(x.regions.size() == 2);
  CHECK(x.regions[0].count(a) == 1);
  CHECK(x.regions[0].count(action("x")) == 1);
  CHECK(x.regions[1].count(b) == 1);
  CHECK(x.regions[1].count(action("y")) == 1);
}
