#include <doctest.h>

#include <random>

#include "pn2sc/initialise.h"
#include "pn2sc/inverse.h"
#include "pn2sc/isomorphism.h"
#include "pn2sc/reduce.h"
#include "pn2sc/text_format.h"
#include "support/oracles.h"

using namespace pn2sc;
using pn2sc::testing::qtr_net;
using pn2sc::testing::random_flat_statechart;
using pn2sc::testing::random_net;
using pn2sc::testing::statechart_from_text;

TEST_CASE("q/t/r round trip") {
  auto back = invert_initialisation(*initialise(qtr_net()).model);
  REQUIRE(back.ok());
  CHECK(isomorphic_nets(*back.value, qtr_net()));
  CHECK(serialize_petri_net(*back.value) == serialize_petri_net(qtr_net()));
}

TEST_CASE("empty statechart inverts to the empty net") {
  auto back = invert_initialisation(ScModel{});
  REQUIRE(back.ok());
  CHECK(back.value->place_count() == 0);
  CHECK(back.value->transition_count() == 0);
}

TEST_CASE("net -> statechart -> net") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 100; ++i) {
    PetriNet pn = random_net(rng, 12, 12);
    auto back = invert_initialisation(*initialise(pn).model);
    REQUIRE(back.ok());
    CHECK(isomorphic_nets(pn, *back.value));
  }
}

TEST_CASE("flat statechart -> net -> statechart") {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 50; ++i) {
    ScModel sc = random_flat_statechart(rng, 10, 10);
    auto pn = invert_initialisation(sc);
    REQUIRE(pn.ok());
    auto again = initialise(*pn.value);
    REQUIRE(again.model);
    CHECK(isomorphic_statecharts(sc, *again.model));
  }
}

TEST_CASE("reduced or malformed statecharts are rejected") {
  PetriNet pn = qtr_net();
  ScModel sc = *initialise(pn).model;
  run_to_fixpoint(pn, sc);
  CHECK_FALSE(invert_initialisation(sc).ok());

  CHECK_FALSE(invert_initialisation(statechart_from_text("statechart x\nand x\n")).ok());
  CHECK_FALSE(invert_initialisation(statechart_from_text("or a\n  basic b\n")).ok());
  CHECK_FALSE(invert_initialisation(statechart_from_text("or a\n  basic a\n  basic b\n")).ok());
  CHECK_FALSE(invert_initialisation(statechart_from_text("basic a\n")).ok());
  CHECK_FALSE(invert_initialisation(statechart_from_text("or a\n")).ok());
}
