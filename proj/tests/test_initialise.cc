#include <doctest.h>

#include <random>
#include <set>

#include "pn2sc/checks.h"
#include "pn2sc/initialise.h"
#include "pn2sc/text_format.h"
#include "support/oracles.h"

using namespace pn2sc;
using pn2sc::testing::net_from_text;
using pn2sc::testing::qtr_net;
using pn2sc::testing::random_net;

namespace {

using NamePairs = std::set<std::pair<std::string, std::string>>;

NamePairs place_to_edge(const ScModel& sc) {
  NamePairs out;
  for (StateId b : sc.states(StateKind::kBasic)) {
    for (EdgeId e : sc.state(b).next) out.emplace(sc.state(b).name, sc.hyperedge(e).name);
  }
  return out;
}

NamePairs edge_to_place(const ScModel& sc) {
  NamePairs out;
  for (EdgeId e : sc.hyperedges()) {
    for (StateId b : sc.hyperedge(e).next) out.emplace(sc.hyperedge(e).name, sc.state(b).name);
  }
  return out;
}

}  // namespace

TEST_CASE("preconditions") {
  CHECK(check_init_preconditions(qtr_net(), ScModel{}).passed());

  ScModel populated;
  populated.add_basic("b");
  auto r = check_init_preconditions(qtr_net(), populated);
  REQUIRE_FALSE(r.passed());
  bool found = false;
  for (const auto& v : r.violations) found |= v.message == "statechart not unpopulated";
  CHECK(found);

  PetriNet clash;
  clash.add_place("x");
  clash.add_transition("x");
  CHECK_FALSE(check_init_preconditions(clash, ScModel{}).passed());
  CHECK_FALSE(initialise(clash).model);
}

TEST_CASE("places become Basics inside ORs") {
  PetriNet pn = net_from_text("place a\nplace b\n");
  ScModel sc;
  CHECK(map_places_to_states(pn, sc) == 2);
  for (const char* name : {"a", "b"}) {
    auto b = sc.find_basic(name);
    auto o = lookup_or(sc, name);
    REQUIRE(b);
    REQUIRE(o);
    CHECK(sc.state(*b).container == o);
  }
  CHECK(sc.state_count() == 4);

  ScModel untouched;
  CHECK(map_places_to_states(PetriNet{}, untouched) == 0);
  CHECK(untouched.empty());
}

TEST_CASE("transitions become hyperedges") {
  PetriNet pn = net_from_text("place p\ntransition t1\ntransition t2\n");
  ScModel sc;
  CHECK(map_transitions_to_edges(pn, sc) == 2);
  CHECK(sc.find_hyperedge("t1"));
  CHECK(sc.find_hyperedge("t2"));
  CHECK(sc.hyperedge_count() == 2);

  ScModel none;
  CHECK(map_transitions_to_edges(net_from_text("place p\n"), none) == 0);
  CHECK(none.hyperedge_count() == 0);
}

TEST_CASE("object passes are idempotent") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 50; ++i) {
    PetriNet pn = random_net(rng, 12, 12);
    ScModel sc = *initialise(pn).model;
    std::string before = serialize_statechart(sc);
    map_places_to_states(pn, sc);
    map_transitions_to_edges(pn, sc);
    link_place_successors(pn, sc);
    link_transition_successors(pn, sc);
    CHECK(serialize_statechart(sc) == before);
    CHECK(sc.count(StateKind::kBasic) == pn.place_count());
    CHECK(sc.count(StateKind::kOr) == pn.place_count());
  }
}

TEST_CASE("q/t/r links") {
  PetriNet pn = qtr_net();
  ScModel sc = *initialise(pn).model;
  EdgeId t = *sc.find_hyperedge("t");
  CHECK(sc.state(*sc.find_basic("q")).next == std::set<EdgeId>{t});
  CHECK(sc.state(*sc.find_basic("r")).next.empty());
  CHECK(sc.hyperedge(t).next == std::set<StateId>{*sc.find_basic("r")});
  CHECK(sc.count(StateKind::kAnd) == 0);
  CHECK_FALSE(sc.statechart());

  PetriNet sink = net_from_text("place p\ntransition t\narc p t\n");
  ScModel s2 = *initialise(sink).model;
  CHECK(s2.hyperedge(*s2.find_hyperedge("t")).next.empty());
}

TEST_CASE("link passes need their objects") {
  PetriNet pn = qtr_net();
  ScModel sc;
  CHECK_THROWS_AS(link_place_successors(pn, sc), InternalFault);
  map_places_to_states(pn, sc);
  CHECK_THROWS_AS(link_transition_successors(pn, sc), InternalFault);
}

TEST_CASE("links mirror the net exactly") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 100; ++i) {
    PetriNet pn = random_net(rng, 12, 12);
    auto init = initialise(pn);
    REQUIRE(init.model);
    NamePairs pt, tp;
    for (PlaceId p : pn.places()) {
      for (TransitionId t : pn.place(p).postt) pt.emplace(pn.place(p).name, pn.transition(t).name);
    }
    for (TransitionId t : pn.transitions()) {
      for (PlaceId p : pn.transition(t).postp) tp.emplace(pn.transition(t).name, pn.place(p).name);
    }
    CHECK(place_to_edge(*init.model) == pt);
    CHECK(edge_to_place(*init.model) == tp);
    CHECK(check_inv(pn, *init.model).passed());
    CHECK(check_name_uniqueness(pn, *init.model).passed());
    CHECK(check_sc_structure(*init.model).passed());

    // One visit per source element, no fixpointing.
    CHECK(init.stats.places_to_states == pn.place_count());
    CHECK(init.stats.transitions_to_edges == pn.transition_count());
    CHECK(init.stats.place_links == pn.place_count());
    CHECK(init.stats.transition_links == pn.transition_count());
  }
}

TEST_CASE("initialise is deterministic") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 20; ++i) {
    PetriNet pn = random_net(rng, 12, 12);
    CHECK(serialize_statechart(*initialise(pn).model) ==
          serialize_statechart(*initialise(pn).model));
  }
  CHECK(initialise(PetriNet{}).model->empty());
}
