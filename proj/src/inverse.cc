#include "pn2sc/inverse.h"

#include <unordered_map>

#include "pn2sc/checks.h"

namespace pn2sc {

ParseResult<PetriNet> invert_initialisation(const ScModel& sc) {
  ParseResult<PetriNet> result;
  auto fail = [&result](std::string message) {
    result.diagnostics.push_back({0, 0, std::move(message), Severity::kError});
  };

  if (sc.count(StateKind::kAnd) != 0) {
    fail("statechart contains AND states; only flat statecharts can be inverted");
  }
  if (sc.statechart()) {
    fail("statechart root present; only flat statecharts can be inverted");
  }
  for (const Violation& v : check_name_uniqueness(PetriNet{}, sc).violations) {
    fail(v.message);
  }
  for (StateId o : sc.states(StateKind::kOr)) {
    const State& st = sc.state(o);
    if (st.contains.size() != 1) {
      fail("or " + st.name + " holds " + std::to_string(st.contains.size()) +
           " states; expected one same-named basic");
      continue;
    }
    const State& child = sc.state(st.contains.front());
    if (child.kind != StateKind::kBasic || child.name != st.name) {
      fail("or " + st.name + " does not hold a same-named basic");
    }
  }
  for (StateId b : sc.states(StateKind::kBasic)) {
    const State& st = sc.state(b);
    if (!st.container) fail("basic " + st.name + " is not inside an or state");
  }
  if (!result.diagnostics.empty()) return result;

  PetriNet pn;
  std::unordered_map<StateId, PlaceId> places;
  for (StateId b : sc.states(StateKind::kBasic)) {
    places.emplace(b, pn.add_place(sc.state(b).name));
  }
  for (EdgeId e : sc.hyperedges()) {
    const HyperEdge& he = sc.hyperedge(e);
    TransitionId t = pn.add_transition(he.name);
    for (StateId b : he.rnext) pn.add_arc(places.at(b), t);
    for (StateId b : he.next) pn.add_arc(t, places.at(b));
  }
  auto clash = check_name_uniqueness(pn, ScModel{});
  for (const Violation& v : clash.violations) {
    fail(v.message + " (a basic and a hyperedge share it)");
  }
  if (result.diagnostics.empty()) result.value = std::move(pn);
  return result;
}

}  // namespace pn2sc
