#include "pn2sc/initialise.h"

#include <algorithm>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pn2sc {

ModelReport check_init_preconditions(const PetriNet& pn, const ScModel& sc) {
  ModelReport report;
  if (sc.state_count() != 0 || sc.statechart()) {
    report.add("init-precondition", "statechart", "statechart not unpopulated");
  }
  std::unordered_map<std::string_view, int> names;
  names.reserve(pn.place_count() + pn.transition_count());
  for (PlaceId p : pn.places()) ++names[pn.place(p).name];
  for (TransitionId t : pn.transitions()) ++names[pn.transition(t).name];
  std::vector<std::string_view> duplicates;
  for (const auto& [name, n] : names) {
    if (n > 1) duplicates.push_back(name);
  }
  std::sort(duplicates.begin(), duplicates.end());
  for (std::string_view name : duplicates) {
    report.add("pn-name-unique", std::string(name),
               "duplicate NamedElement name " + std::string(name));
  }
  return report;
}

std::size_t map_places_to_states(const PetriNet& pn, ScModel& sc) {
  std::size_t visited = 0;
  for (PlaceId p : pn.places()) {
    ++visited;
    const std::string& name = pn.place(p).name;
    auto basic = sc.find_basic(name);
    auto region = sc.find_or(name);
    if (basic && region && sc.state(*basic).container == region) continue;
    if (!basic) basic = sc.add_basic(name);
    if (!region) region = sc.add_or(name);
    sc.move_into(*basic, *region);
  }
  return visited;
}

std::size_t map_transitions_to_edges(const PetriNet& pn, ScModel& sc) {
  std::size_t visited = 0;
  for (TransitionId t : pn.transitions()) {
    ++visited;
    const std::string& name = pn.transition(t).name;
    if (!sc.find_hyperedge(name)) sc.add_hyperedge(name);
  }
  return visited;
}

namespace {

StateId require_basic(const ScModel& sc, const std::string& name) {
  auto b = sc.find_basic(name);
  if (!b) throw InternalFault("no Basic state for place " + name);
  return *b;
}

EdgeId require_edge(const ScModel& sc, const std::string& name) {
  auto e = sc.find_hyperedge(name);
  if (!e) throw InternalFault("no HyperEdge for transition " + name);
  return *e;
}

}  // namespace

std::size_t link_place_successors(const PetriNet& pn, ScModel& sc) {
  std::size_t visited = 0;
  for (PlaceId p : pn.places()) {
    ++visited;
    const Place& place = pn.place(p);
    if (place.postt.empty()) continue;
    StateId b = require_basic(sc, place.name);
    for (TransitionId t : place.postt) {
      sc.link(b, require_edge(sc, pn.transition(t).name));
    }
  }
  return visited;
}

std::size_t link_transition_successors(const PetriNet& pn, ScModel& sc) {
  std::size_t visited = 0;
  for (TransitionId t : pn.transitions()) {
    ++visited;
    const Transition& tr = pn.transition(t);
    if (tr.postp.empty()) continue;
    EdgeId e = require_edge(sc, tr.name);
    for (PlaceId p : tr.postp) sc.link(e, require_basic(sc, pn.place(p).name));
  }
  return visited;
}

InitResult initialise(const PetriNet& pn) {
  InitResult result;
  ScModel sc;
  result.preconditions = check_init_preconditions(pn, sc);
  if (!result.preconditions.passed()) return result;
  sc.reserve(pn.place_count(), pn.place_count(), pn.transition_count());
  result.stats.places_to_states = map_places_to_states(pn, sc);
  result.stats.transitions_to_edges = map_transitions_to_edges(pn, sc);
  result.stats.place_links = link_place_successors(pn, sc);
  result.stats.transition_links = link_transition_successors(pn, sc);
  result.model = std::move(sc);
  return result;
}

}  // namespace pn2sc
