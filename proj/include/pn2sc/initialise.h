#ifndef PN2SC_INITIALISE_H_
#define PN2SC_INITIALISE_H_

#include <cstddef>
#include <optional>

#include "pn2sc/checks.h"
#include "pn2sc/petri_net.h"
#include "pn2sc/statechart.h"

namespace pn2sc {

// Number of source elements each mapping pass visited.
struct InitStats {
  std::size_t places_to_states = 0;
  std::size_t transitions_to_edges = 0;
  std::size_t place_links = 0;
  std::size_t transition_links = 0;
};

// The statechart must be unpopulated and net names unique across places and
// transitions jointly.
ModelReport check_init_preconditions(const PetriNet& pn, const ScModel& sc);

// Objects first: each place gets a same-named Basic inside a same-named OR;
// each transition gets a same-named HyperEdge. Existing matches are reused,
// so re-running creates nothing.
std::size_t map_places_to_states(const PetriNet& pn, ScModel& sc);
std::size_t map_transitions_to_edges(const PetriNet& pn, ScModel& sc);

// Then links: t in p.postt gives HyperEdge[t] in Basic[p].next, and p in
// t.postp gives Basic[p] in HyperEdge[t].next. Missing lookup targets throw
// InternalFault.
std::size_t link_place_successors(const PetriNet& pn, ScModel& sc);
std::size_t link_transition_successors(const PetriNet& pn, ScModel& sc);

struct InitResult {
  std::optional<ScModel> model;  // absent iff preconditions failed
  ModelReport preconditions;
  InitStats stats;
};

// Runs the four passes in order on a fresh statechart.
InitResult initialise(const PetriNet& pn);

}  // namespace pn2sc

#endif  // PN2SC_INITIALISE_H_
