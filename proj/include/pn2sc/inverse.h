#ifndef PN2SC_INVERSE_H_
#define PN2SC_INVERSE_H_

#include "pn2sc/petri_net.h"
#include "pn2sc/statechart.h"
#include "pn2sc/text_format.h"

namespace pn2sc {

// Rebuilds the net an initialised (flat) statechart came from: a place per
// Basic and a transition per HyperEdge, with Basic.next giving prep and
// HyperEdge.next giving postp.
//
// Flat means: no AND states, no Statechart, every OR holds exactly one
// same-named Basic, every Basic sits in such an OR, and Basic, OR and
// HyperEdge names are unique. Anything else is rejected with diagnostics
// (line/column 0, since they refer to the model rather than a file).
ParseResult<PetriNet> invert_initialisation(const ScModel& sc);

}  // namespace pn2sc

#endif  // PN2SC_INVERSE_H_
