#ifndef PN2SC_ISOMORPHISM_H_
#define PN2SC_ISOMORPHISM_H_

#include "pn2sc/petri_net.h"
#include "pn2sc/statechart.h"

namespace pn2sc {

// True iff a bijection between live elements exists that preserves element
// kind, containment, next/rnext and the Statechart root. Names are ignored.
//
// Colour refinement over both models with a shared signature table gives a
// stable partition; a vertex from the smallest non-singleton class is then
// individualised against every same-coloured candidate, refining again,
// until the partition is discrete and the induced map can be verified.
bool isomorphic_statecharts(const ScModel& a, const ScModel& b);

// Name-preserving comparison: same place names, same transition names, and
// every transition has the same prep and postp names in both nets.
bool isomorphic_nets(const PetriNet& a, const PetriNet& b);

}  // namespace pn2sc

#endif  // PN2SC_ISOMORPHISM_H_
