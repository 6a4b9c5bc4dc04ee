#ifndef PN2SC_PIPELINE_H_
#define PN2SC_PIPELINE_H_

#include <optional>

#include "pn2sc/checks.h"
#include "pn2sc/cleanup.h"
#include "pn2sc/initialise.h"
#include "pn2sc/petri_net.h"
#include "pn2sc/reduce.h"
#include "pn2sc/statechart.h"

namespace pn2sc {

struct Conversion {
  PetriNet net;  // the input net after reduction
  ScModel statechart;
  InitStats init;
  RunStats run;  // phase_time holds "initialise", "reduce" and "cleanup"
  CleanupReport cleanup;
};

struct ConversionOutcome {
  std::optional<Conversion> result;  // absent iff preconditions failed
  ModelReport preconditions;
};

// initialise, run_to_fixpoint, cleanup.
ConversionOutcome convert(PetriNet pn, const ReduceOptions& opts = {});

}  // namespace pn2sc

#endif  // PN2SC_PIPELINE_H_
