#include "pn2sc/pipeline.h"

#include <chrono>

namespace pn2sc {

namespace {

std::chrono::nanoseconds since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
}

}  // namespace

ConversionOutcome convert(PetriNet pn, const ReduceOptions& opts) {
  ConversionOutcome outcome;
  auto start = std::chrono::steady_clock::now();
  InitResult init = initialise(pn);
  auto init_time = since(start);
  outcome.preconditions = std::move(init.preconditions);
  if (!init.model) return outcome;

  Conversion c{std::move(pn), std::move(*init.model), init.stats, {}, {}};
  c.run = run_to_fixpoint(c.net, c.statechart, opts);
  c.run.phase_time["initialise"] = init_time;

  start = std::chrono::steady_clock::now();
  c.cleanup = cleanup(c.statechart);
  c.run.phase_time["cleanup"] = since(start);
  outcome.result = std::move(c);
  return outcome;
}

}  // namespace pn2sc
