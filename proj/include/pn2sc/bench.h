#ifndef PN2SC_BENCH_H_
#define PN2SC_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "pn2sc/petri_net.h"

namespace pn2sc {

struct GenSpec {
  std::size_t target_places = 1;  // >= 1
  std::uint64_t seed = 0;
  double parallel_probability = 0.3;
};

// Series-parallel net with exactly `target_places` places. A block is either
// one place, two blocks chained through a 1-in/1-out transition, or a fork
// transition feeding 2..4 blocks that rejoin at a join transition, framed by
// an entry and an exit place. Every such net reduces to a single place.
// Places are named p0, p1, ... and transitions t0, t1, ... in creation order.
PetriNet generate_sp(const GenSpec& spec);

struct BenchRow {
  std::size_t size;
  std::string phase;  // initialise | reduce | cleanup
  double median_ms;
  std::size_t final_places;
  std::size_t final_transitions;
  std::size_t steps;
  bool has_statechart;
};

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::uint64_t seed = 0;
  std::size_t repetitions = 3;
  double parallel_probability = 0.3;
};

// For each size: one discarded warm-up run, then `repetitions` timed runs of
// generate (untimed), initialise, reduce and cleanup on a monotonic clock.
// Rows report per-phase medians.
std::vector<BenchRow> run_bench(const BenchConfig& config);

void write_bench_table(const std::vector<BenchRow>& rows, std::ostream& out);
// size,phase,median_ms,final_places
void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace pn2sc

#endif  // PN2SC_BENCH_H_
