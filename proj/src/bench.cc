#include "pn2sc/bench.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <random>
#include <set>
#include <stdexcept>

#include "pn2sc/cleanup.h"
#include "pn2sc/initialise.h"
#include "pn2sc/reduce.h"

namespace pn2sc {

namespace {

constexpr std::size_t kMaxBranches = 4;

class SpBuilder {
 public:
  SpBuilder(std::uint64_t seed, double parallel_probability)
      : rng_(seed), parallel_(parallel_probability) {}

  struct Block {
    PlaceId entry;
    PlaceId exit;
  };

  Block build(std::size_t places) {
    if (places == 1) {
      PlaceId p = place();
      return {p, p};
    }
    if (places >= 4 && std::bernoulli_distribution(parallel_)(rng_)) {
      return parallel(places);
    }
    std::size_t left = std::uniform_int_distribution<std::size_t>(1, places - 1)(rng_);
    Block a = build(left);
    TransitionId t = transition();
    Block b = build(places - left);
    net_.add_arc(a.exit, t);
    net_.add_arc(t, b.entry);
    return {a.entry, b.exit};
  }

  PetriNet take() { return std::move(net_); }

 private:
  // entry -fork-> {branches} -join-> exit; the branches share `places - 2`.
  Block parallel(std::size_t places) {
    std::size_t inner = places - 2;
    std::size_t k = std::uniform_int_distribution<std::size_t>(
        2, std::min(kMaxBranches, inner))(rng_);
    std::set<std::size_t> cuts;
    std::uniform_int_distribution<std::size_t> cut(1, inner - 1);
    while (cuts.size() < k - 1) cuts.insert(cut(rng_));

    PlaceId entry = place();
    TransitionId fork = transition();
    net_.add_arc(entry, fork);
    std::vector<Block> branches;
    std::size_t prev = 0;
    cuts.insert(inner);
    for (std::size_t c : cuts) {
      branches.push_back(build(c - prev));
      prev = c;
    }
    TransitionId join = transition();
    PlaceId exit = place();
    for (const Block& b : branches) {
      net_.add_arc(fork, b.entry);
      net_.add_arc(b.exit, join);
    }
    net_.add_arc(join, exit);
    return {entry, exit};
  }

  PlaceId place() { return net_.add_place("p" + std::to_string(places_++)); }
  TransitionId transition() {
    return net_.add_transition("t" + std::to_string(transitions_++));
  }

  std::mt19937_64 rng_;
  double parallel_;
  PetriNet net_;
  std::size_t places_ = 0;
  std::size_t transitions_ = 0;
};

double to_ms(std::chrono::nanoseconds d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : (xs[n / 2 - 1] + xs[n / 2]) / 2.0;
}

}  // namespace

PetriNet generate_sp(const GenSpec& spec) {
  if (spec.target_places < 1) throw std::invalid_argument("target_places must be >= 1");
  if (!(spec.parallel_probability >= 0.0 && spec.parallel_probability <= 1.0)) {
    throw std::invalid_argument("parallel_probability must lie in [0, 1]");
  }
  SpBuilder builder(spec.seed, spec.parallel_probability);
  builder.build(spec.target_places);
  return builder.take();
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.sizes.empty()) throw std::invalid_argument("no sizes given");
  if (config.repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");

  std::vector<BenchRow> rows;
  for (std::size_t size : config.sizes) {
    std::vector<double> init_ms, reduce_ms, cleanup_ms;
    std::size_t final_places = 0, final_transitions = 0, steps = 0;
    bool has_statechart = false;
    for (std::size_t rep = 0; rep <= config.repetitions; ++rep) {
      PetriNet pn = generate_sp({size, config.seed, config.parallel_probability});

      auto t0 = std::chrono::steady_clock::now();
      InitResult init = initialise(pn);
      auto t1 = std::chrono::steady_clock::now();
      if (!init.model) throw std::logic_error("generated net failed preconditions");
      ScModel sc = std::move(*init.model);
      RunStats stats = run_to_fixpoint(pn, sc);
      auto t2 = std::chrono::steady_clock::now();
      cleanup(sc);
      auto t3 = std::chrono::steady_clock::now();

      if (rep == 0) continue;  // warm-up
      init_ms.push_back(to_ms(t1 - t0));
      reduce_ms.push_back(to_ms(t2 - t1));
      cleanup_ms.push_back(to_ms(t3 - t2));
      final_places = pn.place_count();
      final_transitions = pn.transition_count();
      steps = stats.steps();
      has_statechart = sc.statechart().has_value();
    }
    for (auto [phase, samples] : {std::pair{"initialise", &init_ms},
                                  std::pair{"reduce", &reduce_ms},
                                  std::pair{"cleanup", &cleanup_ms}}) {
      rows.push_back({size, phase, median(*samples), final_places,
                      final_transitions, steps, has_statechart});
    }
  }
  return rows;
}

void write_bench_table(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << std::left << std::setw(8) << "size" << std::setw(12) << "phase"
      << std::right << std::setw(12) << "median_ms" << std::setw(14)
      << "final_places" << std::setw(8) << "steps" << '\n';
  for (const BenchRow& r : rows) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.median_ms);
    out << std::left << std::setw(8) << r.size << std::setw(12) << r.phase
        << std::right << std::setw(12) << ms << std::setw(14) << r.final_places
        << std::setw(8) << r.steps << '\n';
  }
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "size,phase,median_ms,final_places\n";
  for (const BenchRow& r : rows) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.median_ms);
    out << r.size << ',' << r.phase << ',' << ms << ',' << r.final_places << '\n';
  }
}

}  // namespace pn2sc
