#ifndef PN2SC_REDUCE_H_
#define PN2SC_REDUCE_H_

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pn2sc/checks.h"
#include "pn2sc/petri_net.h"
#include "pn2sc/statechart.h"

namespace pn2sc {

// Rules in priority order.
enum class Rule : std::uint8_t {
  kOrReduce = 0,      // q -t-> r becomes one place / one OR
  kAndMergePre = 1,   // equal-connectivity pre-places of t become an AND
  kAndMergePost = 2,  // equal-connectivity post-places of t become an AND
};
inline constexpr std::array<Rule, 3> kRulesByPriority = {
    Rule::kOrReduce, Rule::kAndMergePre, Rule::kAndMergePost};

std::string_view rule_name(Rule rule);

// A bound rule instance. For kOrReduce `places` is [q, r]; for the AND merges
// it is [representative, others...] with the representative being the
// least name and the others sorted by name.
struct Match {
  Rule rule;
  TransitionId transition;
  std::vector<PlaceId> places;

  friend bool operator==(const Match&, const Match&) = default;
};

// Guards. Pure functions of the net.
std::optional<Match> try_or_reduce(const PetriNet& pn, TransitionId t);
std::optional<Match> try_and_merge_pre(const PetriNet& pn, TransitionId t);
std::optional<Match> try_and_merge_post(const PetriNet& pn, TransitionId t);
std::optional<Match> try_rule(Rule rule, const PetriNet& pn, TransitionId t);

// Appliers. The guard is re-evaluated first; a stale match throws
// InternalFault without mutating either model.
void apply_or_reduce(PetriNet& pn, ScModel& sc, const Match& m);
void apply_and_merge(PetriNet& pn, ScModel& sc, const Match& m);
void apply_match(PetriNet& pn, ScModel& sc, const Match& m);

// Evaluates the rule's result predicate for `m` as it stands now. For a
// match whose guard holds this is always false, because the predicate
// requires bound elements to be deleted; the scheduler therefore skips it
// unless told otherwise.
bool succedent_holds(const PetriNet& pn, const ScModel& sc, const Match& m);

// `candidate`, or `candidate~k` for the least k >= 1 that is free among OR
// names and net element names.
std::string fresh_name(const PetriNet& pn, const ScModel& sc, const std::string& candidate);

// "<rule> @ <transition> [bound: a, b]" using names as they are before the
// match is applied.
std::string trace_line(const PetriNet& pn, const Match& m);

// Transitions in the order the scheduler scans them: ascending creation
// index, or a seeded shuffle of it.
std::vector<TransitionId> candidate_order(const PetriNet& pn,
                                          std::optional<std::uint64_t> seed);

struct StepRecord {
  std::size_t index;  // 0-based
  Match match;
  std::size_t places_after;
  std::size_t transitions_after;
};

struct ReduceOptions {
  // When false, the result predicate is evaluated before every application
  // and a match whose predicate already holds is dropped.
  bool skip_succedent_check = true;
  std::optional<std::uint64_t> order_seed;
  // Run every model check and a full priority scan after each step.
  bool paranoid = false;
  bool record_trace = false;
  std::function<void(const StepRecord&)> on_step;
};

struct RunStats {
  std::array<std::size_t, 3> applied{};  // by Rule
  std::size_t match_attempts = 0;        // guard evaluations
  std::size_t succedent_checks = 0;
  std::size_t succedent_hits = 0;
  std::map<std::string, std::chrono::nanoseconds> phase_time;
  std::vector<std::string> trace;

  std::size_t steps() const { return applied[0] + applied[1] + applied[2]; }
};

// Thrown by paranoid runs.
class InvariantViolation : public std::runtime_error {
 public:
  InvariantViolation(std::size_t step, ModelReport report);

  std::size_t step() const { return step_; }
  const ModelReport& report() const { return report_; }

 private:
  std::size_t step_;
  ModelReport report_;
};

// Applies one match at a time until no guard holds anywhere. A rule is only
// tried when no higher-priority rule matches any transition; within a rule
// the first transition in candidate order wins. Requires an initialised
// statechart with no AND states.
RunStats run_to_fixpoint(PetriNet& pn, ScModel& sc, const ReduceOptions& opts = {});

}  // namespace pn2sc

#endif  // PN2SC_REDUCE_H_
