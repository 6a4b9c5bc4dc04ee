#include "pn2sc/reduce.h"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

namespace pn2sc {

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::kOrReduce:
      return "or-reduce";
    case Rule::kAndMergePre:
      return "and-merge-pre";
    case Rule::kAndMergePost:
      return "and-merge-post";
  }
  return "?";
}

namespace {

template <class T>
bool disjoint(const std::set<T>& a, const std::set<T>& b) {
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  for (const T& x : small) {
    if (large.contains(x)) return false;
  }
  return true;
}

std::optional<Match> try_and_merge(const PetriNet& pn, TransitionId t, Rule rule) {
  const Transition& tr = pn.transition(t);
  const auto& group = rule == Rule::kAndMergePre ? tr.prep : tr.postp;
  if (group.size() <= 1) return std::nullopt;
  auto it = group.begin();
  const Place& first = pn.place(*it);
  for (++it; it != group.end(); ++it) {
    const Place& other = pn.place(*it);
    if (other.pret != first.pret || other.postt != first.postt) return std::nullopt;
  }
  Match m{rule, t, {group.begin(), group.end()}};
  std::sort(m.places.begin(), m.places.end(), [&pn](PlaceId a, PlaceId b) {
    const std::string& na = pn.place(a).name;
    const std::string& nb = pn.place(b).name;
    return na != nb ? na < nb : a < b;
  });
  return m;
}

StateId require_or(const ScModel& sc, const std::string& name) {
  auto o = sc.find_or(name);
  if (!o) throw InternalFault("no OR state for place " + name);
  return *o;
}

void require_current(const PetriNet& pn, const Match& m) {
  if (!pn.is_live(m.transition)) throw InternalFault("stale match: transition deleted");
  for (PlaceId p : m.places) {
    if (!pn.is_live(p)) throw InternalFault("stale match: bound place deleted");
  }
  auto fresh = try_rule(m.rule, pn, m.transition);
  if (!fresh || fresh->places != m.places) {
    throw InternalFault("stale match at " + pn.transition(m.transition).name);
  }
}

}  // namespace

std::optional<Match> try_or_reduce(const PetriNet& pn, TransitionId t) {
  const Transition& tr = pn.transition(t);
  if (tr.prep.size() != 1 || tr.postp.size() != 1) return std::nullopt;
  PlaceId q = *tr.prep.begin();
  PlaceId r = *tr.postp.begin();
  const Place& pq = pn.place(q);
  const Place& pr = pn.place(r);
  if (!disjoint(pq.pret, pr.pret) || !disjoint(pq.postt, pr.postt)) {
    return std::nullopt;
  }
  return Match{Rule::kOrReduce, t, {q, r}};
}

std::optional<Match> try_and_merge_pre(const PetriNet& pn, TransitionId t) {
  return try_and_merge(pn, t, Rule::kAndMergePre);
}

std::optional<Match> try_and_merge_post(const PetriNet& pn, TransitionId t) {
  return try_and_merge(pn, t, Rule::kAndMergePost);
}

std::optional<Match> try_rule(Rule rule, const PetriNet& pn, TransitionId t) {
  switch (rule) {
    case Rule::kOrReduce:
      return try_or_reduce(pn, t);
    case Rule::kAndMergePre:
      return try_and_merge_pre(pn, t);
    case Rule::kAndMergePost:
      return try_and_merge_post(pn, t);
  }
  return std::nullopt;
}

std::string fresh_name(const PetriNet& pn, const ScModel& sc,
                       const std::string& candidate) {
  auto taken = [&](const std::string& n) {
    return sc.find_or(n).has_value() || pn.name_in_use(n);
  };
  if (!taken(candidate)) return candidate;
  for (std::size_t k = 1;; ++k) {
    std::string name = candidate + "~" + std::to_string(k);
    if (!taken(name)) return name;
  }
}

void apply_or_reduce(PetriNet& pn, ScModel& sc, const Match& m) {
  if (m.rule != Rule::kOrReduce) throw InternalFault("not an or-reduce match");
  require_current(pn, m);
  const PlaceId q = m.places[0];
  const PlaceId r = m.places[1];
  const StateId q_region = require_or(sc, pn.place(q).name);
  const StateId r_region = require_or(sc, pn.place(r).name);

  const std::string name =
      fresh_name(pn, sc, pn.place(q).name + "_OR_" + pn.place(r).name);
  const StateId merged = sc.add_or(name);
  sc.move_children(q_region, merged);
  sc.move_children(r_region, merged);
  pn.rename_place(q, name);

  const std::vector<TransitionId> r_in(pn.place(r).pret.begin(), pn.place(r).pret.end());
  const std::vector<TransitionId> r_out(pn.place(r).postt.begin(), pn.place(r).postt.end());
  for (TransitionId u : r_in) pn.add_arc(u, q);
  for (TransitionId u : r_out) pn.add_arc(q, u);
  pn.delete_place(r);
  pn.delete_transition(m.transition);
}

void apply_and_merge(PetriNet& pn, ScModel& sc, const Match& m) {
  if (m.rule == Rule::kOrReduce) throw InternalFault("not an and-merge match");
  require_current(pn, m);
  const bool pre = m.rule == Rule::kAndMergePre;
  const std::string& tname = pn.transition(m.transition).name;

  std::vector<StateId> regions;
  regions.reserve(m.places.size());
  for (PlaceId p : m.places) regions.push_back(require_or(sc, pn.place(p).name));

  const StateId conj = sc.add_and((pre ? "a1_" : "a2_") + tname);
  const std::string name = fresh_name(pn, sc, (pre ? "AND1_" : "AND2_") + tname);
  const StateId region = sc.add_or(name);
  sc.move_into(conj, region);
  for (StateId o : regions) sc.move_into(o, conj);

  pn.rename_place(m.places.front(), name);
  for (std::size_t i = 1; i < m.places.size(); ++i) pn.delete_place(m.places[i]);
}

void apply_match(PetriNet& pn, ScModel& sc, const Match& m) {
  if (m.rule == Rule::kOrReduce) {
    apply_or_reduce(pn, sc, m);
  } else {
    apply_and_merge(pn, sc, m);
  }
}

bool succedent_holds(const PetriNet& pn, const ScModel& sc, const Match& m) {
  // Conjuncts are evaluated left to right with short-circuiting, in the
  // order the rule states them.
  if (m.rule == Rule::kOrReduce) {
    const Place& q = pn.place(m.places[0]);
    const Place& r = pn.place(m.places[1]);
    auto merged = sc.find_or(q.name + "_OR_" + r.name);
    if (!merged) return false;
    auto q_region = sc.find_or(q.name);
    auto r_region = sc.find_or(r.name);
    std::set<StateId> expected;
    if (q_region) {
      const auto& c = sc.state(*q_region).contains;
      expected.insert(c.begin(), c.end());
    }
    if (r_region) {
      const auto& c = sc.state(*r_region).contains;
      expected.insert(c.begin(), c.end());
    }
    const auto& have = sc.state(*merged).contains;
    if (std::set<StateId>(have.begin(), have.end()) != expected) return false;
    if (q.name != sc.state(*merged).name) return false;
    if (!std::includes(q.pret.begin(), q.pret.end(), r.pret.begin(), r.pret.end())) return false;
    if (!std::includes(q.postt.begin(), q.postt.end(), r.postt.begin(), r.postt.end())) return false;
    if (pn.is_live(m.places[1])) return false;
    return !pn.is_live(m.transition);
  }

  const bool pre = m.rule == Rule::kAndMergePre;
  const Transition& tr = pn.transition(m.transition);
  const std::string or_name = (pre ? "AND1_" : "AND2_") + tr.name;
  const std::string and_name = (pre ? "a1_" : "a2_") + tr.name;
  const auto& group = pre ? tr.prep : tr.postp;
  std::set<StateId> expected;
  for (PlaceId p : group) {
    if (auto o = sc.find_or(pn.place(p).name)) expected.insert(*o);
  }
  auto region = sc.find_or(or_name);
  if (!region) return false;
  bool found = false;
  for (StateId a : sc.state(*region).contains) {
    const State& st = sc.state(a);
    if (st.kind != StateKind::kAnd || st.name != and_name) continue;
    if (std::set<StateId>(st.contains.begin(), st.contains.end()) == expected) {
      found = true;
      break;
    }
  }
  if (!found) return false;
  if (pn.place(m.places.front()).name != or_name) return false;
  for (std::size_t i = 1; i < m.places.size(); ++i) {
    if (pn.is_live(m.places[i])) return false;
  }
  return group.size() == 1 && *group.begin() == m.places.front();
}

std::string trace_line(const PetriNet& pn, const Match& m) {
  std::string line(rule_name(m.rule));
  line += " @ ";
  line += pn.transition(m.transition).name;
  line += " [bound: ";
  for (std::size_t i = 0; i < m.places.size(); ++i) {
    if (i) line += ", ";
    line += pn.place(m.places[i]).name;
  }
  line += "]";
  return line;
}

std::vector<TransitionId> candidate_order(const PetriNet& pn,
                                          std::optional<std::uint64_t> seed) {
  std::vector<TransitionId> order = pn.transitions();
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

InvariantViolation::InvariantViolation(std::size_t step, ModelReport report)
    : std::runtime_error("invariant violated after step " + std::to_string(step) +
                         ":\n" + report.to_string()),
      step_(step),
      report_(std::move(report)) {}

namespace {

// Per-rule sets of transitions whose guard currently holds, keyed by scan
// rank. Only transitions next to places touched by a step are re-evaluated.
class Agenda {
 public:
  Agenda(const PetriNet& pn, const std::vector<TransitionId>& order, RunStats& stats)
      : pn_(pn), stats_(stats), rank_(pn.transition_capacity(), kUnranked),
        by_rank_(order) {
    for (std::uint32_t i = 0; i < order.size(); ++i) rank_[order[i].value] = i;
    for (std::size_t k = 0; k < 3; ++k) member_[k].assign(pn.transition_capacity(), false);
    for (TransitionId t : order) refresh(t);
  }

  void refresh(TransitionId t) {
    std::uint32_t r = rank_[t.value];
    bool live = pn_.is_live(t);
    for (Rule rule : kRulesByPriority) {
      auto k = static_cast<std::size_t>(rule);
      bool holds = false;
      if (live) {
        ++stats_.match_attempts;
        holds = try_rule(rule, pn_, t).has_value();
      }
      if (holds && !member_[k][t.value]) {
        ready_[k].insert(r);
        member_[k][t.value] = true;
      } else if (!holds && member_[k][t.value]) {
        ready_[k].erase(r);
        member_[k][t.value] = false;
      }
    }
  }

  void drop(Rule rule, TransitionId t) {
    auto k = static_cast<std::size_t>(rule);
    if (member_[k][t.value]) {
      ready_[k].erase(rank_[t.value]);
      member_[k][t.value] = false;
    }
  }

  // Highest-priority rule with a ready transition, first in scan order.
  std::optional<Match> next() {
    for (Rule rule : kRulesByPriority) {
      auto k = static_cast<std::size_t>(rule);
      while (!ready_[k].empty()) {
        TransitionId t = by_rank_[*ready_[k].begin()];
        ++stats_.match_attempts;
        if (auto m = try_rule(rule, pn_, t)) return m;
        drop(rule, t);
      }
    }
    return std::nullopt;
  }

 private:
  static constexpr std::uint32_t kUnranked = ~0u;

  const PetriNet& pn_;
  RunStats& stats_;
  std::vector<std::uint32_t> rank_;
  std::vector<TransitionId> by_rank_;
  std::array<std::set<std::uint32_t>, 3> ready_;
  std::array<std::vector<bool>, 3> member_;
};

void check_priority(const PetriNet& pn, const Match& m, std::size_t step) {
  ModelReport report;
  for (Rule higher : kRulesByPriority) {
    if (higher == m.rule) break;
    for (TransitionId t : pn.transitions()) {
      if (try_rule(higher, pn, t)) {
        report.add("rule-priority", pn.transition(t).name,
                   std::string(rule_name(higher)) + " matches while " +
                       std::string(rule_name(m.rule)) + " was selected");
      }
    }
  }
  if (!report.passed()) throw InvariantViolation(step, std::move(report));
}

}  // namespace

RunStats run_to_fixpoint(PetriNet& pn, ScModel& sc, const ReduceOptions& opts) {
  auto started = std::chrono::steady_clock::now();
  if (sc.count(StateKind::kAnd) != 0) {
    throw std::invalid_argument("reduction requires a statechart without AND states");
  }
  if (auto inv = check_inv(pn, sc); !inv.passed()) {
    throw std::invalid_argument("reduction requires every place to have one same-named OR:\n" +
                                inv.to_string());
  }

  RunStats stats;
  Agenda agenda(pn, candidate_order(pn, opts.order_seed), stats);
  std::vector<TransitionId> dirty;
  std::size_t step = 0;
  while (auto m = agenda.next()) {
    if (opts.paranoid) check_priority(pn, *m, step);
    if (!opts.skip_succedent_check) {
      ++stats.succedent_checks;
      if (succedent_holds(pn, sc, *m)) {
        ++stats.succedent_hits;
        agenda.drop(m->rule, m->transition);
        continue;
      }
    }

    dirty.clear();
    dirty.push_back(m->transition);
    for (PlaceId p : m->places) {
      const Place& place = pn.place(p);
      dirty.insert(dirty.end(), place.pret.begin(), place.pret.end());
      dirty.insert(dirty.end(), place.postt.begin(), place.postt.end());
    }
    if (opts.record_trace) stats.trace.push_back(trace_line(pn, *m));

    apply_match(pn, sc, *m);
    ++stats.applied[static_cast<std::size_t>(m->rule)];

    std::sort(dirty.begin(), dirty.end());
    dirty.erase(std::unique(dirty.begin(), dirty.end()), dirty.end());
    for (TransitionId t : dirty) agenda.refresh(t);

    if (opts.paranoid) {
      if (auto report = check_all(pn, sc); !report.passed()) {
        throw InvariantViolation(step, std::move(report));
      }
    }
    if (opts.on_step) {
      opts.on_step({step, *m, pn.place_count(), pn.transition_count()});
    }
    ++step;
  }
  stats.phase_time["reduce"] = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - started);
  return stats;
}

}  // namespace pn2sc
