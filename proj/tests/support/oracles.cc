#include "support/oracles.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "pn2sc/bench.h"
#include "pn2sc/reduce.h"
#include "pn2sc/text_format.h"

namespace pn2sc::testing {

namespace {

template <class T>
T unwrap_or_die(ParseResult<T> r, const std::string& text) {
  if (!r.ok()) {
    std::fprintf(stderr, "test fixture failed to parse:\n%s\n", text.c_str());
    for (const auto& d : r.diagnostics) {
      std::fprintf(stderr, "  %s\n", format_diagnostic(d, "fixture").c_str());
    }
    std::abort();
  }
  return std::move(*r.value);
}

int draw_arity(std::mt19937_64& rng) {
  static const std::discrete_distribution<int> arity{1, 6, 3, 1};
  auto d = arity;
  return d(rng);
}

}  // namespace

PetriNet net_from_text(const std::string& text) {
  return unwrap_or_die(parse_petri_net(text), text);
}

ScModel statechart_from_text(const std::string& text) {
  return unwrap_or_die(parse_statechart(text), text);
}

PetriNet qtr_net() {
  return net_from_text("place q\nplace r\ntransition t\narc q t\narc t r\n");
}

PetriNet random_net(std::mt19937_64& rng, int max_places, int max_transitions) {
  int places = std::uniform_int_distribution<int>(1, max_places)(rng);
  int transitions = std::uniform_int_distribution<int>(0, max_transitions)(rng);
  PetriNet pn;
  std::vector<PlaceId> ps;
  for (int i = 0; i < places; ++i) ps.push_back(pn.add_place("p" + std::to_string(i)));
  std::uniform_int_distribution<int> pick(0, places - 1);
  for (int i = 0; i < transitions; ++i) {
    TransitionId t = pn.add_transition("t" + std::to_string(i));
    int in = std::min(draw_arity(rng), places);
    int out = std::min(draw_arity(rng), places);
    for (int k = 0; k < in; ++k) pn.add_arc(ps[pick(rng)], t);
    for (int k = 0; k < out; ++k) pn.add_arc(t, ps[pick(rng)]);
  }
  return pn;
}

PetriNet perturbed_sp_net(std::mt19937_64& rng, int max_places) {
  std::size_t places = std::uniform_int_distribution<std::size_t>(1, max_places)(rng);
  double pprob = std::uniform_real_distribution<double>(0.0, 0.8)(rng);
  PetriNet pn = generate_sp({places, rng(), pprob});
  std::vector<PlaceId> ps = pn.places();
  std::vector<TransitionId> ts = pn.transitions();
  if (ts.size() < static_cast<std::size_t>(max_places) && rng() % 2) {
    TransitionId t = pn.add_transition("x" + std::to_string(ts.size()));
    ts.push_back(t);
  }
  if (ts.empty()) return pn;
  std::uniform_int_distribution<std::size_t> pick_p(0, ps.size() - 1), pick_t(0, ts.size() - 1);
  int extra = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int k = 0; k < extra; ++k) {
    if (rng() % 2) {
      pn.add_arc(ps[pick_p(rng)], ts[pick_t(rng)]);
    } else {
      pn.add_arc(ts[pick_t(rng)], ps[pick_p(rng)]);
    }
  }
  return pn;
}

ScModel random_flat_statechart(std::mt19937_64& rng, int max_basics, int max_edges) {
  int basics = std::uniform_int_distribution<int>(0, max_basics)(rng);
  int edges = std::uniform_int_distribution<int>(0, max_edges)(rng);
  ScModel sc;
  std::vector<StateId> bs;
  for (int i = 0; i < basics; ++i) {
    std::string name = "s" + std::to_string(i);
    StateId b = sc.add_basic(name);
    sc.move_into(b, sc.add_or(name));
    bs.push_back(b);
  }
  for (int i = 0; i < edges; ++i) {
    EdgeId e = sc.add_hyperedge("h" + std::to_string(i));
    if (bs.empty()) continue;
    std::uniform_int_distribution<int> pick(0, basics - 1);
    int in = draw_arity(rng), out = draw_arity(rng);
    for (int k = 0; k < in; ++k) sc.link(bs[pick(rng)], e);
    for (int k = 0; k < out; ++k) sc.link(e, bs[pick(rng)]);
  }
  return sc;
}

namespace {

std::set<TransitionId> intersect(const std::set<TransitionId>& a,
                                 const std::set<TransitionId>& b) {
  std::set<TransitionId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.begin()));
  return out;
}

// Written directly from the rule guards; deliberately shares no code with
// the production matcher.
std::optional<Match> naive_guard(Rule rule, const PetriNet& pn, TransitionId t) {
  const Transition& tr = pn.transition(t);
  if (rule == Rule::kOrReduce) {
    if (tr.prep.size() != 1 || tr.postp.size() != 1) return std::nullopt;
    PlaceId q = *tr.prep.begin(), r = *tr.postp.begin();
    if (!intersect(pn.place(q).pret, pn.place(r).pret).empty()) return std::nullopt;
    if (!intersect(pn.place(q).postt, pn.place(r).postt).empty()) return std::nullopt;
    return Match{rule, t, {q, r}};
  }
  const auto& group = rule == Rule::kAndMergePre ? tr.prep : tr.postp;
  if (!(group.size() > 1)) return std::nullopt;
  std::vector<std::pair<std::string, PlaceId>> named;
  for (PlaceId p : group) named.emplace_back(pn.place(p).name, p);
  std::sort(named.begin(), named.end());
  const Place& p1 = pn.place(named.front().second);
  for (const auto& [name, p2] : named) {
    if (p1.pret != pn.place(p2).pret || p1.postt != pn.place(p2).postt) return std::nullopt;
  }
  Match m{rule, t, {}};
  for (const auto& [name, p] : named) m.places.push_back(p);
  return m;
}

std::string naive_trace_line(const PetriNet& pn, const Match& m) {
  static const char* kNames[] = {"or-reduce", "and-merge-pre", "and-merge-post"};
  std::string line = std::string(kNames[static_cast<int>(m.rule)]) + " @ " +
                     pn.transition(m.transition).name + " [bound: ";
  for (std::size_t i = 0; i < m.places.size(); ++i) {
    line += (i ? ", " : "") + pn.place(m.places[i]).name;
  }
  return line + "]";
}

}  // namespace

std::vector<std::string> reference_trace(PetriNet& pn, ScModel& sc,
                                         const std::vector<TransitionId>& order) {
  std::vector<std::string> trace;
  while (true) {
    std::optional<Match> found;
    for (Rule rule : {Rule::kOrReduce, Rule::kAndMergePre, Rule::kAndMergePost}) {
      for (TransitionId t : order) {
        if (!pn.is_live(t)) continue;
        if ((found = naive_guard(rule, pn, t))) break;
      }
      if (found) break;
    }
    if (!found) return trace;
    trace.push_back(naive_trace_line(pn, *found));
    apply_match(pn, sc, *found);
  }
}

namespace {

struct Flat {
  // node i: kind 0..2 states, 3 hyperedge; 4 added for the top state
  std::vector<int> kind;
  std::set<std::pair<int, int>> contains;
  std::set<std::pair<int, int>> next;
};

Flat flatten(const ScModel& sc) {
  Flat f;
  std::unordered_map<StateId, int> sn;
  std::unordered_map<EdgeId, int> en;
  for (StateId s : sc.states()) {
    sn[s] = static_cast<int>(f.kind.size());
    f.kind.push_back(static_cast<int>(sc.state(s).kind) + (sc.statechart() == s ? 4 : 0));
  }
  for (EdgeId e : sc.hyperedges()) {
    en[e] = static_cast<int>(f.kind.size());
    f.kind.push_back(3);
  }
  for (StateId s : sc.states()) {
    for (StateId c : sc.state(s).contains) f.contains.insert({sn[s], sn[c]});
    for (EdgeId e : sc.state(s).next) f.next.insert({sn[s], en[e]});
  }
  for (EdgeId e : sc.hyperedges()) {
    for (StateId b : sc.hyperedge(e).next) f.next.insert({en[e], sn[b]});
  }
  return f;
}

}  // namespace

bool brute_force_isomorphic(const ScModel& a, const ScModel& b) {
  Flat fa = flatten(a), fb = flatten(b);
  std::size_t n = fa.kind.size();
  if (n != fb.kind.size() || fa.contains.size() != fb.contains.size() ||
      fa.next.size() != fb.next.size()) {
    return false;
  }
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || fa.kind[i] != fb.kind[j]) continue;
      bool ok = true;
      int ii = static_cast<int>(i), jj = static_cast<int>(j);
      ok = fa.contains.contains({ii, ii}) == fb.contains.contains({jj, jj}) &&
           fa.next.contains({ii, ii}) == fb.next.contains({jj, jj});
      for (std::size_t k = 0; ok && k < i; ++k) {
        int kk = static_cast<int>(k), mk = map[k];
        ok = fa.contains.contains({kk, ii}) == fb.contains.contains({mk, jj}) &&
             fa.contains.contains({ii, kk}) == fb.contains.contains({jj, mk}) &&
             fa.next.contains({kk, ii}) == fb.next.contains({mk, jj}) &&
             fa.next.contains({ii, kk}) == fb.next.contains({jj, mk});
      }
      if (!ok) continue;
      map[i] = jj;
      used[j] = true;
      if (extend(i + 1)) return true;
      used[j] = false;
      map[i] = -1;
    }
    return false;
  };
  return extend(0);
}

ScModel shuffled_copy(const ScModel& sc, std::mt19937_64& rng) {
  ScModel out;
  auto states = sc.states();
  auto edges = sc.hyperedges();
  std::shuffle(states.begin(), states.end(), rng);
  std::shuffle(edges.begin(), edges.end(), rng);
  std::unordered_map<StateId, StateId> sm;
  std::unordered_map<EdgeId, EdgeId> em;
  int k = 0;
  for (StateId s : states) {
    std::string name = "n" + std::to_string(k++);
    switch (sc.state(s).kind) {
      case StateKind::kBasic: sm[s] = out.add_basic(name); break;
      case StateKind::kOr: sm[s] = out.add_or(name); break;
      case StateKind::kAnd: sm[s] = out.add_and(name); break;
    }
  }
  for (EdgeId e : edges) em[e] = out.add_hyperedge("e" + std::to_string(k++));
  for (StateId s : states) {
    if (auto c = sc.state(s).container) out.move_into(sm[s], sm[*c]);
  }
  for (EdgeId e : edges) {
    for (StateId b : sc.hyperedge(e).rnext) out.link(sm[b], em[e]);
    for (StateId b : sc.hyperedge(e).next) out.link(em[e], sm[b]);
  }
  if (auto top = sc.statechart()) out.set_statechart(sm[*top]);
  return out;
}

}  // namespace pn2sc::testing
