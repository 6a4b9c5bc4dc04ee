#include "pn2sc/checks.h"

#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace pn2sc {

void ModelReport::add(std::string invariant, std::string element,
                      std::string message) {
  violations.push_back({std::move(invariant), std::move(element), std::move(message)});
}

void ModelReport::merge(const ModelReport& other) {
  violations.insert(violations.end(), other.violations.begin(),
                    other.violations.end());
}

std::string ModelReport::to_string() const {
  std::ostringstream out;
  for (const auto& v : violations) {
    out << v.invariant << ": " << v.element << ": " << v.message << '\n';
  }
  return out.str();
}

namespace {

// Reports each name occurring more than once, in name order.
void report_duplicates(const std::map<std::string, int>& counts,
                       const std::string& invariant, const std::string& what,
                       ModelReport& report) {
  for (const auto& [name, n] : counts) {
    if (n > 1) {
      report.add(invariant, name,
                 "duplicate " + what + " name " + name + " (" +
                     std::to_string(n) + " occurrences)");
    }
  }
}

}  // namespace

ModelReport check_name_uniqueness(const PetriNet& pn, const ScModel& sc) {
  ModelReport report;
  std::map<std::string, int> named;
  for (PlaceId p : pn.places()) ++named[pn.place(p).name];
  for (TransitionId t : pn.transitions()) ++named[pn.transition(t).name];
  report_duplicates(named, "pn-name-unique", "NamedElement", report);

  std::map<std::string, int> basics, ors, edges;
  for (StateId s : sc.states()) {
    const State& st = sc.state(s);
    if (st.kind == StateKind::kBasic) ++basics[st.name];
    if (st.kind == StateKind::kOr) ++ors[st.name];
  }
  for (EdgeId e : sc.hyperedges()) ++edges[sc.hyperedge(e).name];
  report_duplicates(basics, "basic-name-unique", "Basic", report);
  report_duplicates(ors, "or-name-unique", "OR", report);
  report_duplicates(edges, "hyperedge-name-unique", "HyperEdge", report);
  return report;
}

ModelReport check_inv(const PetriNet& pn, const ScModel& sc) {
  ModelReport report;
  std::unordered_map<std::string, int> ors;
  for (StateId s : sc.states(StateKind::kOr)) ++ors[sc.state(s).name];
  for (PlaceId p : pn.places()) {
    const std::string& name = pn.place(p).name;
    auto it = ors.find(name);
    int n = it == ors.end() ? 0 : it->second;
    if (n != 1) {
      report.add("inv", name,
                 "place " + name + " has " + std::to_string(n) +
                     " same-named OR states (expected exactly 1)");
    }
  }
  return report;
}

ModelReport check_net_links(const PetriNet& pn) {
  ModelReport report;
  for (TransitionId t : pn.transitions()) {
    const Transition& tr = pn.transition(t);
    for (PlaceId p : tr.prep) {
      if (!pn.is_live(p)) {
        report.add("pn-links", tr.name, "prep references a deleted place");
      } else if (!pn.place(p).postt.contains(t)) {
        report.add("pn-links", tr.name,
                   "prep has " + pn.place(p).name + " but its postt lacks the transition");
      }
    }
    for (PlaceId p : tr.postp) {
      if (!pn.is_live(p)) {
        report.add("pn-links", tr.name, "postp references a deleted place");
      } else if (!pn.place(p).pret.contains(t)) {
        report.add("pn-links", tr.name,
                   "postp has " + pn.place(p).name + " but its pret lacks the transition");
      }
    }
  }
  for (PlaceId p : pn.places()) {
    const Place& pl = pn.place(p);
    for (TransitionId t : pl.postt) {
      if (!pn.is_live(t)) {
        report.add("pn-links", pl.name, "postt references a deleted transition");
      } else if (!pn.transition(t).prep.contains(p)) {
        report.add("pn-links", pl.name,
                   "postt has " + pn.transition(t).name + " but its prep lacks the place");
      }
    }
    for (TransitionId t : pl.pret) {
      if (!pn.is_live(t)) {
        report.add("pn-links", pl.name, "pret references a deleted transition");
      } else if (!pn.transition(t).postp.contains(p)) {
        report.add("pn-links", pl.name,
                   "pret has " + pn.transition(t).name + " but its postp lacks the place");
      }
    }
  }
  return report;
}

ModelReport check_sc_structure(const ScModel& sc) {
  ModelReport report;
  std::unordered_set<StateId> listed;
  for (StateId s : sc.states()) {
    for (StateId c : sc.state(s).contains) listed.insert(c);
  }
  for (StateId s : sc.states()) {
    const State& st = sc.state(s);
    if (st.kind != StateKind::kBasic && (!st.next.empty() || !st.rnext.empty())) {
      report.add("sc-links", st.name, "only Basic states may carry next/rnext");
    }
    for (EdgeId e : st.next) {
      if (!sc.is_live(e) || !sc.hyperedge(e).rnext.contains(s)) {
        report.add("sc-links", st.name, "next/rnext mismatch");
      }
    }
    for (EdgeId e : st.rnext) {
      if (!sc.is_live(e) || !sc.hyperedge(e).next.contains(s)) {
        report.add("sc-links", st.name, "rnext/next mismatch");
      }
    }
    std::set<StateId> seen;
    for (StateId c : st.contains) {
      if (!seen.insert(c).second) {
        report.add("sc-containment", st.name, "child listed twice");
        continue;
      }
      if (!sc.is_live(c) || sc.state(c).container != s) {
        report.add("sc-containment", st.name, "contains/rcontains mismatch");
        continue;
      }
      StateKind ck = sc.state(c).kind;
      bool ok = (st.kind == StateKind::kOr && ck != StateKind::kOr) ||
                (st.kind == StateKind::kAnd && ck == StateKind::kOr);
      if (!ok) {
        report.add("sc-nesting", st.name,
                   std::string(kind_name(st.kind)) + " may not contain " +
                       std::string(kind_name(ck)) + " " + sc.state(c).name);
      }
    }
    if (st.container && (!sc.is_live(*st.container) || !listed.contains(s))) {
      report.add("sc-containment", st.name, "rcontains/contains mismatch");
    }
    // Walk to the root; a walk longer than the state count means a cycle.
    std::size_t steps = 0;
    for (auto up = st.container; up && sc.is_live(*up); up = sc.state(*up).container) {
      if (++steps > sc.state_count()) {
        report.add("sc-containment", st.name, "containment cycle");
        break;
      }
    }
  }
  for (EdgeId e : sc.hyperedges()) {
    const HyperEdge& he = sc.hyperedge(e);
    for (StateId b : he.next) {
      if (!sc.is_live(b) || !sc.state(b).rnext.contains(e)) {
        report.add("sc-links", he.name, "next/rnext mismatch");
      }
    }
    for (StateId b : he.rnext) {
      if (!sc.is_live(b) || !sc.state(b).next.contains(e)) {
        report.add("sc-links", he.name, "rnext/next mismatch");
      }
    }
  }
  if (auto top = sc.statechart()) {
    if (!sc.is_live(*top)) {
      report.add("sc-topstate", "?", "statechart top state is deleted");
    } else if (sc.state(*top).container) {
      report.add("sc-topstate", sc.state(*top).name, "top state is contained");
    }
  }
  return report;
}

ModelReport check_all(const PetriNet& pn, const ScModel& sc) {
  ModelReport report = check_name_uniqueness(pn, sc);
  report.merge(check_inv(pn, sc));
  report.merge(check_net_links(pn));
  report.merge(check_sc_structure(sc));
  return report;
}

}  // namespace pn2sc
