#include "pn2sc/cleanup.h"

namespace pn2sc {

std::size_t delete_empty_ors(ScModel& sc) {
  std::size_t deleted = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (StateId o : sc.states(StateKind::kOr)) {
      if (sc.state(o).contains.empty()) {
        sc.delete_state(o);
        ++deleted;
        changed = true;
      }
    }
  }
  return deleted;
}

namespace {

std::vector<StateId> roots_of_kind(const ScModel& sc, StateKind kind) {
  std::vector<StateId> out;
  for (StateId s : sc.roots()) {
    if (sc.state(s).kind == kind) out.push_back(s);
  }
  return out;
}

}  // namespace

void create_topstate(ScModel& sc, std::vector<std::string>& warnings) {
  auto roots = roots_of_kind(sc, StateKind::kOr);
  if (roots.size() != 1) {
    warnings.push_back("expected exactly one root OR state, found " +
                       std::to_string(roots.size()) + "; no " + kTopStateName +
                       " created");
    return;
  }
  StateId top = sc.add_and(kTopStateName);
  sc.move_into(roots.front(), top);
}

void create_statechart_instance(ScModel& sc, std::vector<std::string>& warnings) {
  auto roots = roots_of_kind(sc, StateKind::kAnd);
  if (roots.size() != 1) {
    warnings.push_back("expected exactly one root AND state, found " +
                       std::to_string(roots.size()) + "; no statechart created");
    return;
  }
  if (sc.statechart() == roots.front()) return;
  if (sc.statechart()) {
    warnings.push_back("a statechart already exists on another top state");
    return;
  }
  sc.set_statechart(roots.front());
}

CleanupReport cleanup(ScModel& sc) {
  CleanupReport report;
  report.deleted_ors = delete_empty_ors(sc);
  create_topstate(sc, report.warnings);
  create_statechart_instance(sc, report.warnings);
  return report;
}

}  // namespace pn2sc
