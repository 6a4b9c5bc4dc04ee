#ifndef PN2SC_STATECHART_H_
#define PN2SC_STATECHART_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pn2sc/ids.h"

namespace pn2sc {

enum class StateKind : std::uint8_t { kBasic, kOr, kAnd };

std::string_view kind_name(StateKind kind);

// Basic, OR and AND share one id space. `next`/`rnext` are only populated on
// Basics; `contains` only on OR and AND.
struct State {
  StateKind kind;
  std::string name;
  std::optional<StateId> container;  // rcontains, multiplicity <= 1
  std::vector<StateId> contains;     // unordered; no duplicates
  std::set<EdgeId> next;             // hyperedges leaving this Basic
  std::set<EdgeId> rnext;            // hyperedges entering this Basic
};

struct HyperEdge {
  std::string name;
  std::set<StateId> next;   // target Basics
  std::set<StateId> rnext;  // source Basics
};

// Statechart workspace. Basic, OR and HyperEdge names are indexed; AND
// names are not. Containment moves: placing a state in a container detaches
// it from its previous one.
class ScModel {
 public:
  StateId add_basic(std::string name) { return add_state(StateKind::kBasic, std::move(name)); }
  StateId add_or(std::string name) { return add_state(StateKind::kOr, std::move(name)); }
  StateId add_and(std::string name) { return add_state(StateKind::kAnd, std::move(name)); }
  EdgeId add_hyperedge(std::string name);

  // Moves `child` into `container`, enforcing the kind-nesting rules
  // (OR holds Basic/AND, AND holds OR). Throws InternalFault otherwise.
  void move_into(StateId child, StateId container);
  // Moves every child of `from` into `to`; `from` ends empty.
  void move_children(StateId from, StateId to);
  void detach(StateId child);

  // e joins b.next (b joins e.rnext).
  void link(StateId basic, EdgeId e);
  // b joins e.next (e joins b.rnext).
  void link(EdgeId e, StateId basic);

  // Cascading delete: the state leaves its container, its children become
  // roots, its edge links vanish, and a Statechart rooted at it is removed.
  void delete_state(StateId s);
  void delete_hyperedge(EdgeId e);
  void rename_state(StateId s, std::string name);

  void set_statechart(StateId top_state);
  std::optional<StateId> statechart() const { return statechart_; }

  bool is_live(StateId s) const;
  bool is_live(EdgeId e) const;
  const State& state(StateId s) const;
  const HyperEdge& hyperedge(EdgeId e) const;

  std::optional<StateId> find_basic(const std::string& name) const;
  std::optional<StateId> find_or(const std::string& name) const;
  std::optional<EdgeId> find_hyperedge(const std::string& name) const;

  // Live elements in creation order.
  std::vector<StateId> states() const;
  std::vector<StateId> states(StateKind kind) const;
  std::vector<EdgeId> hyperedges() const;
  std::vector<StateId> roots() const;

  std::size_t count(StateKind kind) const { return live_[static_cast<int>(kind)]; }
  std::size_t state_count() const { return count(StateKind::kBasic) + count(StateKind::kOr) + count(StateKind::kAnd); }
  std::size_t hyperedge_count() const { return live_edges_; }
  bool empty() const { return state_count() == 0 && live_edges_ == 0 && !statechart_; }

  // Capacity hint for bulk construction.
  void reserve(std::size_t basics, std::size_t ors, std::size_t edges);

 private:
  struct StateSlot {
    State data;
    bool live = true;
  };
  struct EdgeSlot {
    HyperEdge data;
    bool live = true;
  };
  using NameIndex = std::unordered_multimap<std::string, StateId>;

  StateId add_state(StateKind kind, std::string name);
  StateSlot& live_slot(StateId s);
  EdgeSlot& live_slot(EdgeId e);
  NameIndex* index_for(StateKind kind);
  void unindex(StateId s);

  std::vector<StateSlot> states_;
  std::vector<EdgeSlot> edges_;
  NameIndex basic_index_;
  NameIndex or_index_;
  std::unordered_multimap<std::string, EdgeId> edge_index_;
  std::size_t live_[3] = {0, 0, 0};
  std::size_t live_edges_ = 0;
  std::optional<StateId> statechart_;
};

// Index lookup of an OR state by name; absent if no live OR has that name.
inline std::optional<StateId> lookup_or(const ScModel& sc, const std::string& name) {
  return sc.find_or(name);
}

}  // namespace pn2sc

#endif  // PN2SC_STATECHART_H_
