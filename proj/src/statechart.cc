#include "pn2sc/statechart.h"

#include <algorithm>
#include <utility>

namespace pn2sc {

std::string_view kind_name(StateKind kind) {
  switch (kind) {
    case StateKind::kBasic:
      return "basic";
    case StateKind::kOr:
      return "or";
    case StateKind::kAnd:
      return "and";
  }
  return "?";
}

namespace {

template <class Index, class IdT>
std::optional<IdT> oldest(const Index& index, const std::string& name) {
  auto [lo, hi] = index.equal_range(name);
  std::optional<IdT> best;
  for (auto it = lo; it != hi; ++it) {
    if (!best || it->second < *best) best = it->second;
  }
  return best;
}

bool may_contain(StateKind container, StateKind child) {
  if (container == StateKind::kOr) return child != StateKind::kOr;
  if (container == StateKind::kAnd) return child == StateKind::kOr;
  return false;
}

}  // namespace

ScModel::NameIndex* ScModel::index_for(StateKind kind) {
  switch (kind) {
    case StateKind::kBasic:
      return &basic_index_;
    case StateKind::kOr:
      return &or_index_;
    case StateKind::kAnd:
      return nullptr;
  }
  return nullptr;
}

StateId ScModel::add_state(StateKind kind, std::string name) {
  StateId id{static_cast<std::uint32_t>(states_.size())};
  if (auto* index = index_for(kind)) index->emplace(name, id);
  states_.push_back({State{kind, std::move(name), std::nullopt, {}, {}, {}}, true});
  ++live_[static_cast<int>(kind)];
  return id;
}

void ScModel::reserve(std::size_t basics, std::size_t ors, std::size_t edges) {
  states_.reserve(states_.size() + basics + ors);
  edges_.reserve(edges_.size() + edges);
  basic_index_.reserve(basic_index_.size() + basics);
  or_index_.reserve(or_index_.size() + ors);
  edge_index_.reserve(edge_index_.size() + edges);
}

EdgeId ScModel::add_hyperedge(std::string name) {
  EdgeId id{static_cast<std::uint32_t>(edges_.size())};
  edge_index_.emplace(name, id);
  edges_.push_back({HyperEdge{std::move(name), {}, {}}, true});
  ++live_edges_;
  return id;
}

ScModel::StateSlot& ScModel::live_slot(StateId s) {
  if (s.value >= states_.size() || !states_[s.value].live) {
    throw InternalFault("state " + std::to_string(s.value) + " is not live");
  }
  return states_[s.value];
}

ScModel::EdgeSlot& ScModel::live_slot(EdgeId e) {
  if (e.value >= edges_.size() || !edges_[e.value].live) {
    throw InternalFault("hyperedge " + std::to_string(e.value) +
                        " is not live");
  }
  return edges_[e.value];
}

void ScModel::detach(StateId child) {
  auto& slot = live_slot(child);
  if (!slot.data.container) return;
  auto& siblings = states_[slot.data.container->value].data.contains;
  siblings.erase(std::find(siblings.begin(), siblings.end(), child));
  slot.data.container.reset();
}

void ScModel::move_into(StateId child, StateId container) {
  auto& c = live_slot(container);
  auto& s = live_slot(child);
  if (!may_contain(c.data.kind, s.data.kind)) {
    throw InternalFault(std::string(kind_name(c.data.kind)) + " " +
                        c.data.name + " may not contain " +
                        std::string(kind_name(s.data.kind)) + " " +
                        s.data.name);
  }
  if (s.data.container == container) return;
  for (auto up = c.data.container; up; up = states_[up->value].data.container) {
    if (*up == child) throw InternalFault("containment cycle through " + s.data.name);
  }
  if (child == container) throw InternalFault("containment cycle through " + s.data.name);
  detach(child);
  s.data.container = container;
  c.data.contains.push_back(child);
}

void ScModel::move_children(StateId from, StateId to) {
  if (from == to) return;
  auto moving = std::move(live_slot(from).data.contains);
  live_slot(from).data.contains.clear();
  for (StateId child : moving) states_[child.value].data.container.reset();
  for (StateId child : moving) move_into(child, to);
}

void ScModel::link(StateId basic, EdgeId e) {
  auto& b = live_slot(basic);
  if (b.data.kind != StateKind::kBasic) {
    throw InternalFault("only Basic states carry next links: " + b.data.name);
  }
  b.data.next.insert(e);
  live_slot(e).data.rnext.insert(basic);
}

void ScModel::link(EdgeId e, StateId basic) {
  auto& b = live_slot(basic);
  if (b.data.kind != StateKind::kBasic) {
    throw InternalFault("hyperedges may only target Basic states: " +
                        b.data.name);
  }
  live_slot(e).data.next.insert(basic);
  b.data.rnext.insert(e);
}

void ScModel::unindex(StateId s) {
  auto* index = index_for(states_[s.value].data.kind);
  if (!index) return;
  auto [lo, hi] = index->equal_range(states_[s.value].data.name);
  for (auto it = lo; it != hi; ++it) {
    if (it->second == s) {
      index->erase(it);
      return;
    }
  }
}

void ScModel::delete_state(StateId s) {
  auto& slot = live_slot(s);
  detach(s);
  for (StateId child : slot.data.contains) states_[child.value].data.container.reset();
  slot.data.contains.clear();
  for (EdgeId e : slot.data.next) edges_[e.value].data.rnext.erase(s);
  for (EdgeId e : slot.data.rnext) edges_[e.value].data.next.erase(s);
  slot.data.next.clear();
  slot.data.rnext.clear();
  if (statechart_ == s) statechart_.reset();
  unindex(s);
  slot.live = false;
  --live_[static_cast<int>(slot.data.kind)];
}

void ScModel::delete_hyperedge(EdgeId e) {
  auto& slot = live_slot(e);
  for (StateId b : slot.data.next) states_[b.value].data.rnext.erase(e);
  for (StateId b : slot.data.rnext) states_[b.value].data.next.erase(e);
  slot.data.next.clear();
  slot.data.rnext.clear();
  auto [lo, hi] = edge_index_.equal_range(slot.data.name);
  for (auto it = lo; it != hi; ++it) {
    if (it->second == e) {
      edge_index_.erase(it);
      break;
    }
  }
  slot.live = false;
  --live_edges_;
}

void ScModel::rename_state(StateId s, std::string name) {
  auto& slot = live_slot(s);
  unindex(s);
  slot.data.name = std::move(name);
  if (auto* index = index_for(slot.data.kind)) index->emplace(slot.data.name, s);
}

void ScModel::set_statechart(StateId top_state) {
  if (live_slot(top_state).data.kind != StateKind::kAnd) {
    throw InternalFault("statechart top state must be an AND state");
  }
  statechart_ = top_state;
}

bool ScModel::is_live(StateId s) const {
  return s.value < states_.size() && states_[s.value].live;
}

bool ScModel::is_live(EdgeId e) const {
  return e.value < edges_.size() && edges_[e.value].live;
}

const State& ScModel::state(StateId s) const {
  return const_cast<ScModel*>(this)->live_slot(s).data;
}

const HyperEdge& ScModel::hyperedge(EdgeId e) const {
  return const_cast<ScModel*>(this)->live_slot(e).data;
}

std::optional<StateId> ScModel::find_basic(const std::string& name) const {
  return oldest<NameIndex, StateId>(basic_index_, name);
}

std::optional<StateId> ScModel::find_or(const std::string& name) const {
  return oldest<NameIndex, StateId>(or_index_, name);
}

std::optional<EdgeId> ScModel::find_hyperedge(const std::string& name) const {
  return oldest<decltype(edge_index_), EdgeId>(edge_index_, name);
}

std::vector<StateId> ScModel::states() const {
  std::vector<StateId> out;
  for (std::uint32_t i = 0; i < states_.size(); ++i) {
    if (states_[i].live) out.push_back(StateId{i});
  }
  return out;
}

std::vector<StateId> ScModel::states(StateKind kind) const {
  std::vector<StateId> out;
  for (std::uint32_t i = 0; i < states_.size(); ++i) {
    if (states_[i].live && states_[i].data.kind == kind) out.push_back(StateId{i});
  }
  return out;
}

std::vector<EdgeId> ScModel::hyperedges() const {
  std::vector<EdgeId> out;
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].live) out.push_back(EdgeId{i});
  }
  return out;
}

std::vector<StateId> ScModel::roots() const {
  std::vector<StateId> out;
  for (std::uint32_t i = 0; i < states_.size(); ++i) {
    if (states_[i].live && !states_[i].data.container) out.push_back(StateId{i});
  }
  return out;
}

}  // namespace pn2sc
