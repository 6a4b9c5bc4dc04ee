#include "pn2sc/petri_net.h"

#include <utility>

namespace pn2sc {

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

}  // namespace

PlaceId PetriNet::add_place(std::string name) {
  PlaceId id{static_cast<std::uint32_t>(places_.size())};
  place_index_.emplace(name, id);
  places_.push_back({Place{std::move(name), {}, {}}, true});
  ++live_places_;
  return id;
}

TransitionId PetriNet::add_transition(std::string name) {
  TransitionId id{static_cast<std::uint32_t>(transitions_.size())};
  transition_index_.emplace(name, id);
  transitions_.push_back({Transition{std::move(name), {}, {}}, true});
  ++live_transitions_;
  return id;
}

PetriNet::PlaceSlot& PetriNet::live_slot(PlaceId p) {
  if (p.value >= places_.size() || !places_[p.value].live) {
    throw InternalFault("place " + std::to_string(p.value) + " is not live");
  }
  return places_[p.value];
}

PetriNet::TransitionSlot& PetriNet::live_slot(TransitionId t) {
  if (t.value >= transitions_.size() || !transitions_[t.value].live) {
    throw InternalFault("transition " + std::to_string(t.value) +
                        " is not live");
  }
  return transitions_[t.value];
}

void PetriNet::add_arc(PlaceId p, TransitionId t) {
  auto& ps = live_slot(p);
  auto& ts = live_slot(t);
  ts.data.prep.insert(p);
  ps.data.postt.insert(t);
}

void PetriNet::add_arc(TransitionId t, PlaceId p) {
  auto& ps = live_slot(p);
  auto& ts = live_slot(t);
  ts.data.postp.insert(p);
  ps.data.pret.insert(t);
}

void PetriNet::remove_arc(PlaceId p, TransitionId t) {
  live_slot(t).data.prep.erase(p);
  live_slot(p).data.postt.erase(t);
}

void PetriNet::remove_arc(TransitionId t, PlaceId p) {
  live_slot(t).data.postp.erase(p);
  live_slot(p).data.pret.erase(t);
}

void PetriNet::unindex_place(PlaceId p) {
  auto [lo, hi] = place_index_.equal_range(places_[p.value].data.name);
  for (auto it = lo; it != hi; ++it) {
    if (it->second == p) {
      place_index_.erase(it);
      return;
    }
  }
}

void PetriNet::delete_place(PlaceId p) {
  auto& slot = live_slot(p);
  for (TransitionId t : slot.data.pret) transitions_[t.value].data.postp.erase(p);
  for (TransitionId t : slot.data.postt) transitions_[t.value].data.prep.erase(p);
  slot.data.pret.clear();
  slot.data.postt.clear();
  unindex_place(p);
  slot.live = false;
  --live_places_;
}

void PetriNet::delete_transition(TransitionId t) {
  auto& slot = live_slot(t);
  for (PlaceId p : slot.data.prep) places_[p.value].data.postt.erase(t);
  for (PlaceId p : slot.data.postp) places_[p.value].data.pret.erase(t);
  slot.data.prep.clear();
  slot.data.postp.clear();
  auto [lo, hi] = transition_index_.equal_range(slot.data.name);
  for (auto it = lo; it != hi; ++it) {
    if (it->second == t) {
      transition_index_.erase(it);
      break;
    }
  }
  slot.live = false;
  --live_transitions_;
}

void PetriNet::rename_place(PlaceId p, std::string name) {
  auto& slot = live_slot(p);
  unindex_place(p);
  slot.data.name = std::move(name);
  place_index_.emplace(slot.data.name, p);
}

bool PetriNet::is_live(PlaceId p) const {
  return p.value < places_.size() && places_[p.value].live;
}

bool PetriNet::is_live(TransitionId t) const {
  return t.value < transitions_.size() && transitions_[t.value].live;
}

const Place& PetriNet::place(PlaceId p) const {
  return const_cast<PetriNet*>(this)->live_slot(p).data;
}

const Transition& PetriNet::transition(TransitionId t) const {
  return const_cast<PetriNet*>(this)->live_slot(t).data;
}

std::optional<PlaceId> PetriNet::find_place(const std::string& name) const {
  return oldest<decltype(place_index_), PlaceId>(place_index_, name);
}

std::optional<TransitionId> PetriNet::find_transition(
    const std::string& name) const {
  return oldest<decltype(transition_index_), TransitionId>(transition_index_,
                                                           name);
}

bool PetriNet::name_in_use(const std::string& name) const {
  return place_index_.count(name) > 0 || transition_index_.count(name) > 0;
}

std::vector<PlaceId> PetriNet::places() const {
  std::vector<PlaceId> out;
  out.reserve(live_places_);
  for (std::uint32_t i = 0; i < places_.size(); ++i) {
    if (places_[i].live) out.push_back(PlaceId{i});
  }
  return out;
}

std::vector<TransitionId> PetriNet::transitions() const {
  std::vector<TransitionId> out;
  out.reserve(live_transitions_);
  for (std::uint32_t i = 0; i < transitions_.size(); ++i) {
    if (transitions_[i].live) out.push_back(TransitionId{i});
  }
  return out;
}

}  // namespace pn2sc
