#ifndef PN2SC_PETRI_NET_H_
#define PN2SC_PETRI_NET_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pn2sc/ids.h"

namespace pn2sc {

struct Place {
  std::string name;
  std::set<TransitionId> pret;   // transitions producing into this place
  std::set<TransitionId> postt;  // transitions consuming from this place
};

struct Transition {
  std::string name;
  std::set<PlaceId> prep;   // pre-places
  std::set<PlaceId> postp;  // post-places
};

// Structural Petri net (no tokens). Elements keep their Id for life; deleted
// slots stay allocated but are never returned by the live views. The two
// arc relations are stored on both ends and kept mutually inverse by every
// mutator.
//
// Duplicate names are representable (the parser and the precondition check
// reject them); lookups then return the oldest live element of that name.
class PetriNet {
 public:
  PlaceId add_place(std::string name);
  TransitionId add_transition(std::string name);

  // p joins t.prep (and t joins p.postt).
  void add_arc(PlaceId p, TransitionId t);
  // p joins t.postp (and t joins p.pret).
  void add_arc(TransitionId t, PlaceId p);
  void remove_arc(PlaceId p, TransitionId t);
  void remove_arc(TransitionId t, PlaceId p);

  // Cascading delete. Deleting a dead element throws InternalFault.
  void delete_place(PlaceId p);
  void delete_transition(TransitionId t);

  void rename_place(PlaceId p, std::string name);

  bool is_live(PlaceId p) const;
  bool is_live(TransitionId t) const;

  const Place& place(PlaceId p) const;
  const Transition& transition(TransitionId t) const;

  std::optional<PlaceId> find_place(const std::string& name) const;
  std::optional<TransitionId> find_transition(const std::string& name) const;
  // True if any live place or transition carries `name`.
  bool name_in_use(const std::string& name) const;

  // Live elements in creation order.
  std::vector<PlaceId> places() const;
  std::vector<TransitionId> transitions() const;

  std::size_t place_count() const { return live_places_; }
  std::size_t transition_count() const { return live_transitions_; }
  // Number of ids ever issued; creation index of an element is its Id value.
  std::size_t place_capacity() const { return places_.size(); }
  std::size_t transition_capacity() const { return transitions_.size(); }

 private:
  struct PlaceSlot {
    Place data;
    bool live = true;
  };
  struct TransitionSlot {
    Transition data;
    bool live = true;
  };

  PlaceSlot& live_slot(PlaceId p);
  TransitionSlot& live_slot(TransitionId t);
  void unindex_place(PlaceId p);

  std::vector<PlaceSlot> places_;
  std::vector<TransitionSlot> transitions_;
  std::unordered_multimap<std::string, PlaceId> place_index_;
  std::unordered_multimap<std::string, TransitionId> transition_index_;
  std::size_t live_places_ = 0;
  std::size_t live_transitions_ = 0;
};

}  // namespace pn2sc

#endif  // PN2SC_PETRI_NET_H_
