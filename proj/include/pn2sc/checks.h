#ifndef PN2SC_CHECKS_H_
#define PN2SC_CHECKS_H_

#include <string>
#include <vector>

#include "pn2sc/petri_net.h"
#include "pn2sc/statechart.h"

namespace pn2sc {

struct Violation {
  std::string invariant;  // e.g. "or-name-unique", "inv"
  std::string element;    // offending element name
  std::string message;
};

struct ModelReport {
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
  void add(std::string invariant, std::string element, std::string message);
  void merge(const ModelReport& other);
  std::string to_string() const;
};

// One violation per duplicated name within each of: places and transitions
// jointly, Basics, ORs, HyperEdges. AND names are not checked.
ModelReport check_name_uniqueness(const PetriNet& pn, const ScModel& sc);

// Every live place has exactly one same-named live OR.
ModelReport check_inv(const PetriNet& pn, const ScModel& sc);

// prep/postt and postp/pret are mutually inverse and reference live elements.
ModelReport check_net_links(const PetriNet& pn);

// next/rnext and contains/rcontains are mutually inverse; containment is an
// acyclic forest obeying the kind-nesting rules; a Statechart's top state is
// a live root AND.
ModelReport check_sc_structure(const ScModel& sc);

// All of the above.
ModelReport check_all(const PetriNet& pn, const ScModel& sc);

}  // namespace pn2sc

#endif  // PN2SC_CHECKS_H_
