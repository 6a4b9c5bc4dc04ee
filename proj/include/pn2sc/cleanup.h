#ifndef PN2SC_CLEANUP_H_
#define PN2SC_CLEANUP_H_

#include <cstddef>
#include <string>
#include <vector>

#include "pn2sc/statechart.h"

namespace pn2sc {

inline constexpr const char* kTopStateName = "_TOPSTATE_";

struct CleanupReport {
  std::size_t deleted_ors = 0;
  std::vector<std::string> warnings;
};

// Deletes OR states with no children until none are left. Empty ANDs stay.
std::size_t delete_empty_ors(ScModel& sc);

// Wraps the single root OR in a new AND named _TOPSTATE_. With zero or
// several root ORs nothing changes and a warning is appended.
void create_topstate(ScModel& sc, std::vector<std::string>& warnings);

// Creates the Statechart on the single root AND, unless one already points
// there. With zero or several root ANDs nothing changes and a warning is
// appended.
void create_statechart_instance(ScModel& sc, std::vector<std::string>& warnings);

// The three steps above, in order. Never touches the Petri net.
CleanupReport cleanup(ScModel& sc);

}  // namespace pn2sc

#endif  // PN2SC_CLEANUP_H_
