#ifndef PN2SC_TEXT_FORMAT_H_
#define PN2SC_TEXT_FORMAT_H_

// Line-oriented text formats for nets (.pn) and statecharts (.sc).
//
// .pn:
//   place <name>
//   transition <name>
//   arc <place> <transition>      place joins the transition's prep
//   arc <transition> <place>      place joins the transition's postp
//
// .sc:
//   statechart <top-state-name>
//   <basic|or|and> <name>         nesting by two-space indentation
//   edge <name> : <src,...> -> <tgt,...>
//
// Both: `#` starts a comment when it begins a token; blank lines are ignored.
// Identifiers are non-empty, whitespace-free, comma-free, do not start with
// `#`, and are not `:` or `->`.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pn2sc/petri_net.h"
#include "pn2sc/statechart.h"

namespace pn2sc {

enum class Severity { kError, kWarning };

struct ParseDiagnostic {
  int line = 0;
  int column = 0;
  std::string message;
  Severity severity = Severity::kError;
};

// `value` is set iff no error-severity diagnostic was produced.
template <class T>
struct ParseResult {
  std::optional<T> value;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
};

// "<source>:<line>:<column>: error: <message>"
std::string format_diagnostic(const ParseDiagnostic& d, std::string_view source);

bool is_valid_identifier(std::string_view name);

ParseResult<PetriNet> parse_petri_net(std::string_view text);
std::string serialize_petri_net(const PetriNet& pn);

ParseResult<ScModel> parse_statechart(std::string_view text);
std::string serialize_statechart(const ScModel& sc);

}  // namespace pn2sc

#endif  // PN2SC_TEXT_FORMAT_H_
