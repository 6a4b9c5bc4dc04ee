#include "pn2sc/text_format.h"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <utility>

namespace pn2sc {

namespace {

struct Token {
  std::string_view text;
  int column;
};

struct Line {
  int number;
  int indent;  // leading spaces
  bool tab_in_indent;
  std::vector<Token> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;

    Line line{number, 0, false, {}};
    std::size_t i = 0;
    while (i < raw.size() && is_space(raw[i])) {
      if (raw[i] == '\t') line.tab_in_indent = true;
      ++i;
    }
    line.indent = static_cast<int>(i);
    while (i < raw.size()) {
      while (i < raw.size() && is_space(raw[i])) ++i;
      if (i >= raw.size() || raw[i] == '#') break;
      std::size_t start = i;
      while (i < raw.size() && !is_space(raw[i])) ++i;
      line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

class Diagnostics {
 public:
  void error(int line, int column, std::string message) {
    items_.push_back({line, column, std::move(message), Severity::kError});
    ++errors_;
  }
  void warning(int line, int column, std::string message) {
    items_.push_back({line, column, std::move(message), Severity::kWarning});
  }
  bool has_errors() const { return errors_ > 0; }
  std::vector<ParseDiagnostic> take() { return std::move(items_); }

 private:
  std::vector<ParseDiagnostic> items_;
  int errors_ = 0;
};

bool check_identifier(const Token& tok, int line, Diagnostics& diags) {
  if (is_valid_identifier(tok.text)) return true;
  diags.error(line, tok.column, "invalid identifier " + std::string(tok.text));
  return false;
}

}  // namespace

std::string format_diagnostic(const ParseDiagnostic& d, std::string_view source) {
  std::ostringstream out;
  out << source << ':' << d.line << ':' << d.column << ": "
      << (d.severity == Severity::kError ? "error" : "warning") << ": "
      << d.message;
  return out.str();
}

bool is_valid_identifier(std::string_view name) {
  if (name.empty() || name.front() == '#' || name == ":" || name == "->") {
    return false;
  }
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r' ||
           c == '\v' || c == '\f';
  });
}

// ---------------------------------------------------------------------------
// Petri nets

ParseResult<PetriNet> parse_petri_net(std::string_view text) {
  Diagnostics diags;
  PetriNet pn;
  std::unordered_map<std::string, PlaceId> places;
  std::unordered_map<std::string, TransitionId> transitions;
  struct PendingArc {
    int line;
    Token from, to;
  };
  std::vector<PendingArc> arcs;

  for (const Line& line : split_lines(text)) {
    const Token& head = line.tokens.front();
    if (head.text == "place" || head.text == "transition") {
      if (line.tokens.size() != 2) {
        diags.error(line.number, head.column,
                    "expected: " + std::string(head.text) + " <name>");
        continue;
      }
      const Token& name_tok = line.tokens[1];
      if (!check_identifier(name_tok, line.number, diags)) continue;
      std::string name(name_tok.text);
      if (places.contains(name) || transitions.contains(name)) {
        diags.error(line.number, name_tok.column, "duplicate name " + name);
        continue;
      }
      if (head.text == "place") {
        places.emplace(name, pn.add_place(name));
      } else {
        transitions.emplace(name, pn.add_transition(name));
      }
    } else if (head.text == "arc") {
      if (line.tokens.size() != 3) {
        diags.error(line.number, head.column, "expected: arc <from> <to>");
        continue;
      }
      arcs.push_back({line.number, line.tokens[1], line.tokens[2]});
    } else {
      diags.error(line.number, head.column,
                  "unknown directive " + std::string(head.text));
    }
  }

  std::map<std::tuple<bool, std::uint32_t, std::uint32_t>, int> seen_arcs;
  for (const PendingArc& arc : arcs) {
    std::string from(arc.from.text), to(arc.to.text);
    auto fp = places.find(from);
    auto ft = transitions.find(from);
    auto tp = places.find(to);
    auto tt = transitions.find(to);
    bool known = true;
    if (fp == places.end() && ft == transitions.end()) {
      diags.error(arc.line, arc.from.column, "unknown element " + from);
      known = false;
    }
    if (tp == places.end() && tt == transitions.end()) {
      diags.error(arc.line, arc.to.column, "unknown element " + to);
      known = false;
    }
    if (!known) continue;
    if (fp != places.end() && tp != places.end()) {
      diags.error(arc.line, arc.from.column, "arc connects two places");
      continue;
    }
    if (ft != transitions.end() && tt != transitions.end()) {
      diags.error(arc.line, arc.from.column, "arc connects two transitions");
      continue;
    }
    bool into_transition = fp != places.end();
    auto key = into_transition
                   ? std::make_tuple(true, fp->second.value, tt->second.value)
                   : std::make_tuple(false, ft->second.value, tp->second.value);
    if (auto [it, fresh] = seen_arcs.emplace(key, arc.line); !fresh) {
      diags.warning(arc.line, arc.from.column,
                    "duplicate arc (first at line " + std::to_string(it->second) + ")");
      continue;
    }
    if (into_transition) {
      pn.add_arc(fp->second, tt->second);
    } else {
      pn.add_arc(ft->second, tp->second);
    }
  }

  ParseResult<PetriNet> result;
  if (!diags.has_errors()) result.value = std::move(pn);
  result.diagnostics = diags.take();
  return result;
}

std::string serialize_petri_net(const PetriNet& pn) {
  std::vector<std::string> places, transitions;
  std::vector<std::pair<std::string, std::string>> arcs;
  for (PlaceId p : pn.places()) places.push_back(pn.place(p).name);
  for (TransitionId t : pn.transitions()) {
    const Transition& tr = pn.transition(t);
    transitions.push_back(tr.name);
    for (PlaceId p : tr.prep) arcs.emplace_back(pn.place(p).name, tr.name);
    for (PlaceId p : tr.postp) arcs.emplace_back(tr.name, pn.place(p).name);
  }
  std::sort(places.begin(), places.end());
  std::sort(transitions.begin(), transitions.end());
  std::sort(arcs.begin(), arcs.end());

  std::string out;
  for (const auto& name : places) out += "place " + name + "\n";
  for (const auto& name : transitions) out += "transition " + name + "\n";
  for (const auto& [from, to] : arcs) out += "arc " + from + " " + to + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Statecharts

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finaliser over the running state.
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

// Orders siblings by structural hash, then name, then full rendering.
class TreeWriter {
 public:
  explicit TreeWriter(const ScModel& sc) : sc_(sc) {}

  std::uint64_t hash(StateId s) {
    if (auto it = hashes_.find(s); it != hashes_.end()) return it->second;
    const State& st = sc_.state(s);
    std::vector<std::uint64_t> children;
    children.reserve(st.contains.size());
    for (StateId c : st.contains) children.push_back(hash(c));
    std::sort(children.begin(), children.end());
    std::uint64_t h = mix(0x5eed, static_cast<std::uint64_t>(st.kind));
    for (std::uint64_t c : children) h = mix(h, c);
    h = mix(h, children.size());
    hashes_.emplace(s, h);
    return h;
  }

  std::vector<StateId> ordered(std::vector<StateId> states) {
    std::sort(states.begin(), states.end(), [this](StateId a, StateId b) {
      std::uint64_t ha = hash(a), hb = hash(b);
      if (ha != hb) return ha < hb;
      const std::string& na = sc_.state(a).name;
      const std::string& nb = sc_.state(b).name;
      if (na != nb) return na < nb;
      return rendered(a) < rendered(b);
    });
    return states;
  }

  void write(StateId s, int depth, std::string& out) {
    const State& st = sc_.state(s);
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    out += kind_name(st.kind);
    out += ' ';
    out += st.name;
    out += '\n';
    for (StateId c : ordered(st.contains)) write(c, depth + 1, out);
  }

 private:
  const std::string& rendered(StateId s) {
    auto it = rendered_.find(s);
    if (it == rendered_.end()) {
      std::string text;
      write(s, 0, text);
      it = rendered_.emplace(s, std::move(text)).first;
    }
    return it->second;
  }

  const ScModel& sc_;
  std::unordered_map<StateId, std::uint64_t> hashes_;
  std::unordered_map<StateId, std::string> rendered_;
};

std::string join_names(const ScModel& sc, const std::set<StateId>& states) {
  std::vector<std::string> names;
  for (StateId s : states) names.push_back(sc.state(s).name);
  std::sort(names.begin(), names.end());
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out;
}

}  // namespace

std::string serialize_statechart(const ScModel& sc) {
  std::string out;
  if (auto top = sc.statechart()) {
    out += "statechart " + sc.state(*top).name + "\n";
  }
  TreeWriter writer(sc);
  for (StateId root : writer.ordered(sc.roots())) writer.write(root, 0, out);

  std::vector<std::pair<std::string, std::string>> edges;
  for (EdgeId e : sc.hyperedges()) {
    const HyperEdge& he = sc.hyperedge(e);
    std::string line = "edge " + he.name + " :";
    std::string sources = join_names(sc, he.rnext);
    std::string targets = join_names(sc, he.next);
    if (!sources.empty()) line += " " + sources;
    line += " ->";
    if (!targets.empty()) line += " " + targets;
    edges.emplace_back(he.name, std::move(line));
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [name, line] : edges) out += line + "\n";
  return out;
}

namespace {

// Splits "a,b,c"; empty segments are reported as errors.
std::vector<std::string> split_list(const Token& tok, int line, Diagnostics& diags) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  std::string_view text = tok.text;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view part = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    if (!is_valid_identifier(part)) {
      diags.error(line, tok.column + static_cast<int>(pos),
                  "invalid identifier in list: '" + std::string(part) + "'");
    } else {
      out.emplace_back(part);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

ParseResult<ScModel> parse_statechart(std::string_view text) {
  Diagnostics diags;
  ScModel sc;
  struct PendingEdge {
    int line;
    EdgeId edge;
    std::vector<std::pair<std::string, int>> sources, targets;
  };
  std::vector<PendingEdge> edges;
  std::optional<std::pair<Token, int>> header;
  std::vector<StateId> open;  // ancestors of the next state line, by depth

  for (const Line& line : split_lines(text)) {
    const Token& head = line.tokens.front();
    if (line.tab_in_indent) {
      diags.error(line.number, 1, "tab in indentation");
      continue;
    }
    if (head.text == "statechart") {
      if (line.indent != 0 || line.tokens.size() != 2) {
        diags.error(line.number, head.column,
                    "expected unindented: statechart <name>");
      } else if (header) {
        diags.error(line.number, head.column,
                    "second statechart header (first at line " +
                        std::to_string(header->second) + ")");
      } else {
        header.emplace(line.tokens[1], line.number);
      }
      continue;
    }
    if (head.text == "edge") {
      // edge <name> : [srcs] -> [tgts]
      const auto& toks = line.tokens;
      if (line.indent != 0 || toks.size() < 4 || toks[2].text != ":") {
        diags.error(line.number, head.column,
                    "expected unindented: edge <name> : <src,...> -> <tgt,...>");
        continue;
      }
      std::size_t arrow = 3;
      while (arrow < toks.size() && toks[arrow].text != "->") ++arrow;
      if (arrow == toks.size() || arrow > 4 || toks.size() - arrow > 2) {
        diags.error(line.number, head.column,
                    "expected unindented: edge <name> : <src,...> -> <tgt,...>");
        continue;
      }
      if (!check_identifier(toks[1], line.number, diags)) continue;
      std::string name(toks[1].text);
      if (sc.find_hyperedge(name)) {
        diags.error(line.number, toks[1].column, "duplicate hyperedge name " + name);
        continue;
      }
      PendingEdge pending{line.number, sc.add_hyperedge(name), {}, {}};
      if (arrow == 4) {
        for (auto& n : split_list(toks[3], line.number, diags)) {
          pending.sources.emplace_back(std::move(n), toks[3].column);
        }
      }
      if (arrow + 1 < toks.size()) {
        for (auto& n : split_list(toks[arrow + 1], line.number, diags)) {
          pending.targets.emplace_back(std::move(n), toks[arrow + 1].column);
        }
      }
      edges.push_back(std::move(pending));
      continue;
    }

    StateKind kind;
    if (head.text == "basic") {
      kind = StateKind::kBasic;
    } else if (head.text == "or") {
      kind = StateKind::kOr;
    } else if (head.text == "and") {
      kind = StateKind::kAnd;
    } else {
      diags.error(line.number, head.column,
                  "unknown directive " + std::string(head.text));
      continue;
    }
    if (line.tokens.size() != 2) {
      diags.error(line.number, head.column,
                  "expected: " + std::string(head.text) + " <name>");
      continue;
    }
    if (line.indent % 2 != 0) {
      diags.error(line.number, 1, "indentation must be a multiple of two spaces");
      continue;
    }
    std::size_t depth = static_cast<std::size_t>(line.indent / 2);
    if (depth > open.size()) {
      diags.error(line.number, 1, "indentation skips a level");
      continue;
    }
    const Token& name_tok = line.tokens[1];
    if (!check_identifier(name_tok, line.number, diags)) continue;
    std::string name(name_tok.text);
    open.resize(depth);

    std::optional<StateId> parent;
    if (depth > 0) {
      parent = open.back();
      StateKind pk = sc.state(*parent).kind;
      if (pk == StateKind::kAnd && kind != StateKind::kOr) {
        diags.error(line.number, head.column, "AND may contain only OR");
        continue;
      }
      if (pk == StateKind::kOr && kind == StateKind::kOr) {
        diags.error(line.number, head.column, "OR may contain only Basic or AND");
        continue;
      }
      if (pk == StateKind::kBasic) {
        diags.error(line.number, head.column, "Basic may not contain states");
        continue;
      }
    }
    if (kind == StateKind::kBasic && sc.find_basic(name)) {
      diags.error(line.number, name_tok.column, "duplicate basic name " + name);
      continue;
    }
    if (kind == StateKind::kOr && sc.find_or(name)) {
      diags.error(line.number, name_tok.column, "duplicate or name " + name);
      continue;
    }
    StateId s = kind == StateKind::kBasic ? sc.add_basic(name)
                : kind == StateKind::kOr  ? sc.add_or(name)
                                          : sc.add_and(name);
    if (parent) sc.move_into(s, *parent);
    open.push_back(s);
  }

  for (const PendingEdge& pending : edges) {
    for (const auto& [name, column] : pending.sources) {
      if (auto b = sc.find_basic(name)) {
        sc.link(*b, pending.edge);
      } else {
        diags.error(pending.line, column, "unknown basic state " + name);
      }
    }
    for (const auto& [name, column] : pending.targets) {
      if (auto b = sc.find_basic(name)) {
        sc.link(pending.edge, *b);
      } else {
        diags.error(pending.line, column, "unknown basic state " + name);
      }
    }
  }

  if (header) {
    const auto& [tok, line] = *header;
    std::vector<StateId> candidates;
    for (StateId r : sc.roots()) {
      const State& st = sc.state(r);
      if (st.kind == StateKind::kAnd && st.name == tok.text) candidates.push_back(r);
    }
    if (candidates.size() == 1) {
      sc.set_statechart(candidates.front());
    } else if (candidates.empty()) {
      diags.error(line, tok.column,
                  "statechart top state " + std::string(tok.text) +
                      " is not a root and state");
    } else {
      diags.error(line, tok.column,
                  "statechart top state " + std::string(tok.text) + " is ambiguous");
    }
  }

  ParseResult<ScModel> result;
  if (!diags.has_errors()) result.value = std::move(sc);
  result.diagnostics = diags.take();
  return result;
}

}  // namespace pn2sc
