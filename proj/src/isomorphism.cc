#include "pn2sc/isomorphism.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pn2sc {

namespace {

enum Label : int { kContains = 0, kNext = 1 };

// Name-free view of a statechart: states first, then hyperedges.
struct Graph {
  std::vector<int> initial;                         // kind (+4 for the top state)
  std::vector<std::vector<std::pair<int, int>>> out;  // (label, node)
  std::vector<std::vector<std::pair<int, int>>> in;
  std::set<std::tuple<int, int, int>> edges;        // (label, from, to)
};

Graph build_graph(const ScModel& sc) {
  Graph g;
  std::unordered_map<StateId, int> state_node;
  std::unordered_map<EdgeId, int> edge_node;
  auto states = sc.states();
  auto hyperedges = sc.hyperedges();
  for (StateId s : states) {
    state_node[s] = static_cast<int>(g.initial.size());
    int colour = static_cast<int>(sc.state(s).kind);
    if (sc.statechart() == s) colour += 4;
    g.initial.push_back(colour);
  }
  for (EdgeId e : hyperedges) {
    edge_node[e] = static_cast<int>(g.initial.size());
    g.initial.push_back(3);
  }
  g.out.resize(g.initial.size());
  g.in.resize(g.initial.size());
  auto add = [&g](int label, int from, int to) {
    g.out[from].push_back({label, to});
    g.in[to].push_back({label, from});
    g.edges.insert({label, from, to});
  };
  for (StateId s : states) {
    const State& st = sc.state(s);
    for (StateId c : st.contains) add(kContains, state_node[s], state_node[c]);
    for (EdgeId e : st.next) add(kNext, state_node[s], edge_node[e]);
  }
  for (EdgeId e : hyperedges) {
    for (StateId b : sc.hyperedge(e).next) add(kNext, edge_node[e], state_node[b]);
  }
  return g;
}

using Colouring = std::vector<int>;

std::vector<int> histogram(const Colouring& c, int colours) {
  std::vector<int> h(colours, 0);
  for (int x : c) ++h[x];
  return h;
}

int count_colours(const Colouring& a, const Colouring& b) {
  int m = 0;
  for (int x : a) m = std::max(m, x + 1);
  for (int x : b) m = std::max(m, x + 1);
  return m;
}

// Refines both colourings jointly until stable. Returns false as soon as the
// colour histograms diverge.
bool refine(const Graph& ga, const Graph& gb, Colouring& ca, Colouring& cb) {
  int colours = count_colours(ca, cb);
  int classes = static_cast<int>(std::set<int>(ca.begin(), ca.end()).size());
  while (true) {
    if (histogram(ca, colours) != histogram(cb, colours)) return false;
    std::map<std::vector<int>, int> table;
    auto signature = [](const Graph& g, const Colouring& c, int v) {
      std::vector<int> sig{c[v]};
      std::vector<std::pair<int, int>> outs, ins;
      for (auto [l, u] : g.out[v]) outs.push_back({l, c[u]});
      for (auto [l, u] : g.in[v]) ins.push_back({l, c[u]});
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      sig.push_back(static_cast<int>(outs.size()));
      for (auto [l, x] : outs) sig.insert(sig.end(), {l, x});
      sig.push_back(-1);
      for (auto [l, x] : ins) sig.insert(sig.end(), {l, x});
      return sig;
    };
    std::vector<std::vector<int>> sa(ca.size()), sb(cb.size());
    for (std::size_t v = 0; v < ca.size(); ++v) {
      sa[v] = signature(ga, ca, static_cast<int>(v));
      table.emplace(sa[v], 0);
    }
    for (std::size_t v = 0; v < cb.size(); ++v) {
      sb[v] = signature(gb, cb, static_cast<int>(v));
      table.emplace(sb[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : table) id = next++;
    for (std::size_t v = 0; v < ca.size(); ++v) ca[v] = table[sa[v]];
    for (std::size_t v = 0; v < cb.size(); ++v) cb[v] = table[sb[v]];
    colours = next;
    if (next == classes) {
      return histogram(ca, colours) == histogram(cb, colours);
    }
    classes = next;
  }
}

bool verify(const Graph& ga, const Graph& gb, const Colouring& ca,
            const Colouring& cb) {
  std::vector<int> by_colour(ca.size());
  for (std::size_t v = 0; v < cb.size(); ++v) by_colour[cb[v]] = static_cast<int>(v);
  std::vector<int> map(ca.size());
  for (std::size_t v = 0; v < ca.size(); ++v) map[v] = by_colour[ca[v]];
  if (ga.edges.size() != gb.edges.size()) return false;
  for (const auto& [l, u, v] : ga.edges) {
    if (!gb.edges.contains({l, map[u], map[v]})) return false;
  }
  return true;
}

bool search(const Graph& ga, const Graph& gb, Colouring ca, Colouring cb) {
  if (!refine(ga, gb, ca, cb)) return false;
  int colours = count_colours(ca, cb);
  auto sizes = histogram(ca, colours);
  int target = -1;
  for (int c = 0; c < colours; ++c) {
    if (sizes[c] > 1 && (target < 0 || sizes[c] < sizes[target])) target = c;
  }
  if (target < 0) return verify(ga, gb, ca, cb);

  int pick = static_cast<int>(std::find(ca.begin(), ca.end(), target) - ca.begin());
  for (std::size_t w = 0; w < cb.size(); ++w) {
    if (cb[w] != target) continue;
    Colouring na = ca, nb = cb;
    na[pick] = colours;
    nb[w] = colours;
    if (search(ga, gb, std::move(na), std::move(nb))) return true;
  }
  return false;
}

}  // namespace

bool isomorphic_statecharts(const ScModel& a, const ScModel& b) {
  if (a.count(StateKind::kBasic) != b.count(StateKind::kBasic) ||
      a.count(StateKind::kOr) != b.count(StateKind::kOr) ||
      a.count(StateKind::kAnd) != b.count(StateKind::kAnd) ||
      a.hyperedge_count() != b.hyperedge_count() ||
      a.statechart().has_value() != b.statechart().has_value()) {
    return false;
  }
  Graph ga = build_graph(a);
  Graph gb = build_graph(b);
  if (ga.edges.size() != gb.edges.size()) return false;
  if (ga.initial.empty()) return true;
  return search(ga, gb, ga.initial, gb.initial);
}

namespace {

using NetForm = std::pair<std::vector<std::string>,
                          std::vector<std::tuple<std::string, std::vector<std::string>,
                                                 std::vector<std::string>>>>;

NetForm canonical(const PetriNet& pn) {
  NetForm form;
  for (PlaceId p : pn.places()) form.first.push_back(pn.place(p).name);
  std::sort(form.first.begin(), form.first.end());
  auto names = [&pn](const std::set<PlaceId>& ps) {
    std::vector<std::string> out;
    for (PlaceId p : ps) out.push_back(pn.place(p).name);
    std::sort(out.begin(), out.end());
    return out;
  };
  for (TransitionId t : pn.transitions()) {
    const Transition& tr = pn.transition(t);
    form.second.emplace_back(tr.name, names(tr.prep), names(tr.postp));
  }
  std::sort(form.second.begin(), form.second.end());
  return form;
}

}  // namespace

bool isomorphic_nets(const PetriNet& a, const PetriNet& b) {
  if (a.place_count() != b.place_count() ||
      a.transition_count() != b.transition_count()) {
    return false;
  }
  return canonical(a) == canonical(b);
}

}  // namespace pn2sc
