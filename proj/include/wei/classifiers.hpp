#pragma once

// Unmixedness and Cohen-Macaulay verdicts for the weighted graph families with
// a known characterization: cycles, complete graphs, suspensions, trees and
// paths. Anything else falls back to brute-force cover enumeration for
// unmixedness and reports the Cohen-Macaulay property as unknown.
//
// Cohen-Macaulay answers assume field coefficients. No homological algebra is
// done here; the verdicts come from the weight conditions alone.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wei/weighted_graph.hpp"

namespace wei {

enum class Family { complete, cycle, path, tree, suspension, general };
enum class CohenMacaulay { yes, no, unknown };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::complete: return "complete";
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::tree: return "tree";
    case Family::suspension: return "suspension";
    case Family::general: return "general";
  }
  return "general";
}

inline std::string to_string(CohenMacaulay cm) {
  switch (cm) {
    case CohenMacaulay::yes: return "yes";
    case CohenMacaulay::no: return "no";
    case CohenMacaulay::unknown: return "unknown";
  }
  return "unknown";
}

class UnsupportedFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// H as G plus one whisker per base vertex.
struct SuspensionDecomposition {
  VertexSet base_vertices;
  /// (base vertex, its whisker), sorted by base vertex.
  std::vector<std::pair<VertexIndex, VertexIndex>> whiskers;

  std::optional<VertexIndex> whisker_of(VertexIndex base) const {
    for (auto [b, w] : whiskers)
      if (b == base) return w;
    return std::nullopt;
  }

  friend bool operator==(const SuspensionDecomposition&, const SuspensionDecomposition&) = default;
  friend bool operator<(const SuspensionDecomposition& a, const SuspensionDecomposition& b) {
    return a.whiskers < b.whiskers;
  }
};

struct Certificate {
  std::string description;
  std::vector<WeightedCover> witnesses;
  std::optional<SuspensionDecomposition> suspension;
  /// Cycle edge weights rearranged to satisfy the 5-cycle pattern.
  std::vector<Weight> arrangement;
};

struct Verdict {
  Family family = Family::general;
  bool unmixed = false;
  CohenMacaulay cohen_macaulay = CohenMacaulay::unknown;
  Certificate certificate;
  std::string rationale;
};

// ---------------------------------------------------------------------------
// Family recognition

namespace detail {

inline bool is_connected(const WeightedGraph& g) {
  const auto n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<VertexIndex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto k : g.incident(v)) {
      auto u = g.edges()[k].other(v);
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n;
}

/// Walks from `start` along unvisited neighbors, collecting edge weights in order.
inline std::vector<Weight> walk_weights(const WeightedGraph& g, VertexIndex start, bool close_cycle) {
  std::vector<Weight> ws;
  std::vector<bool> seen(g.vertex_count(), false);
  VertexIndex v = start;
  seen[v] = true;
  for (;;) {
    std::optional<std::size_t> next;
    for (auto k : g.incident(v)) {
      if (!seen[g.edges()[k].other(v)]) {
        next = k;
        break;
      }
    }
    if (!next) break;
    const auto& e = g.edges()[*next];
    ws.push_back(e.w);
    v = e.other(v);
    seen[v] = true;
  }
  if (close_cycle) ws.push_back(*g.weight(v, start));
  return ws;
}

}  // namespace detail

inline bool is_complete_graph(const WeightedGraph& g) {
  const auto n = g.vertex_count();
  return n >= 2 && g.edge_count() == n * (n - 1) / 2;
}

inline bool is_cycle_graph(const WeightedGraph& g) {
  const auto n = g.vertex_count();
  if (n < 3 || g.edge_count() != n) return false;
  for (VertexIndex v = 0; v < n; ++v)
    if (g.degree(v) != 2) return false;
  return detail::is_connected(g);
}

inline bool is_tree_graph(const WeightedGraph& g) {
  return g.edge_count() + 1 == g.vertex_count() && detail::is_connected(g);
}

inline bool is_path_graph(const WeightedGraph& g) {
  if (g.edge_count() == 0 || !is_tree_graph(g)) return false;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

/// Edge weights read around the cycle starting at v1.
inline std::vector<Weight> cycle_weights(const WeightedGraph& g) {
  if (!is_cycle_graph(g)) throw UnsupportedFamily("graph is not a cycle");
  return detail::walk_weights(g, 0, true);
}

/// Edge weights read along the path, starting from the lower-indexed end.
inline std::vector<Weight> path_weights(const WeightedGraph& g) {
  if (!is_path_graph(g)) throw UnsupportedFamily("graph is not a path");
  VertexIndex end = 0;
  while (g.degree(end) != 1) ++end;
  return detail::walk_weights(g, end, false);
}

/// Every way of reading the graph as a suspension. A leaf hanging off a
/// non-leaf must be a whisker, and every non-leaf must own exactly one such
/// leaf; each isolated edge can be read in either direction.
inline std::vector<SuspensionDecomposition> recognize_suspensions(const WeightedGraph& g) {
  const auto n = g.vertex_count();
  if (n % 2 != 0) return {};

  std::vector<std::pair<VertexIndex, VertexIndex>> fixed;
  std::vector<std::pair<VertexIndex, VertexIndex>> isolated_edges;
  for (VertexIndex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) return {};
    if (g.degree(v) == 1) {
      auto u = g.edges()[g.incident(v).front()].other(v);
      if (g.degree(u) == 1) {
        if (v < u) isolated_edges.emplace_back(v, u);
      } else {
        fixed.emplace_back(u, v);
      }
      continue;
    }
    std::size_t leaves = 0;
    for (auto k : g.incident(v))
      if (g.degree(g.edges()[k].other(v)) == 1) ++leaves;
    if (leaves != 1) return {};
  }

  std::vector<SuspensionDecomposition> out;
  const std::size_t choices = std::size_t{1} << isolated_edges.size();
  for (std::size_t mask = 0; mask < choices; ++mask) {
    auto pairs = fixed;
    for (std::size_t k = 0; k < isolated_edges.size(); ++k) {
      auto [a, b] = isolated_edges[k];
      if (mask >> k & 1) pairs.emplace_back(b, a);
      else pairs.emplace_back(a, b);
    }
    std::sort(pairs.begin(), pairs.end());
    SuspensionDecomposition d;
    for (auto [b, w] : pairs) d.base_vertices.push_back(b);
    d.whiskers = std::move(pairs);
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_valid_suspension(const WeightedGraph& g, const SuspensionDecomposition& d) {
  const auto n = g.vertex_count();
  if (d.whiskers.size() * 2 != n) return false;
  std::vector<int> role(n, 0);
  for (auto [b, w] : d.whiskers) {
    if (b >= n || w >= n || role[b] || role[w]) return false;
    role[b] = 1;
    role[w] = 2;
    if (g.degree(w) != 1 || !g.adjacent(b, w)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 5-cycle pattern

/// All rotations and reflections of a cyclic edge-weight sequence.
inline std::vector<std::vector<Weight>> dihedral_orbit(std::span<const Weight> w) {
  const auto n = w.size();
  std::vector<std::vector<Weight>> out;
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Weight> rot(n), ref(n);
    for (std::size_t i = 0; i < n; ++i) {
      rot[i] = w[(r + i) % n];
      ref[i] = w[(r + n - i) % n];
    }
    out.push_back(std::move(rot));
    out.push_back(std::move(ref));
  }
  return out;
}

/// (a, b, c, d, e) with e = a <= b >= c <= d >= e.
inline bool satisfies_five_cycle_pattern(std::span<const Weight> w) {
  if (w.size() != 5) return false;
  const auto a = w[0], b = w[1], c = w[2], d = w[3], e = w[4];
  return e == a && a <= b && b >= c && c <= d && d >= e;
}

inline std::optional<std::vector<Weight>> five_cycle_arrangement(std::span<const Weight> w) {
  for (auto& cand : dihedral_orbit(w))
    if (satisfies_five_cycle_pattern(cand)) return cand;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Classifiers

inline Verdict classify_cycle(std::size_t n, std::span<const Weight> w) {
  if (n < 3) throw std::invalid_argument("cycle length must be at least 3");
  if (w.size() != n) throw std::invalid_argument("cycle weight count does not match cycle length");
  for (auto x : w)
    if (x < 1) throw std::invalid_argument("cycle weights must be >= 1");

  const bool trivial = std::all_of(w.begin(), w.end(), [&](Weight x) { return x == w.front(); });
  Verdict v;
  v.family = Family::cycle;
  switch (n) {
    case 3:
      v.unmixed = true;
      v.cohen_macaulay = CohenMacaulay::yes;
      v.rationale = "Prop: every weighted 3-cycle is Cohen-Macaulay";
      v.certificate.description = "all minimal weighted covers have cardinality 2";
      break;
    case 4:
    case 7:
      v.unmixed = trivial;
      v.cohen_macaulay = CohenMacaulay::no;
      v.rationale = "Prop: weighted " + std::to_string(n) + "-cycle is unmixed iff trivially weighted; never Cohen-Macaulay";
      v.certificate.description = trivial ? "trivially weighted" : "nontrivially weighted";
      break;
    case 5: {
      auto arr = five_cycle_arrangement(w);
      v.unmixed = arr.has_value();
      v.cohen_macaulay = arr ? CohenMacaulay::yes : CohenMacaulay::no;
      v.rationale = "Thm: weighted 5-cycle pattern e=a<=b>=c<=d>=e; Cohen-Macaulay iff unmixed";
      if (arr) {
        v.certificate.arrangement = *arr;
        v.certificate.description = "pattern satisfied by a rotation/reflection";
      } else {
        v.certificate.description = "no rotation or reflection satisfies the pattern";
      }
      break;
    }
    default:
      v.unmixed = false;
      v.cohen_macaulay = CohenMacaulay::no;
      v.rationale = "Fact: the unweighted n-cycle is mixed for n not in {3,4,5,7}";
      v.certificate.description = "underlying cycle is mixed";
      break;
  }
  return v;
}

inline Verdict classify_cycle(const WeightedGraph& g) {
  auto w = cycle_weights(g);
  return classify_cycle(w.size(), w);
}

inline Verdict classify_complete(const WeightedGraph& g) {
  if (!is_complete_graph(g)) throw UnsupportedFamily("graph is not complete");
  Verdict v;
  v.family = Family::complete;
  v.unmixed = true;
  v.cohen_macaulay = CohenMacaulay::yes;
  v.rationale = "Prop: every weighted complete graph is unmixed and Cohen-Macaulay";
  v.certificate.description =
      "all minimal weighted covers have cardinality " + std::to_string(g.vertex_count() - 1);
  return v;
}

namespace detail {

/// First base edge violating w(vi vj) <= w(vi wi) and w(vi vj) <= w(vj wj).
inline std::optional<Edge> suspension_violation(const WeightedGraph& g, const SuspensionDecomposition& d) {
  for (const auto& e : g.edges()) {
    auto wu = d.whisker_of(e.u);
    auto wv = d.whisker_of(e.v);
    if (!wu || !wv) continue;  // a whisker edge
    if (e.w > *g.weight(e.u, *wu) || e.w > *g.weight(e.v, *wv)) return e;
  }
  return std::nullopt;
}

}  // namespace detail

inline Verdict classify_suspension(const WeightedGraph& g, const SuspensionDecomposition& d) {
  if (!is_valid_suspension(g, d)) throw std::invalid_argument("invalid suspension decomposition");
  Verdict v;
  v.family = Family::suspension;
  auto bad = detail::suspension_violation(g, d);
  v.unmixed = !bad;
  v.cohen_macaulay = bad ? CohenMacaulay::no : CohenMacaulay::yes;
  v.rationale = "Thm: weighted suspension is CM iff unmixed iff every base edge weighs at most its whiskers";
  v.certificate.suspension = d;
  v.certificate.description = bad ? "base edge " + g.vertex_name(bad->u) + g.vertex_name(bad->v) +
                                        " outweighs an adjacent whisker"
                                  : "every base edge weighs at most both adjacent whiskers";
  return v;
}

/// Existential over all suspension readings of the graph.
inline Verdict classify_suspension(const WeightedGraph& g) {
  auto ds = recognize_suspensions(g);
  if (ds.empty()) throw UnsupportedFamily("graph is not a suspension");
  for (const auto& d : ds) {
    auto v = classify_suspension(g, d);
    if (v.unmixed) return v;
  }
  return classify_suspension(g, ds.front());
}

inline Verdict classify_tree(const WeightedGraph& g) {
  if (!is_tree_graph(g)) throw UnsupportedFamily("graph is not a tree");
  Verdict v;
  v.family = Family::tree;
  v.rationale = "Thm: weighted tree is CM iff unmixed iff |V|<=2 or a weighted suspension of a tree with base edges "
                "weighing at most their whiskers";
  if (g.vertex_count() <= 2) {
    v.unmixed = true;
    v.cohen_macaulay = CohenMacaulay::yes;
    v.certificate.description = "at most two vertices";
    return v;
  }
  auto ds = recognize_suspensions(g);
  if (ds.empty()) {
    v.unmixed = false;
    v.cohen_macaulay = CohenMacaulay::no;
    v.certificate.description = "no valid suspension structure";
    return v;
  }
  auto s = classify_suspension(g);
  v.unmixed = s.unmixed;
  v.cohen_macaulay = s.cohen_macaulay;
  v.certificate = s.certificate;
  return v;
}

inline Verdict classify_path(const WeightedGraph& g) {
  auto w = path_weights(g);
  Verdict v;
  v.family = Family::path;
  v.rationale = "Cor: weighted path is CM iff unmixed iff length 1, or length 3 with middle weight <= both ends";
  bool ok = w.size() == 1 || (w.size() == 3 && w[1] <= w[0] && w[1] <= w[2]);
  v.unmixed = ok;
  v.cohen_macaulay = ok ? CohenMacaulay::yes : CohenMacaulay::no;
  if (w.size() == 1) v.certificate.description = "length 1";
  else if (w.size() == 3) v.certificate.description = ok ? "middle weight is at most both end weights"
                                                         : "middle weight exceeds an end weight";
  else v.certificate.description = "length " + std::to_string(w.size()) + " is neither 1 nor 3";
  return v;
}

/// Unmixedness by enumerating minimal weighted covers; CM left unknown.
inline Verdict classify_brute_force(const WeightedGraph& g) {
  Verdict v;
  v.family = Family::general;
  auto r = is_unmixed(g);
  v.unmixed = r.unmixed;
  v.cohen_macaulay = CohenMacaulay::unknown;
  v.rationale = "brute force: cardinalities of minimal weighted covers; no CM criterion for this family";
  if (r.witnesses) {
    v.certificate.witnesses = {r.witnesses->first, r.witnesses->second};
    v.certificate.description = "minimal weighted covers of different cardinality";
  } else {
    v.certificate.description = "all minimal weighted covers share one cardinality";
  }
  return v;
}

/// Dispatch order: complete, cycle, path, tree, suspension, then brute force.
inline Verdict classify_auto(const WeightedGraph& g) {
  if (is_complete_graph(g)) return classify_complete(g);
  if (is_cycle_graph(g)) return classify_cycle(g);
  if (is_path_graph(g)) return classify_path(g);
  if (is_tree_graph(g)) return classify_tree(g);
  if (!recognize_suspensions(g).empty()) return classify_suspension(g);
  return classify_brute_force(g);
}

}  // namespace wei
