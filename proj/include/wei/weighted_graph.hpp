#pragma once

// Weighted graphs, weighted vertex covers, and the cover-based decomposition
// of weighted edge ideals.
//
// Vertex indices are 0-based throughout; vertex i corresponds to variable
// X_{i+1} in the default context. A weighted cover maps each chosen vertex to
// its weight, and covers an edge e through endpoint v when weight(v) <= w(e).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "wei/decomposition.hpp"
#include "wei/monomial.hpp"

namespace wei {

using VertexIndex = std::size_t;
using Weight = std::uint32_t;
using VertexSet = std::vector<VertexIndex>;

struct Edge {
  VertexIndex u;
  VertexIndex v;
  Weight w;

  VertexIndex other(VertexIndex x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphValidationError : public std::invalid_argument {
 public:
  enum class Kind { empty, bad_name, duplicate_name, bad_index, loop, duplicate_edge, bad_weight };

  GraphValidationError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Unvalidated input; indices and weights are signed so bad values survive until validation.
struct RawEdge {
  std::int64_t u;
  std::int64_t v;
  std::int64_t w;
};

struct RawGraph {
  std::vector<std::string> vertex_names;
  std::vector<RawEdge> edges;
};

class WeightedGraph {
 public:
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& vertex_name(VertexIndex v) const { return names_.at(v); }
  std::size_t vertex_count() const { return names_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Indices into edges() of the edges at v.
  const std::vector<std::size_t>& incident(VertexIndex v) const { return incident_.at(v); }
  std::size_t degree(VertexIndex v) const { return incident_.at(v).size(); }

  std::optional<Weight> weight(VertexIndex a, VertexIndex b) const {
    for (auto k : incident_.at(a))
      if (edges_[k].other(a) == b) return edges_[k].w;
    return std::nullopt;
  }
  bool adjacent(VertexIndex a, VertexIndex b) const { return weight(a, b).has_value(); }

  /// Variables X1..Xd, one per vertex.
  VariableContext variable_context() const { return VariableContext(vertex_count()); }

  friend WeightedGraph validate_graph(const RawGraph& raw);

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

inline WeightedGraph validate_graph(const RawGraph& raw) {
  using K = GraphValidationError::Kind;
  if (raw.vertex_names.empty()) throw GraphValidationError(K::empty, "graph must have at least one vertex");
  std::unordered_set<std::string> seen;
  for (const auto& n : raw.vertex_names) {
    if (n.empty()) throw GraphValidationError(K::bad_name, "vertex names must be nonempty");
    if (!seen.insert(n).second) throw GraphValidationError(K::duplicate_name, "duplicate vertex name: " + n);
  }

  const auto d = static_cast<std::int64_t>(raw.vertex_names.size());
  WeightedGraph g;
  g.names_ = raw.vertex_names;
  g.incident_.assign(raw.vertex_names.size(), {});
  std::set<std::pair<VertexIndex, VertexIndex>> pairs;
  for (const auto& e : raw.edges) {
    if (e.u < 0 || e.u >= d || e.v < 0 || e.v >= d)
      throw GraphValidationError(K::bad_index, "edge endpoint out of range: (" + std::to_string(e.u) + ", " +
                                                   std::to_string(e.v) + ")");
    auto u = static_cast<VertexIndex>(e.u);
    auto v = static_cast<VertexIndex>(e.v);
    if (u == v) throw GraphValidationError(K::loop, "loop at vertex " + g.names_[u]);
    if (e.w < 1) throw GraphValidationError(K::bad_weight, "weight must be >= 1 on edge " + g.names_[u] + g.names_[v]);
    if (e.w > std::int64_t{UINT32_MAX}) throw GraphValidationError(K::bad_weight, "weight too large");
    if (!pairs.emplace(std::min(u, v), std::max(u, v)).second)
      throw GraphValidationError(K::duplicate_edge, "duplicate edge " + g.names_[u] + g.names_[v]);
    g.incident_[u].push_back(g.edges_.size());
    g.incident_[v].push_back(g.edges_.size());
    g.edges_.push_back(Edge{u, v, static_cast<Weight>(e.w)});
  }
  return g;
}

/// Convenience builder with default names v1..vd.
inline WeightedGraph make_graph(std::size_t vertex_count, const std::vector<RawEdge>& edges) {
  RawGraph raw;
  for (std::size_t i = 1; i <= vertex_count; ++i) raw.vertex_names.push_back("v" + std::to_string(i));
  raw.edges = edges;
  return validate_graph(raw);
}

/// Cycle v1..vn with weights[i] on edge v_{i+1} v_{i+2} (indices mod n).
inline WeightedGraph make_cycle(const std::vector<Weight>& weights) {
  const auto n = weights.size();
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<RawEdge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>((i + 1) % n), weights[i]});
  return make_graph(n, edges);
}

/// Path v1..v(k+1) with weights[i] on edge v_{i+1} v_{i+2}.
inline WeightedGraph make_path(const std::vector<Weight>& weights) {
  std::vector<RawEdge> edges;
  for (std::size_t i = 0; i < weights.size(); ++i)
    edges.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(i + 1), weights[i]});
  return make_graph(weights.size() + 1, edges);
}

inline bool is_trivially_weighted(const WeightedGraph& g) {
  const auto& es = g.edges();
  return std::all_of(es.begin(), es.end(), [&](const Edge& e) { return e.w == es.front().w; });
}

// ---------------------------------------------------------------------------
// Edge ideals

inline MonomialIdeal edge_ideal(const WeightedGraph& g) {
  const auto d = g.vertex_count();
  std::vector<Monomial> gens;
  for (const auto& e : g.edges()) {
    std::vector<Exponent> x(d, 0);
    x[e.u] = x[e.v] = 1;
    gens.emplace_back(std::move(x));
  }
  return MonomialIdeal(g.variable_context(), std::move(gens));
}

inline MonomialIdeal weighted_edge_ideal(const WeightedGraph& g) {
  const auto d = g.vertex_count();
  std::vector<Monomial> gens;
  for (const auto& e : g.edges()) {
    std::vector<Exponent> x(d, 0);
    x[e.u] = x[e.v] = e.w;
    gens.emplace_back(std::move(x));
  }
  return MonomialIdeal(g.variable_context(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Weighted covers

class WeightedCover {
 public:
  using Entries = std::map<VertexIndex, Weight>;

  WeightedCover() = default;
  explicit WeightedCover(Entries entries) : entries_(std::move(entries)) {
    for (auto [v, w] : entries_)
      if (w < 1) throw std::invalid_argument("cover weights must be >= 1");
  }

  const Entries& entries() const { return entries_; }
  std::size_t cardinality() const { return entries_.size(); }
  bool contains(VertexIndex v) const { return entries_.count(v) != 0; }
  std::optional<Weight> weight(VertexIndex v) const {
    auto it = entries_.find(v);
    return it == entries_.end() ? std::nullopt : std::optional<Weight>(it->second);
  }

  VertexSet support() const {
    VertexSet s;
    for (auto [v, w] : entries_) s.push_back(v);
    return s;
  }

  void set(VertexIndex v, Weight w) {
    if (w < 1) throw std::invalid_argument("cover weights must be >= 1");
    entries_[v] = w;
  }
  void erase(VertexIndex v) { entries_.erase(v); }

  friend bool operator==(const WeightedCover&, const WeightedCover&) = default;
  friend bool operator<(const WeightedCover& a, const WeightedCover& b) { return a.entries_ < b.entries_; }

 private:
  Entries entries_;
};

/// `{v1^2, v2^5}` using the graph's vertex names.
inline std::string to_string(const WeightedCover& c, const WeightedGraph& g) {
  std::string out = "{";
  bool first = true;
  for (auto [v, w] : c.entries()) {
    if (!first) out += ", ";
    first = false;
    out += g.vertex_name(v) + "^" + std::to_string(w);
  }
  return out + "}";
}

namespace detail {

inline bool covers_edge(const WeightedCover& c, const Edge& e, VertexIndex through) {
  auto w = c.weight(through);
  return w && *w <= e.w;
}

inline bool edge_covered(const WeightedCover& c, const Edge& e) {
  return covers_edge(c, e, e.u) || covers_edge(c, e, e.v);
}

inline void require_in_graph(const WeightedGraph& g, const WeightedCover& c) {
  if (!c.entries().empty() && c.entries().rbegin()->first >= g.vertex_count())
    throw std::out_of_range("cover names a vertex outside the graph");
}

}  // namespace detail

inline bool is_weighted_cover(const WeightedGraph& g, const WeightedCover& c) {
  detail::require_in_graph(g, c);
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return detail::edge_covered(c, e); });
}

/// smaller <= larger in the cover order: fewer vertices, each carrying a weight at least as large.
inline bool cover_leq(const WeightedCover& smaller, const WeightedCover& larger) {
  for (auto [v, w] : smaller.entries()) {
    auto lw = larger.weight(v);
    if (!lw || *lw > w) return false;
  }
  return true;
}

inline IrreducibleComponent cover_ideal(const WeightedCover& c, const VariableContext& ctx) {
  IrreducibleComponent::Powers p;
  for (auto [v, w] : c.entries()) p.emplace(v, w);
  return IrreducibleComponent(ctx, std::move(p));
}

/// A cover is minimal iff each of its vertices is the sole cover of some
/// incident edge whose weight equals the vertex weight: then the vertex can
/// neither be dropped nor have its weight raised, and covers form an up-set.
inline bool is_minimal_weighted_cover(const WeightedGraph& g, const WeightedCover& c) {
  if (!is_weighted_cover(g, c)) return false;
  for (auto [v, w] : c.entries()) {
    bool pinned = false;
    for (auto k : g.incident(v)) {
      const auto& e = g.edges()[k];
      if (e.w == w && !detail::covers_edge(c, e, e.other(v))) {
        pinned = true;
        break;
      }
    }
    if (!pinned) return false;
  }
  return true;
}

/// Drops removable vertices (ascending index, repeated to a fixed point), then
/// raises each remaining weight to its largest feasible value in ascending order.
inline WeightedCover minimize_cover(const WeightedGraph& g, WeightedCover c) {
  if (!is_weighted_cover(g, c)) throw std::invalid_argument("minimize_cover: input is not a weighted vertex cover");

  for (bool changed = true; changed;) {
    changed = false;
    for (auto v : c.support()) {
      WeightedCover trial = c;
      trial.erase(v);
      if (is_weighted_cover(g, trial)) {
        c = std::move(trial);
        changed = true;
      }
    }
  }

  for (auto v : c.support()) {
    // Edges only v covers bound v's weight from above.
    std::optional<Weight> cap;
    for (auto k : g.incident(v)) {
      const auto& e = g.edges()[k];
      if (detail::covers_edge(c, e, e.other(v))) continue;
      cap = cap ? std::min(*cap, e.w) : e.w;
    }
    // Phase 1 left v non-removable, so some edge depends on it.
    if (cap) c.set(v, *cap);
  }
  return c;
}

namespace detail {

inline std::vector<std::vector<Weight>> weight_candidates(const WeightedGraph& g) {
  std::vector<std::vector<Weight>> cand(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    for (auto k : g.incident(v)) cand[v].push_back(g.edges()[k].w);
    std::sort(cand[v].begin(), cand[v].end());
    cand[v].erase(std::unique(cand[v].begin(), cand[v].end()), cand[v].end());
  }
  return cand;
}

class CoverEnumerator {
 public:
  explicit CoverEnumerator(const WeightedGraph& g) : g_(g), cand_(weight_candidates(g)) {}

  std::vector<WeightedCover> run() {
    out_.clear();
    current_ = WeightedCover{};
    visit(0);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  // Every edge to an already-decided neighbor must be covered once v is decided.
  bool back_edges_covered(VertexIndex v) const {
    for (auto k : g_.incident(v)) {
      const auto& e = g_.edges()[k];
      if (e.other(v) < v && !edge_covered(current_, e)) return false;
    }
    return true;
  }

  void visit(VertexIndex v) {
    if (v == g_.vertex_count()) {
      if (is_minimal_weighted_cover(g_, current_)) out_.push_back(current_);
      return;
    }
    if (back_edges_covered(v)) visit(v + 1);
    for (auto w : cand_[v]) {
      current_.set(v, w);
      if (back_edges_covered(v)) visit(v + 1);
      current_.erase(v);
    }
  }

  const WeightedGraph& g_;
  std::vector<std::vector<Weight>> cand_;
  WeightedCover current_;
  std::vector<WeightedCover> out_;
};

}  // namespace detail

/// Every minimal weighted cover, in canonical order. A minimal cover's weight
/// at v equals the weight of an edge only v covers, so each vertex ranges over
/// its incident edge weights.
inline std::vector<WeightedCover> enumerate_minimal_covers(const WeightedGraph& g) {
  return detail::CoverEnumerator(g).run();
}

/// The irredundant decomposition of I(G_w) read off the minimal weighted covers.
inline Decomposition cover_decomposition(const WeightedGraph& g) {
  const auto ctx = g.variable_context();
  Decomposition D;
  D.irredundant = true;
  for (const auto& c : enumerate_minimal_covers(g)) D.components.push_back(cover_ideal(c, ctx));
  std::sort(D.components.begin(), D.components.end());
  return D;
}

struct UnmixedResult {
  bool unmixed = true;
  /// Two minimal covers of different cardinality when mixed.
  std::optional<std::pair<WeightedCover, WeightedCover>> witnesses;
  std::vector<std::size_t> cardinalities;
};

inline UnmixedResult is_unmixed(const WeightedGraph& g) {
  auto covers = enumerate_minimal_covers(g);
  UnmixedResult r;
  std::set<std::size_t> sizes;
  for (const auto& c : covers) sizes.insert(c.cardinality());
  r.cardinalities.assign(sizes.begin(), sizes.end());
  if (sizes.size() <= 1) return r;

  r.unmixed = false;
  auto smallest = std::min_element(covers.begin(), covers.end(), [](const auto& a, const auto& b) {
    return a.cardinality() < b.cardinality();
  });
  auto largest = std::max_element(covers.begin(), covers.end(), [](const auto& a, const auto& b) {
    return a.cardinality() < b.cardinality();
  });
  r.witnesses.emplace(*smallest, *largest);
  return r;
}

// ---------------------------------------------------------------------------
// Unweighted covers and primes

/// Inclusion-minimal vertex covers of the underlying graph, lexicographically ordered.
inline std::vector<VertexSet> minimal_vertex_covers(const WeightedGraph& g) {
  const auto d = g.vertex_count();
  std::vector<VertexSet> out;
  std::vector<bool> in(d, false);
  VertexSet chosen;

  // Depth-first over include/exclude; a vertex may be excluded only if its
  // earlier neighbors are all included.
  auto visit = [&](auto&& self, VertexIndex v) -> void {
    if (v == d) {
      // Minimal iff every chosen vertex has a neighbor outside the set.
      for (auto x : chosen) {
        bool needed = false;
        for (auto k : g.incident(x))
          if (!in[g.edges()[k].other(x)]) needed = true;
        if (!needed) return;
      }
      out.push_back(chosen);
      return;
    }
    in[v] = true;
    chosen.push_back(v);
    self(self, v + 1);
    chosen.pop_back();
    in[v] = false;

    bool can_skip = true;
    for (auto k : g.incident(v)) {
      auto u = g.edges()[k].other(v);
      if (u < v && !in[u]) can_skip = false;
    }
    if (can_skip) self(self, v + 1);
  };
  visit(visit, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<VertexSet> minimal_primes(const WeightedGraph& g) { return minimal_vertex_covers(g); }

/// Supports of the minimal weighted covers, deduplicated.
inline std::vector<VertexSet> associated_primes(const WeightedGraph& g) {
  std::set<VertexSet> s;
  for (const auto& c : enumerate_minimal_covers(g)) s.insert(c.support());
  return {s.begin(), s.end()};
}

struct HeightAndDimension {
  std::size_t m_height;
  /// Krull dimension of R/I(G_w), valid for field coefficients.
  std::size_t dimension;
};

inline HeightAndDimension m_height_and_dimension(const WeightedGraph& g) {
  if (g.edge_count() == 0) return {0, g.vertex_count()};
  std::size_t h = g.vertex_count();
  for (const auto& s : minimal_vertex_covers(g)) h = std::min(h, s.size());
  return {h, g.vertex_count() - h};
}

inline std::string to_string(const VertexSet& s, const WeightedGraph& g) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += g.vertex_name(s[i]);
  }
  return out + "}";
}

}  // namespace wei
