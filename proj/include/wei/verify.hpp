#pragma once

// Cross-validation of one weighted graph: the cover decomposition against the
// splitting oracle, plus the structural identities relating covers and ideals.

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wei/classifiers.hpp"
#include "wei/decomposition.hpp"
#include "wei/weighted_graph.hpp"

namespace wei {

struct CheckCount {
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct VerifyTally {
  /// Keyed by check name; std::map keeps report order stable.
  std::map<std::string, CheckCount> checks;
  std::vector<std::string> failures;

  void record(const std::string& name, bool ok, const std::string& detail = {}) {
    auto& c = checks[name];
    if (ok) {
      ++c.passed;
    } else {
      ++c.failed;
      failures.push_back(name + (detail.empty() ? "" : ": " + detail));
    }
  }

  std::size_t total_failed() const {
    std::size_t n = 0;
    for (const auto& [k, c] : checks) n += c.failed;
    return n;
  }
};

/// Human-readable first difference between two component lists, or empty when equal.
inline std::string describe_component_mismatch(const Decomposition& covers, const Decomposition& split) {
  for (const auto& c : covers.components)
    if (std::find(split.components.begin(), split.components.end(), c) == split.components.end())
      return "component " + to_string(c) + " appears only in the cover decomposition";
  for (const auto& c : split.components)
    if (std::find(covers.components.begin(), covers.components.end(), c) == covers.components.end())
      return "component " + to_string(c) + " appears only in the split decomposition";
  return {};
}

/// Random simple graph: 1..max_vertices vertices, each pair joined with
/// probability 1/2, weights uniform in 1..max_weight.
template <class Rng>
WeightedGraph random_graph(Rng& rng, std::size_t max_vertices, Weight max_weight) {
  std::uniform_int_distribution<std::size_t> nv(1, std::max<std::size_t>(1, max_vertices));
  std::uniform_int_distribution<Weight> wd(1, std::max<Weight>(1, max_weight));
  std::bernoulli_distribution coin(0.5);
  const auto n = nv(rng);
  std::vector<RawEdge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), wd(rng)});
  return make_graph(n, edges);
}

/// Runs every check on g; `rng` drives the sampled cover candidates.
template <class Rng>
void verify_graph(const WeightedGraph& g, Rng& rng, VerifyTally& tally) {
  const auto ctx = g.variable_context();
  const auto I = weighted_edge_ideal(g);
  const auto covers = enumerate_minimal_covers(g);
  const auto by_covers = cover_decomposition(g);
  const auto by_split = split_decompose(I);

  auto mismatch = describe_component_mismatch(by_covers, by_split);
  tally.record("decomposition_agreement", mismatch.empty(), mismatch);
  tally.record("reconstruction", ideal_eq(intersect_components(by_covers, ctx), I));

  bool irredundant = true;
  for (std::size_t i = 0; i < by_covers.size(); ++i)
    for (std::size_t j = 0; j < by_covers.size(); ++j)
      if (i != j && ideal_leq(by_covers.components[i].ideal(), by_covers.components[j].ideal())) irredundant = false;
  tally.record("irredundancy", irredundant);

  tally.record("monomial_radical", ideal_eq(m_radical(I), edge_ideal(g)));
  if (g.edge_count() > 0 && is_trivially_weighted(g))
    tally.record("bracket_power", ideal_eq(I, bracket_power(edge_ideal(g), g.edges().front().w)));

  bool minimal_ok = true;
  for (const auto& c : covers)
    minimal_ok = minimal_ok && is_weighted_cover(g, c) && minimize_cover(g, c) == c;
  tally.record("minimal_covers_fixed_by_minimize", minimal_ok);

  // Each minimal vertex cover, weighted by the least incident edge weight, minimizes with its support intact.
  bool mvc_ok = true;
  for (const auto& s : minimal_vertex_covers(g)) {
    WeightedCover c;
    for (auto v : s) {
      Weight m = UINT32_MAX;
      for (auto k : g.incident(v)) m = std::min(m, g.edges()[k].w);
      c.set(v, m);
    }
    mvc_ok = mvc_ok && minimize_cover(g, c).support() == s;
  }
  tally.record("minimal_vertex_cover_lifts", mvc_ok);

  // Sampled candidate pairs for the two containment lemmas.
  Weight top = 1;
  for (const auto& e : g.edges()) top = std::max(top, e.w);
  std::uniform_int_distribution<Weight> wd(1, top + 1);
  std::bernoulli_distribution coin(0.5);
  auto sample = [&] {
    WeightedCover c;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
      if (coin(rng)) c.set(v, wd(rng));
    return c;
  };
  bool order_ok = true, containment_ok = true;
  for (int k = 0; k < 20; ++k) {
    auto a = sample();
    auto b = sample();
    order_ok = order_ok && cover_leq(a, b) == ideal_leq(cover_ideal(a, ctx).ideal(), cover_ideal(b, ctx).ideal());
    containment_ok = containment_ok && ideal_leq(I, cover_ideal(a, ctx).ideal()) == is_weighted_cover(g, a);
  }
  tally.record("cover_order_matches_containment", order_ok);
  tally.record("edge_ideal_in_cover_ideal_iff_cover", containment_ok);

  std::vector<VertexSet> split_supports;
  for (const auto& c : by_split.components) split_supports.push_back(c.support());
  std::sort(split_supports.begin(), split_supports.end());
  split_supports.erase(std::unique(split_supports.begin(), split_supports.end()), split_supports.end());
  tally.record("associated_primes", associated_primes(g) == split_supports);

  auto brute = is_unmixed(g);
  tally.record("unmixed_matches_split", brute.unmixed == is_m_unmixed_ideal(I));
  auto verdict = classify_auto(g);
  if (verdict.family != Family::general)
    tally.record("classifier_matches_brute_force", verdict.unmixed == brute.unmixed,
                 to_string(verdict.family) + " verdict disagrees with enumeration");
  tally.record("cm_implies_unmixed", verdict.cohen_macaulay != CohenMacaulay::yes || verdict.unmixed);
}

}  // namespace wei
