// Acceptance run: one PASS/FAIL line per criterion, with elapsed time.
// Exit status is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wei/classifiers.hpp"
#include "wei/cli.hpp"
#include "wei/decomposition.hpp"
#include "wei/verify.hpp"
#include "wei/weighted_graph.hpp"

using namespace wei;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

std::vector<std::string> rendered(const Decomposition& D) {
  std::vector<std::string> out;
  for (const auto& c : D.components) out.push_back(to_string(c));
  return out;
}

std::string graph_text(const WeightedGraph& g) { return graph_to_json(g).dump(); }

std::vector<std::vector<Weight>> tuples(std::size_t n, Weight max_weight) {
  std::vector<std::vector<Weight>> out;
  std::vector<Weight> w(n, 1);
  for (;;) {
    out.push_back(w);
    std::size_t k = 0;
    while (k < n && w[k] == max_weight) w[k++] = 1;
    if (k == n) break;
    ++w[k];
  }
  return out;
}

// Direct reading of the 5-cycle pattern over all rotations and reflections.
bool pattern_holds(const std::vector<Weight>& w) {
  for (int flip = 0; flip < 2; ++flip)
    for (std::size_t r = 0; r < 5; ++r) {
      Weight t[5];
      for (std::size_t i = 0; i < 5; ++i) t[i] = flip ? w[(r + 5 - i) % 5] : w[(r + i) % 5];
      auto [a, b, c, d, e] = std::tuple{t[0], t[1], t[2], t[3], t[4]};
      if (e == a && a <= b && b >= c && c <= d && d >= e) return true;
    }
  return false;
}

std::vector<WeightedGraph> small_corpus() {
  std::vector<WeightedGraph> out;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& shape : oracle::all_shapes(n))
      for (auto& g : oracle::all_weightings(n, shape, 2)) out.push_back(std::move(g));
  return out;
}

std::vector<WeightedGraph> random_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<WeightedGraph> out;
  while (out.size() < count) out.push_back(random_graph(rng, 5, 3));
  return out;
}

WeightedCover random_assignment(std::mt19937_64& rng, std::size_t n, Weight max_weight) {
  std::uniform_int_distribution<Weight> wd(0, max_weight);
  WeightedCover c;
  for (VertexIndex v = 0; v < n; ++v)
    if (auto w = wd(rng)) c.set(v, w);
  return c;
}

// ---------------------------------------------------------------------------

Outcome p2_example() {
  Outcome o;
  auto decompose = [](const char* doc) {
    std::istringstream in(doc);
    cli::Options opt;
    opt.method = "covers";
    return cli::render_text(cli::run(cli::CommandRequest{"decompose", "-", opt}, in));
  };
  auto distinct = decompose(R"({"vertices": ["v1","v2","v3"],
    "edges": [{"u": "v1", "v": "v2", "w": 2}, {"u": "v2", "v": "v3", "w": 5}]})");
  o.require(distinct == "(X1^2, X2^5)\n(X1^2, X3^5)\n(X2^2)\n", "a=2,b=5 gave " + distinct);
  auto equal = decompose(R"({"vertices": ["v1","v2","v3"],
    "edges": [{"u": "v1", "v": "v2", "w": 2}, {"u": "v2", "v": "v3", "w": 2}]})");
  o.require(equal == "(X1^2, X3^2)\n(X2^2)\n", "a=b=2 gave " + equal);
  return o;
}

Outcome c3_example() {
  Outcome o;
  auto D = cover_decomposition(make_cycle({1, 2, 3}));
  std::vector<std::string> want{"(X1, X2^2)", "(X1, X3^2)", "(X1^3, X2)", "(X2, X3^3)"};
  o.require(rendered(D) == want, "components differ: " + to_string(D));
  o.require(D.irredundant, "not flagged irredundant");
  for (std::size_t i = 0; i < D.size(); ++i)
    for (std::size_t j = 0; j < D.size(); ++j)
      if (i != j) o.require(!D.components[i].contained_in(D.components[j]), "redundant component");
  std::size_t on_v1v2 = 0;
  for (const auto& c : D.components) on_v1v2 += c.support() == std::vector<VarIndex>{0, 1};
  o.require(on_v1v2 == 2, "expected two components on {v1,v2}, got " + std::to_string(on_v1v2));
  return o;
}

Outcome minimization_golden() {
  Outcome o;
  auto g = make_cycle({2, 5, 3, 4, 2});
  WeightedCover want;
  want.set(0, 2);
  want.set(1, 5);
  want.set(3, 3);

  WeightedCover a;
  a.set(0, 2);
  a.set(1, 5);
  a.set(3, 3);
  a.set(4, 2);
  auto ma = minimize_cover(g, a);
  o.require(ma == want, "first input gave " + to_string(ma, g));

  WeightedCover b;
  b.set(0, 2);
  b.set(1, 5);
  b.set(3, 2);
  auto mb = minimize_cover(g, b);
  o.require(mb == want, "second input gave " + to_string(mb, g));
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  auto check = [&](const WeightedGraph& g) {
    auto I = weighted_edge_ideal(g);
    auto covers = cover_decomposition(g);
    auto split = split_decompose(I);
    auto covers_set = std::set<IrreducibleComponent>(covers.components.begin(), covers.components.end());
    auto split_set = std::set<IrreducibleComponent>(split.components.begin(), split.components.end());
    o.require(covers_set == split_set, "component sets differ on " + graph_text(g));
    o.require(ideal_eq(intersect_components(covers, I.context()), I), "covers do not reconstruct " + graph_text(g));
    o.require(ideal_eq(intersect_components(split, I.context()), I), "split does not reconstruct " + graph_text(g));
  };
  for (const auto& g : small_corpus()) check(g);
  for (const auto& g : random_corpus(500, 4242)) check(g);
  return o;
}

Outcome five_cycle() {
  Outcome o;
  auto all = tuples(5, 3);
  o.require(all.size() == 243, "tuple count");
  for (const auto& w : all) {
    auto g = make_cycle(w);
    bool verdict = classify_cycle(5, w).unmixed;
    bool enumerated = is_unmixed(g).unmixed;
    bool brute = oracle::unmixed(g);
    bool pattern = pattern_holds(w);
    std::string tag = graph_text(g);
    o.require(verdict == enumerated, "classifier vs enumeration on " + tag);
    o.require(verdict == brute, "classifier vs brute force on " + tag);
    o.require(verdict == pattern, "classifier vs pattern on " + tag);
  }
  return o;
}

Outcome four_and_seven_cycles() {
  Outcome o;
  for (const auto& w : tuples(4, 2)) {
    auto g = make_cycle(w);
    bool trivial = is_trivially_weighted(g);
    o.require(is_unmixed(g).unmixed == trivial, "4-cycle enumeration on " + graph_text(g));
    o.require(classify_cycle(4, w).unmixed == trivial, "4-cycle classifier on " + graph_text(g));
  }
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<Weight> wd(1, 3);
  std::size_t nontrivial = 0;
  while (nontrivial < 120) {
    std::vector<Weight> w(7);
    for (auto& x : w) x = wd(rng);
    auto g = make_cycle(w);
    if (is_trivially_weighted(g)) continue;
    ++nontrivial;
    o.require(!is_unmixed(g).unmixed, "7-cycle enumeration on " + graph_text(g));
    o.require(!classify_cycle(7, w).unmixed, "7-cycle classifier on " + graph_text(g));
  }
  for (Weight a = 1; a <= 3; ++a) {
    std::vector<Weight> w(7, a);
    o.require(is_unmixed(make_cycle(w)).unmixed, "trivial 7-cycle enumeration");
    o.require(classify_cycle(7, w).unmixed, "trivial 7-cycle classifier");
  }
  return o;
}

Outcome complete_graphs() {
  Outcome o;
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Weight> wd(1, 5);
  for (std::size_t n = 2; n <= 5; ++n)
    for (int k = 0; k < 25; ++k) {
      std::vector<RawEdge> edges;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({std::int64_t(i), std::int64_t(j), wd(rng)});
      auto g = make_graph(n, edges);
      for (const auto& c : enumerate_minimal_covers(g))
        o.require(c.cardinality() == n - 1, "cover of size " + std::to_string(c.cardinality()) + " on " + graph_text(g));
      auto v = classify_complete(g);
      o.require(v.unmixed && v.cohen_macaulay == CohenMacaulay::yes, "verdict on " + graph_text(g));
    }
  return o;
}

Outcome suspensions_and_trees() {
  Outcome o;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& shape : oracle::labeled_trees(n))
      for (const auto& g : oracle::all_weightings(n, shape, 2))
        o.require(classify_tree(g).unmixed == is_unmixed(g).unmixed, "tree on " + graph_text(g));
  std::mt19937_64 rng(31);
  for (int k = 0; k < 200; ++k) {
    SuspensionDecomposition layout;
    auto g = oracle::random_suspension(rng, 4, 3, &layout);
    bool condition = classify_suspension(g, layout).unmixed;
    o.require(condition == oracle::unmixed(g), "suspension on " + graph_text(g));
  }
  return o;
}

Outcome structural_identities() {
  Outcome o;
  auto corpus = small_corpus();
  for (auto& g : random_corpus(500, 99)) corpus.push_back(std::move(g));
  std::mt19937_64 rng(8);
  for (const auto& g : corpus) {
    auto I = weighted_edge_ideal(g);
    auto plain = edge_ideal(g);
    const auto& ctx = I.context();
    auto tag = graph_text(g);
    o.require(ideal_eq(m_radical(I), plain), "radical on " + tag);
    if (!g.edges().empty() && is_trivially_weighted(g))
      o.require(ideal_eq(I, bracket_power(plain, g.edges()[0].w)), "bracket power on " + tag);

    std::vector<WeightedCover> samples = enumerate_minimal_covers(g);
    for (int k = 0; k < 6; ++k) samples.push_back(random_assignment(rng, g.vertex_count(), 3));
    for (const auto& a : samples) {
      auto Pa = cover_ideal(a, ctx).ideal();
      o.require(ideal_leq(I, Pa) == is_weighted_cover(g, a), "cover predicate on " + tag + " with " + to_string(a, g));
      for (const auto& b : samples)
        o.require(cover_leq(a, b) == ideal_leq(Pa, cover_ideal(b, ctx).ideal()),
                  "cover order on " + tag + " with " + to_string(a, g) + " and " + to_string(b, g));
    }
  }
  return o;
}

Outcome polarization() {
  Outcome o;
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int k = 0; k < 300; ++k) {
    auto I = oracle::random_ideal(rng, dim(rng), 5, 4);
    auto p = polarize(I);
    std::ostringstream tag;
    tag << I;
    o.require(p.ideal.is_squarefree(), "not squarefree for " + tag.str());
    o.require(ideal_eq(depolarize(p, I.context()), I), "round trip fails for " + tag.str());
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0 = no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "P2 worked example", 1.0, p2_example},
      {2, "C3 worked example", 1.0, c3_example},
      {3, "C5 minimization golden", 0, minimization_golden},
      {4, "covers and split agree and reconstruct", 300.0, oracle_equivalence},
      {5, "5-cycle classifier", 120.0, five_cycle},
      {6, "4-cycles and 7-cycles", 0, four_and_seven_cycles},
      {7, "complete graphs", 0, complete_graphs},
      {8, "trees and suspensions", 0, suspensions_and_trees},
      {9, "structural identities", 0, structural_identities},
      {10, "polarization", 0, polarization},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds && o.pass) {
      o.pass = false;
      o.detail = "over time limit of " + std::to_string(c.limit_seconds) + " s";
    }
    failed += !o.pass;
    std::printf("%s %2d  %-40s %8.3f s%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                o.pass ? "" : "  ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed;
}
