#pragma once

// Command dispatch and rendering for the `wei` tool. The binary in tools/ only
// parses arguments; everything testable lives here.
//
// Exit codes: 0 success, 1 usage or parse error, 2 validation error,
// 3 oracle/property failure.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wei/classifiers.hpp"
#include "wei/decomposition.hpp"
#include "wei/graph_json.hpp"
#include "wei/verify.hpp"
#include "wei/weighted_graph.hpp"

namespace wei::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitOracle = 3;

enum class Format { text, json };

struct Options {
  Format format = Format::text;
  std::string method = "covers";
  std::string family = "auto";
  bool assoc = false;
  bool minimal = false;
  bool check = false;
  std::optional<std::size_t> random;
  std::size_t max_vertices = 5;
  Weight max_weight = 3;
  std::uint64_t seed = 1;
  std::string cover;
};

struct CommandRequest {
  std::string command;
  /// File path, or "-" for standard input. Empty only for `verify --random`.
  std::string input_path;
  Options options;
};

struct Report {
  bool ok = true;
  int exit_code = kExitOk;
  nlohmann::json payload = nlohmann::json::object();
  std::vector<std::string> diagnostics;

  friend bool operator==(const Report&, const Report&) = default;
};

inline nlohmann::json report_to_json(const Report& r) {
  return {{"status", r.ok ? "ok" : "error"},
          {"exit_code", r.exit_code},
          {"payload", r.payload},
          {"diagnostics", r.diagnostics}};
}

inline Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.ok = j.at("status").get<std::string>() == "ok";
  r.exit_code = j.at("exit_code").get<int>();
  r.payload = j.at("payload");
  r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
  return r;
}

// ---------------------------------------------------------------------------
// Payload encoding

namespace detail {

class CommandError : public std::runtime_error {
 public:
  CommandError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

inline nlohmann::json encode(const MonomialIdeal& I) {
  nlohmann::json gens = nlohmann::json::array();
  nlohmann::json exps = nlohmann::json::array();
  for (const auto& g : I.generators()) {
    gens.push_back(to_string(g, I.context()));
    exps.push_back(std::vector<Exponent>(g.exponents().begin(), g.exponents().end()));
  }
  return {{"generators", std::move(gens)}, {"exponents", std::move(exps)}};
}

inline nlohmann::json encode(const IrreducibleComponent& c) {
  nlohmann::json out = nlohmann::json::array();
  for (auto [i, e] : c.powers()) out.push_back({c.context().name(i), e});
  return out;
}

inline nlohmann::json encode(const WeightedCover& c, const WeightedGraph& g) {
  nlohmann::json out = nlohmann::json::array();
  for (auto [v, w] : c.entries()) out.push_back({g.vertex_name(v), w});
  return out;
}

inline nlohmann::json encode(const VertexSet& s, const WeightedGraph& g) {
  nlohmann::json out = nlohmann::json::array();
  for (auto v : s) out.push_back(g.vertex_name(v));
  return out;
}

inline nlohmann::json encode(const Verdict& v, const WeightedGraph& g) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& c : v.certificate.witnesses) witnesses.push_back(encode(c, g));
  nlohmann::json suspension = nullptr;
  if (v.certificate.suspension) {
    suspension = nlohmann::json::array();
    for (auto [b, w] : v.certificate.suspension->whiskers)
      suspension.push_back({g.vertex_name(b), g.vertex_name(w)});
  }
  return {{"family", to_string(v.family)},
          {"unmixed", v.unmixed},
          {"cohen_macaulay", to_string(v.cohen_macaulay)},
          {"certificate",
           {{"description", v.certificate.description},
            {"witnesses", std::move(witnesses)},
            {"suspension", std::move(suspension)},
            {"arrangement", v.certificate.arrangement}}},
          {"rationale", v.rationale}};
}

inline std::string component_text(const nlohmann::json& c) {
  std::string out = "(";
  bool first = true;
  for (const auto& p : c) {
    if (!first) out += ", ";
    first = false;
    out += p.at(0).get<std::string>();
    if (auto e = p.at(1).get<std::uint64_t>(); e > 1) out += "^" + std::to_string(e);
  }
  return out + ")";
}

inline std::string cover_text(const nlohmann::json& c) {
  std::string out = "{";
  bool first = true;
  for (const auto& p : c) {
    if (!first) out += ", ";
    first = false;
    out += p.at(0).get<std::string>() + "^" + std::to_string(p.at(1).get<std::uint64_t>());
  }
  return out + "}";
}

inline std::string ideal_text(const nlohmann::json& ideal) {
  const auto& gens = ideal.at("generators");
  if (gens.empty()) return "0";
  std::string out;
  for (const auto& g : gens) {
    if (!out.empty()) out += ", ";
    out += g.get<std::string>();
  }
  return out;
}

inline std::string set_text(const nlohmann::json& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s[i].get<std::string>();
  return out + "}";
}

inline std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream f(path);
  if (!f) throw CommandError(kExitUsage, "cannot open input file: " + path);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

inline WeightedCover parse_cover(const std::string& spec, const WeightedGraph& g) {
  // "v1:2,v2:5" (a '^' separator is also accepted).
  WeightedCover c;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    item = item.substr(b, e - b + 1);
    auto sep = item.find_first_of(":^");
    if (sep == std::string::npos) throw CommandError(kExitUsage, "cover entry '" + item + "' is not name:weight");
    auto name = item.substr(0, sep);
    long long w = 0;
    try {
      std::size_t used = 0;
      w = std::stoll(item.substr(sep + 1), &used);
      if (used != item.size() - sep - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw CommandError(kExitUsage, "cover entry '" + item + "' has a non-integer weight");
    }
    const auto& names = g.vertex_names();
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw CommandError(kExitValidation, "cover names unknown vertex '" + name + "'");
    if (w < 1) throw CommandError(kExitValidation, "cover weight must be >= 1 at " + name);
    auto v = static_cast<VertexIndex>(it - names.begin());
    if (c.contains(v)) throw CommandError(kExitValidation, "vertex '" + name + "' listed twice in cover");
    c.set(v, static_cast<Weight>(w));
  }
  return c;
}

inline Verdict classify_as(const WeightedGraph& g, const std::string& family) {
  if (family == "auto") return classify_auto(g);
  if (family == "cycle") return classify_cycle(g);
  if (family == "complete") return classify_complete(g);
  if (family == "tree") return classify_tree(g);
  if (family == "path") return classify_path(g);
  if (family == "suspension") return classify_suspension(g);
  throw CommandError(kExitUsage, "unknown family '" + family + "'");
}

inline nlohmann::json encode(const VerifyTally& t) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& [name, c] : t.checks) checks.push_back({{"name", name}, {"passed", c.passed}, {"failed", c.failed}});
  return checks;
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline Report run(const CommandRequest& req, std::istream& in = std::cin) {
  using detail::CommandError;
  using detail::encode;
  Report report;
  nlohmann::json& p = report.payload;
  p["command"] = req.command;

  try {
    const auto& opt = req.options;
    auto load = [&] {
      if (req.input_path.empty()) throw CommandError(kExitUsage, "missing input graph");
      return parse_graph_json(detail::read_all(req.input_path, in));
    };

    if (req.command == "ideal") {
      auto g = load();
      p["ideal"] = encode(weighted_edge_ideal(g));
    } else if (req.command == "radical") {
      auto g = load();
      p["ideal"] = encode(m_radical(weighted_edge_ideal(g)));
    } else if (req.command == "decompose") {
      if (opt.method != "covers" && opt.method != "split")
        throw CommandError(kExitUsage, "unknown method '" + opt.method + "'");
      auto g = load();
      auto by_covers = cover_decomposition(g);
      auto chosen = opt.method == "covers" ? by_covers : split_decompose(weighted_edge_ideal(g));
      p["method"] = opt.method;
      p["components"] = nlohmann::json::array();
      for (const auto& c : chosen.components) p["components"].push_back(encode(c));
      if (opt.check) {
        auto other = opt.method == "covers" ? split_decompose(weighted_edge_ideal(g)) : by_covers;
        auto mismatch = describe_component_mismatch(opt.method == "covers" ? chosen : other,
                                                            opt.method == "covers" ? other : chosen);
        p["check"] = mismatch.empty() ? "agree" : "disagree";
        if (!mismatch.empty()) throw CommandError(kExitOracle, "decomposition mismatch: " + mismatch);
      }
    } else if (req.command == "covers") {
      auto g = load();
      p["covers"] = nlohmann::json::array();
      for (const auto& c : enumerate_minimal_covers(g)) p["covers"].push_back(encode(c, g));
    } else if (req.command == "minimize") {
      auto g = load();
      if (opt.cover.empty()) throw CommandError(kExitUsage, "minimize needs --cover");
      auto c = detail::parse_cover(opt.cover, g);
      if (!is_weighted_cover(g, c))
        throw CommandError(kExitValidation, to_string(c, g) + " is not a weighted vertex cover");
      p["input"] = encode(c, g);
      p["cover"] = encode(minimize_cover(g, c), g);
    } else if (req.command == "unmixed") {
      auto g = load();
      auto r = is_unmixed(g);
      p["unmixed"] = r.unmixed;
      p["cardinalities"] = r.cardinalities;
      p["witnesses"] = nlohmann::json::array();
      if (r.witnesses) {
        p["witnesses"].push_back(encode(r.witnesses->first, g));
        p["witnesses"].push_back(encode(r.witnesses->second, g));
      }
    } else if (req.command == "classify") {
      auto g = load();
      p["verdict"] = encode(detail::classify_as(g, opt.family), g);
    } else if (req.command == "primes") {
      if (opt.assoc && opt.minimal) throw CommandError(kExitUsage, "--assoc and --minimal are exclusive");
      auto g = load();
      p["kind"] = opt.minimal ? "minimal" : "associated";
      p["primes"] = nlohmann::json::array();
      for (const auto& s : opt.minimal ? minimal_primes(g) : associated_primes(g)) p["primes"].push_back(encode(s, g));
    } else if (req.command == "verify") {
      VerifyTally tally;
      std::mt19937_64 rng(opt.seed);
      std::size_t graphs = 0;
      if (opt.random) {
        for (std::size_t k = 0; k < *opt.random; ++k, ++graphs) {
          auto g = random_graph(rng, opt.max_vertices, opt.max_weight);
          auto before = tally.failures.size();
          verify_graph(g, rng, tally);
          for (auto i = before; i < tally.failures.size(); ++i) tally.failures[i] += " on " + graph_to_json(g).dump();
        }
      } else {
        verify_graph(load(), rng, tally);
        graphs = 1;
      }
      p["graphs"] = graphs;
      p["checks"] = encode(tally);
      p["failed"] = tally.total_failed();
      if (tally.total_failed() > 0) {
        report.ok = false;
        report.exit_code = kExitOracle;
        for (std::size_t i = 0; i < tally.failures.size() && i < 20; ++i) report.diagnostics.push_back(tally.failures[i]);
      }
    } else {
      throw CommandError(kExitUsage, "unknown command '" + req.command + "'");
    }
  } catch (const CommandError& e) {
    report.ok = false;
    report.exit_code = e.code();
    report.diagnostics.push_back(e.what());
  } catch (const GraphParseError& e) {
    report.ok = false;
    report.exit_code = kExitUsage;
    report.diagnostics.push_back(e.what());
  } catch (const GraphValidationError& e) {
    report.ok = false;
    report.exit_code = kExitValidation;
    report.diagnostics.push_back(e.what());
  } catch (const UnsupportedFamily& e) {
    report.ok = false;
    report.exit_code = kExitValidation;
    report.diagnostics.push_back(std::string("unsupported family: ") + e.what());
  } catch (const ResourceLimitExceeded& e) {
    report.ok = false;
    report.exit_code = kExitValidation;
    report.diagnostics.push_back(e.what());
  }
  return report;
}

inline std::string render_text(const Report& r) {
  std::ostringstream os;
  const auto& p = r.payload;
  const auto cmd = p.value("command", std::string{});

  if (cmd == "ideal" || cmd == "radical") {
    if (p.contains("ideal")) os << detail::ideal_text(p["ideal"]) << '\n';
  } else if (cmd == "decompose") {
    if (p.contains("components")) {
      const auto& cs = p["components"];
      if (cs.empty() || (cs.size() == 1 && cs[0].empty())) os << "0 (zero ideal)\n";
      else
        for (const auto& c : cs) os << detail::component_text(c) << '\n';
    }
  } else if (cmd == "covers") {
    if (p.contains("covers"))
      for (const auto& c : p["covers"]) os << detail::cover_text(c) << '\n';
  } else if (cmd == "minimize") {
    if (p.contains("cover")) os << detail::cover_text(p["cover"]) << '\n';
  } else if (cmd == "unmixed") {
    if (p.contains("unmixed")) {
      os << (p["unmixed"].get<bool>() ? "unmixed" : "mixed") << '\n';
      os << "cardinalities:";
      for (const auto& c : p["cardinalities"]) os << ' ' << c.get<std::size_t>();
      os << '\n';
      for (const auto& w : p["witnesses"]) os << "witness: " << detail::cover_text(w) << '\n';
    }
  } else if (cmd == "classify") {
    if (p.contains("verdict")) {
      const auto& v = p["verdict"];
      const auto& cert = v["certificate"];
      os << "family: " << v["family"].get<std::string>() << '\n';
      os << "unmixed: " << (v["unmixed"].get<bool>() ? "yes" : "no") << '\n';
      os << "cohen_macaulay: " << v["cohen_macaulay"].get<std::string>() << '\n';
      os << "certificate: " << cert["description"].get<std::string>() << '\n';
      if (!cert["arrangement"].empty()) {
        os << "arrangement:";
        for (const auto& w : cert["arrangement"]) os << ' ' << w.get<Weight>();
        os << '\n';
      }
      if (!cert["suspension"].is_null()) {
        os << "suspension:";
        for (const auto& bw : cert["suspension"])
          os << ' ' << bw[0].get<std::string>() << '-' << bw[1].get<std::string>();
        os << '\n';
      }
      for (const auto& w : cert["witnesses"]) os << "witness: " << detail::cover_text(w) << '\n';
      os << "rationale: " << v["rationale"].get<std::string>() << '\n';
    }
  } else if (cmd == "primes") {
    if (p.contains("primes")) {
      os << p["kind"].get<std::string>() << " primes:\n";
      for (const auto& s : p["primes"]) os << detail::set_text(s) << '\n';
    }
  } else if (cmd == "verify") {
    if (p.contains("checks")) {
      for (const auto& c : p["checks"])
        os << c["name"].get<std::string>() << ": passed " << c["passed"].get<std::size_t>() << ", failed "
           << c["failed"].get<std::size_t>() << '\n';
      os << "graphs: " << p["graphs"].get<std::size_t>() << '\n';
      os << "result: " << (p["failed"].get<std::size_t>() == 0 ? "pass" : "fail") << '\n';
    }
  }
  if (!r.ok)
    for (const auto& d : r.diagnostics) os << "error: " << d << '\n';
  return os.str();
}

inline std::string render(const Report& r, Format format) {
  if (format == Format::json) return report_to_json(r).dump(2) + "\n";
  return render_text(r);
}

}  // namespace wei::cli
