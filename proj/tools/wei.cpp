// wei: weighted edge ideals from the command line.
//
//   wei decompose graph.json --method covers --check
//   wei classify graph.json --family auto --format json
//   wei verify --random 500 --max-vertices 5 --max-weight 3 --seed 7

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wei/cli.hpp"

int main(int argc, char** argv) {
  using namespace wei::cli;

  CommandRequest req;
  std::string format = "text";
  std::size_t random_count = 0;

  CLI::App app{"Weighted edge ideals: decompositions, covers, and unmixed/Cohen-Macaulay classification"};
  app.require_subcommand(1);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto add = [&](const char* name, const char* help, bool input_required = true) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    auto* in = sub->add_option("input", req.input_path, "Graph JSON file, or - for standard input");
    if (input_required) in->required();
    return sub;
  };

  add("ideal", "Print the weighted edge ideal");
  add("radical", "Print the monomial radical of the weighted edge ideal");
  auto* decompose = add("decompose", "Irredundant m-irreducible decomposition");
  decompose->add_option("--method", req.options.method, "covers or split")->check(CLI::IsMember({"covers", "split"}));
  decompose->add_flag("--check", req.options.check, "Cross-check against the other method");
  add("covers", "List minimal weighted vertex covers");
  auto* minimize = add("minimize", "Minimize a weighted vertex cover");
  minimize->add_option("--cover", req.options.cover, "Cover as name:weight pairs, e.g. v1:2,v2:5")->required();
  add("unmixed", "Decide unmixedness by enumeration, with witnesses");
  auto* classify = add("classify", "Theorem-backed unmixed / Cohen-Macaulay verdict");
  classify->add_option("--family", req.options.family, "auto, cycle, complete, tree, suspension, or path")
      ->check(CLI::IsMember({"auto", "cycle", "complete", "tree", "suspension", "path"}));
  auto* primes = add("primes", "Associated (default) or minimal primes");
  auto* assoc = primes->add_flag("--assoc", req.options.assoc, "Associated primes");
  primes->add_flag("--minimal", req.options.minimal, "Minimal primes")->excludes(assoc);
  auto* verify = add("verify", "Cross-validate on the input graph or a random corpus", false);
  auto* rnd = verify->add_option("--random", random_count, "Number of random graphs");
  verify->add_option("--max-vertices", req.options.max_vertices, "Largest random graph")->needs(rnd);
  verify->add_option("--max-weight", req.options.max_weight, "Largest random weight")->needs(rnd);
  verify->add_option("--seed", req.options.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  for (auto* sub : app.get_subcommands()) req.command = sub->get_name();
  req.options.format = format == "json" ? Format::json : Format::text;
  if (verify->parsed() && rnd->count() > 0) req.options.random = random_count;
  if (verify->parsed() && rnd->count() == 0 && req.input_path.empty()) {
    std::cerr << "verify needs an input graph or --random N\n";
    return kExitUsage;
  }

  auto report = run(req);
  auto out = render(report, req.options.format);
  if (report.ok || req.options.format == Format::json) std::cout << out;
  else std::cerr << out;
  return report.exit_code;
}
