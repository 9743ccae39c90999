#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "chipfire/cli.hpp"

int main(int argc, char** argv) {
  using chipfire::cli::CommandRequest;
  using chipfire::cli::Format;

  CLI::App app{"Chip-firing on weighted graphs"};
  app.require_subcommand(1, 1);

  CommandRequest request;
  std::string format = "json";
  std::string d, q, a, d1, d2;

  struct Spec {
    const char* name;
    const char* help;
    bool divisor, q, action, pair;
    bool divisor_optional = false;
  };
  const Spec specs[] = {
      {"winnable", "decide winnability of a divisor", true, false, false, false},
      {"reduce", "q-reduce a divisor", true, true, false, false},
      {"burn", "run one round of the burning algorithm", true, true, false, false},
      {"equiv", "linear equivalence of two divisors", false, false, false, true},
      {"jacobian", "invariant factors of the Jacobian", false, false, false, false},
      {"quotient", "quotient graph under a group action", true, false, true, false, true},
      {"words", "list words starting at q and their divisors", false, true, false, false},
      {"maxunwin", "maximally unwinnable census and pairing report", false, true, false, false},
      {"laplacian", "weighted Laplacian matrix", false, false, false, false},
  };

  std::map<CLI::App*, std::string> names;
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    names[sub] = s.name;
    sub->add_option("--graph", request.graph, "graph JSON file")->required();
    sub->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    if (s.divisor) {
      auto* opt = sub->add_option("--divisor", d, "divisor JSON file");
      if (!s.divisor_optional) opt->required();
    }
    if (s.q) sub->add_option("--q", q, "vertex id")->required();
    if (s.action) sub->add_option("--action", a, "group action JSON file")->required();
    if (s.pair) {
      sub->add_option("--d1", d1, "first divisor JSON file")->required();
      sub->add_option("--d2", d2, "second divisor JSON file")->required();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every other parse failure is a usage error
    return app.exit(e) == 0 ? 0 : chipfire::cli::kUsage;
  }

  for (const auto& [sub, name] : names) {
    if (sub->parsed()) request.command = name;
  }
  request.format = format == "dot" ? Format::Dot : Format::Json;
  if (!d.empty()) request.divisor = d;
  if (!q.empty()) request.q = q;
  if (!a.empty()) request.action = a;
  if (!d1.empty()) request.d1 = d1;
  if (!d2.empty()) request.d2 = d2;

  return chipfire::cli::run(request, std::cout, std::cerr);
}
