#include <CLI11.hpp>

#include <iostream>

#include "wres/cli.hpp"

using namespace wres;

int main(int argc, char** argv) {
  CLI::App app{"Boundary term calculator for spectral Wres functionals"};
  app.require_subcommand(1);

  cli::RunConfig rc;
  int dim = 0;
  std::string phi, psi, format = "text", suite = "paper";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--dim", dim, "manifold dimension")->check(CLI::IsMember({3, 4, 6}));
    sub->add_option("--p1", rc.p1, "power of the first inverse");
    sub->add_option("--p2", rc.p2, "power of the second inverse");
    sub->add_option("--phi-prime", phi, "exact value p/q for phi'(0)");
    sub->add_option("--psi-prime", psi, "exact value p/q for psi'(0)");
    sub->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--suite", suite)->check(CLI::IsMember({"paper", "internal", "all"}));
    sub->add_option("--seed", rc.seed);
    sub->add_option("--trials", rc.trials);
    sub->add_option("--tol", rc.tol);
  };
  CLI::App* compute = app.add_subcommand("compute", "case values and totals for one configuration");
  CLI::App* cases = app.add_subcommand("cases", "enumerate the cases of one configuration");
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  CLI::App* oracle = app.add_subcommand("oracle", "numeric arbitration of every case");
  for (CLI::App* s : {compute, cases, verify, oracle}) add_common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (compute->parsed()) rc.command = cli::Command::compute;
  if (cases->parsed()) rc.command = cli::Command::cases;
  if (verify->parsed()) rc.command = cli::Command::verify;
  if (oracle->parsed()) rc.command = cli::Command::oracle;
  if (dim) rc.n = dim;
  rc.format = format == "json" ? cli::Format::json : cli::Format::text;
  rc.suite = suite == "internal" ? cli::Suite::internal : suite == "all" ? cli::Suite::all : cli::Suite::paper;
  try {
    if (!phi.empty()) rc.a = parse_rational(phi);
    if (!psi.empty()) rc.b = parse_rational(psi);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return cli::run(rc, std::cout, std::cerr);
}
