#include <iostream>

#include <CLI11.hpp>

#include "howe_cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace howe::cli;
  CLI::App app{"Plane sextic models of genus-5 Howe curves"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Construct and analyze the sextic for one input");
  b->add_option("--field", build.field, "p=<prime> or rational")->required();
  b->add_option("--alpha", build.alpha, "a1,a2,a3,a4")->required();
  b->add_option("--beta", build.beta, "b1,b2,b3,b4")->required();
  b->add_flag("--json", build.json, "JSON output");
  b->add_flag("--timing", build.timing, "Include elapsed time");
  b->add_option("--seed", build.seed, "Seed for root finding");

  bool verify_json = false;
  auto* v = app.add_subcommand("verify-paper", "Check the seven built-in F_31 examples");
  v->add_flag("--json", verify_json, "JSON output");

  SampleArgs smp;
  auto* s = app.add_subcommand("sample", "Singularity type distribution over random inputs");
  s->add_option("--field", smp.field, "p=<prime> or rational")->required();
  s->add_option("--count", smp.count, "Number of samples")->required();
  s->add_option("--seed", smp.seed, "Base seed");
  s->add_option("--threads", smp.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  s->add_flag("--json", smp.json, "JSON output");

  ScanArgs scn;
  auto* c = app.add_subcommand("scan", "Compare located singular points with a brute-force scan");
  c->add_option("--field", scn.field, "p=<prime>")->required();
  c->add_option("--alpha", scn.alpha, "a1,a2,a3,a4")->required();
  c->add_option("--beta", scn.beta, "b1,b2,b3,b4")->required();
  c->add_option("--budget", scn.budget, "Maximum number of points to evaluate");
  c->add_option("--seed", scn.seed, "Seed for root finding");
  c->add_flag("--json", scn.json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  if (b->parsed()) return cmd_build(build, std::cout, std::cerr);
  if (v->parsed()) return cmd_verify_examples(reference_examples(), verify_json, std::cout);
  if (s->parsed()) return cmd_sample(smp, std::cout, std::cerr);
  if (c->parsed()) return cmd_scan(scn, std::cout, std::cerr);
  return 0;
}
