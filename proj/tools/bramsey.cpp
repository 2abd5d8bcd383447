// Command-line front end: construct | verify | search | scan | encode | cegar | oracle | table

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bramsey/commands.hpp"
#include "bramsey/error.hpp"

namespace {

using bramsey::cli::SpecArgs;

struct BudgetArgs {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
  int jobs = 1;

  bramsey::Budget budget() const {
    bramsey::Budget b;
    if (nodes > 0) b.max_nodes = nodes;
    if (seconds > 0.0) b.max_seconds = seconds;
    b.parallel_width = jobs;
    return b;
  }
};

void add_spec(CLI::App* app, SpecArgs& spec, bool required) {
  for (auto [flag, field, what] : {std::tuple{"--m", &spec.m, "rows (X side)"},
                                   std::tuple{"--n", &spec.n, "columns (Y side)"},
                                   std::tuple{"--a", &spec.a, "red target K_{a,a}"},
                                   std::tuple{"--s", &spec.s, "blue target K_{s,s}"}}) {
    auto* opt = app->add_option(flag, *field, what)->check(CLI::PositiveNumber);
    if (required) opt->required();
  }
}

void add_budget(CLI::App* app, BudgetArgs& b) {
  app->add_option("--budget-nodes", b.nodes, "node (or solver call) limit; 0 = none");
  app->add_option("--budget-seconds", b.seconds, "wall-clock limit; 0 = none");
  app->add_option("--jobs", b.jobs, "parallel workers")->check(CLI::PositiveNumber);
}

bramsey::ProblemSpec to_spec(const SpecArgs& a) { return {a.m, a.n, a.a, a.s}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite Ramsey arrowing K_{m,n} -> (K_{a,a}, K_{s,s}): verifier, search and SAT bridge"};
  app.require_subcommand(1);

  SpecArgs spec;
  BudgetArgs budget;
  std::string out_path;
  std::string rules_text = "all";
  std::string name;
  std::string path;
  std::string mode = "full";
  std::string solver;
  std::string family;
  bool symmetry = false;
  bool batch = false;
  int n_lo = 1;
  int n_hi = 0;

  auto* construct = app.add_subcommand("construct", "write a bundled colouring as a witness file");
  construct->add_option("name", name, "star | a7x56 | b8x44")->required();
  add_spec(construct, spec, false);
  construct->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "check a witness file or certificate");
  verify->add_option("file", path)->required();
  add_spec(verify, spec, false);
  verify->add_option("--out", out_path, "write a certificate when the colouring is good");

  auto* search = app.add_subcommand("search", "decide arrowing by pruned exhaustive search");
  add_spec(search, spec, true);
  add_budget(search, budget);
  search->add_option("--rules", rules_text, "max_degree,union_lookahead | all | none");
  search->add_option("--out", out_path, "certificate file");

  auto* scan = app.add_subcommand("scan", "search n = n_lo..n_hi and infer BR_m");
  scan->add_option("--m", spec.m)->required()->check(CLI::PositiveNumber);
  scan->add_option("--a", spec.a)->check(CLI::PositiveNumber);
  scan->add_option("--s", spec.s)->required()->check(CLI::PositiveNumber);
  scan->add_option("--n-lo", n_lo)->check(CLI::PositiveNumber);
  scan->add_option("--n-hi", n_hi)->required()->check(CLI::PositiveNumber);
  add_budget(scan, budget);
  scan->add_option("--rules", rules_text);

  auto* encode = app.add_subcommand("encode", "write the DIMACS CNF of the arrowing question");
  add_spec(encode, spec, true);
  encode->add_option("--mode", mode, "full | red_only")->check(CLI::IsMember({"full", "red_only"}));
  encode->add_flag("--symmetry", symmetry, "add lexicographic row-ordering clauses");
  encode->add_option("--out", out_path, "output file (default stdout)");

  auto* cegar = app.add_subcommand("cegar", "lazy blue constraints around an external SAT solver");
  add_spec(cegar, spec, true);
  add_budget(cegar, budget);
  cegar->add_option("--solver", solver, "command template with {cnf_path}; default $BRAMSEY_SOLVER_CMD");
  cegar->add_flag("--batch", batch, "block every violating s-subset per iteration");
  cegar->add_option("--out", out_path, "certificate file");

  auto* oracle = app.add_subcommand("oracle", "enumerate every colouring (m*n <= 24)");
  add_spec(oracle, spec, true);
  oracle->add_option("--out", out_path, "certificate file");

  auto* table = app.add_subcommand("table", "compare computed BR_m values with the known ones");
  table->add_option("family", family, "k22_k33 | k22_k55 | k22_k66")->required();
  add_budget(table, budget);
  table->add_option("--rules", rules_text);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : bramsey::cli::kExitUsage;
  }

  std::ostream& out = std::cout;
  std::ostream& err = std::cerr;
  bramsey::RuleSet rules;
  try {
    rules = bramsey::RuleSet::parse(rules_text);
  } catch (const bramsey::Error& e) {
    err << "error: " << e.what() << '\n';
    return bramsey::cli::kExitUsage;
  }

  if (*construct) return bramsey::cli::cmd_construct(name, spec, out_path, out, err);
  if (*verify) return bramsey::cli::cmd_verify(path, spec, out_path, out, err);
  if (*search) return bramsey::cli::cmd_search(to_spec(spec), budget.budget(), rules, out_path, out, err);
  if (*scan)
    return bramsey::cli::cmd_scan(spec.m, spec.a ? spec.a : 2, spec.s, n_lo, n_hi, budget.budget(),
                                  rules, out, err);
  if (*encode)
    return bramsey::cli::cmd_encode(to_spec(spec),
                                    mode == "full" ? bramsey::EncodeMode::Full : bramsey::EncodeMode::RedOnly,
                                    symmetry, out_path, out, err);
  if (*cegar) {
    bramsey::CegarOptions opts;
    opts.batch = batch;
    std::optional<std::string> cmd;
    if (!solver.empty()) cmd = solver;
    return bramsey::cli::cmd_cegar(to_spec(spec), cmd, budget.budget(), opts, out_path, out, err);
  }
  if (*oracle) return bramsey::cli::cmd_oracle(to_spec(spec), out_path, out, err);
  if (*table) {
    BudgetArgs per_cell = budget;
    if (per_cell.seconds <= 0.0 && per_cell.nodes == 0) per_cell.seconds = 10.0;
    return bramsey::cli::cmd_table(family, per_cell.budget(), rules, out, err);
  }
  return bramsey::cli::kExitUsage;
}
