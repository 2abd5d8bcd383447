#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bramsey/coloring.hpp"
#include "bramsey/search.hpp"

namespace bramsey {

using Clause = std::vector<int>;

/// CNF over edge variables. Variable var(x, y) = x*n + y + 1 is true iff the
/// edge x_x y_y is red; ids above m*n are auxiliaries (symmetry breaking).
struct CnfDoc {
  ProblemSpec spec;
  int num_vars = 0;
  std::vector<Clause> clauses;

  int edge_vars() const { return spec.m * spec.n; }
  int var(int x, int y) const { return x * spec.n + y + 1; }
  /// Inverse of var(); only valid for 1 <= v <= edge_vars().
  std::pair<int, int> edge(int v) const { return {(v - 1) / spec.n, (v - 1) % spec.n}; }
};

enum class EncodeMode { Full, RedOnly };

struct EncodeOptions {
  /// Rows nonincreasing in lexicographic order (column 0 most significant).
  bool symmetry_breaking = false;
  std::uint64_t full_clause_cap = 10'000'000;
};

/// Red clauses: for every a-subset of X and a-subset of Y, not all a*a edges red.
/// Blue clauses (Full only): for every s-subset pair, at least one edge red.
/// Throws EncodingTooLarge when the Full clause count exceeds the cap.
CnfDoc encode_cnf(const ProblemSpec& spec, EncodeMode mode, const EncodeOptions& opts = {});

/// Clause forbidding the blue biclique xs x ys: at least one of its edges red.
Clause blocking_clause(const CnfDoc& doc, const std::vector<int>& xs, const std::vector<int>& ys);

void write_dimacs(std::ostream& out, const CnfDoc& doc);

/// `assignment` lists signed literals; every variable 1..num_vars must appear.
/// Errors: IncompleteModel, UnknownVariable.
Coloring decode_model(const CnfDoc& doc, const std::vector<int>& assignment,
                      const ProblemSpec& spec);

/// External solver reached through a file and its stdout.
struct SolverHarness {
  /// Shell command; "{cnf_path}" is replaced by the path of the DIMACS file.
  std::string command_template;
  /// 0 disables the limit. Enforced with coreutils `timeout`.
  double timeout_seconds = 0.0;
  /// Where the CNF and solver output files go; a fresh temp directory if empty.
  std::filesystem::path workdir;

  /// Reads BRAMSEY_SOLVER_CMD; nullopt when unset or empty.
  static std::optional<SolverHarness> from_env();
};

enum class SolverVerdict { Sat, Unsat };

struct SolverAnswer {
  SolverVerdict verdict = SolverVerdict::Unsat;
  std::vector<int> model;  // Sat only
};

/// Parses the "s ..." status line and "v ..." model lines; everything else is
/// ignored. Throws SolverFailure on a missing or unknown status line.
SolverAnswer parse_solver_output(std::string_view text);

/// Writes the CNF, runs the solver and parses its answer. Exit codes 0, 10 and
/// 20 are accepted; anything else is a SolverFailure.
SolverAnswer run_solver(const SolverHarness& harness, const CnfDoc& doc);

struct CegarOptions {
  /// Block every blue copy of the model per iteration instead of only the least
  /// one (disjoint column s-sets when a row subset leaves too many columns blue).
  bool batch = false;
  bool symmetry_breaking = true;
};

/// Lazy blue constraint: solve the red-only CNF, and while the model contains a
/// blue K_{s,s}, forbid that copy and solve again. stats.nodes counts solver
/// calls and stats.prunes["blocking_clauses"] the clauses added. The node
/// budget caps solver calls.
SearchOutcome cegar(const ProblemSpec& spec, const SolverHarness& harness,
                    const Budget& budget = {}, const CegarOptions& opts = {});

}  // namespace bramsey
