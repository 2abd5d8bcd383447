#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "bramsey/coloring.hpp"
#include "bramsey/satbridge.hpp"
#include "bramsey/search.hpp"

namespace bramsey::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBad = 1;  // verified-bad colouring or table mismatch
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;

/// Spec fields from the command line; 0 means "not given".
struct SpecArgs {
  int m = 0;
  int n = 0;
  int a = 0;
  int s = 0;
};

/// Each command reports on `out`, diagnostics on `err`, and returns the exit
/// code. Library errors are caught and mapped to kExitUsage. An empty path
/// writes to `out`.
int cmd_construct(const std::string& name, const SpecArgs& args, const std::string& out_path,
                  std::ostream& out, std::ostream& err);

/// Accepts witness files and certificates. For witnesses, `overrides` may
/// retarget a and s and grow n (the added columns are blue).
int cmd_verify(const std::string& path, const SpecArgs& overrides, const std::string& cert_path,
               std::ostream& out, std::ostream& err);

int cmd_search(const ProblemSpec& spec, const Budget& budget, const RuleSet& rules,
               const std::string& cert_path, std::ostream& out, std::ostream& err);

int cmd_scan(int m, int a, int s, int n_lo, int n_hi, const Budget& budget, const RuleSet& rules,
             std::ostream& out, std::ostream& err);

int cmd_encode(const ProblemSpec& spec, EncodeMode mode, bool symmetry_breaking,
               const std::string& out_path, std::ostream& out, std::ostream& err);

/// Uses `solver_cmd` when given, otherwise BRAMSEY_SOLVER_CMD.
int cmd_cegar(const ProblemSpec& spec, const std::optional<std::string>& solver_cmd,
              const Budget& budget, const CegarOptions& opts, const std::string& cert_path,
              std::ostream& out, std::ostream& err);

int cmd_oracle(const ProblemSpec& spec, const std::string& cert_path, std::ostream& out,
               std::ostream& err);

int cmd_table(const std::string& family, const Budget& per_cell, const RuleSet& rules,
              std::ostream& out, std::ostream& err);

}  // namespace bramsey::cli
