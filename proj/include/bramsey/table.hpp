#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bramsey/search.hpp"

namespace bramsey {

/// Known BR_m(K_{2,2}, K_{s,s}) values by m; nullopt means the number does not exist.
struct Family {
  std::string name;
  int s = 0;
  std::vector<std::pair<int, std::optional<int>>> values;
};

/// "k22_k33", "k22_k55" or "k22_k66"; nullopt otherwise.
std::optional<Family> find_family(std::string_view name);
std::vector<std::string> family_names();

enum class CellStatus { Match, Mismatch, Inconclusive };
std::string_view to_string(CellStatus s) noexcept;

struct TableCell {
  int n = 0;
  ArrowStatus expected = ArrowStatus::Inconclusive;
  ArrowStatus computed = ArrowStatus::Inconclusive;
  /// "star", "witness a7x56", "dfs (1234 nodes)", ...
  std::string evidence;
  CellStatus status = CellStatus::Inconclusive;
};

/// For a value v: a NotArrow cell at n = v - 1 and an Arrow cell at n = v.
/// For a missing value: one NotArrow cell backed by the star colouring.
struct TableRow {
  int m = 0;
  std::optional<int> known_value;
  std::vector<TableCell> cells;

  CellStatus status() const;
};

/// Bundled witnesses settle matching cells; everything else goes through
/// decide_arrow with the per-cell budget.
std::vector<TableRow> reproduction_table(const Family& family, const Budget& per_cell,
                                         const RuleSet& rules = {});

void print_table(std::ostream& out, const Family& family, const std::vector<TableRow>& rows);

}  // namespace bramsey
