#include "bramsey/table.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "bramsey/constructions.hpp"
#include "bramsey/detect.hpp"

namespace bramsey {
namespace {

// Representative n for the star cell; the star is good for every n once m <= s.
constexpr int kStarColumns = 100;

CellStatus compare(ArrowStatus expected, ArrowStatus computed) {
  if (computed == ArrowStatus::Inconclusive) return CellStatus::Inconclusive;
  return computed == expected ? CellStatus::Match : CellStatus::Mismatch;
}

TableCell star_cell(int m, int s) {
  TableCell cell;
  cell.n = kStarColumns;
  cell.expected = ArrowStatus::NotArrow;
  const ProblemSpec spec{m, kStarColumns, 2, s};
  const bool good = verify(star_witness(m, kStarColumns), spec).good();
  // A failing star proves nothing either way.
  cell.computed = good ? ArrowStatus::NotArrow : ArrowStatus::Inconclusive;
  cell.evidence = good ? "star" : "star (not good)";
  cell.status = compare(cell.expected, cell.computed);
  return cell;
}

TableCell search_cell(const ProblemSpec& spec, ArrowStatus expected, const Budget& budget,
                      const RuleSet& rules) {
  TableCell cell;
  cell.n = spec.n;
  cell.expected = expected;
  for (const auto& w : {witness_7_56(), witness_8_44()}) {
    if (w.spec == spec && claims_hold(w)) {
      cell.computed = ArrowStatus::NotArrow;
      cell.evidence = "witness " + w.name;
      cell.status = compare(expected, cell.computed);
      return cell;
    }
  }
  const SearchOutcome out = decide_arrow(spec, budget, rules);
  cell.computed = out.status;
  std::ostringstream ev;
  ev << "dfs (" << out.stats.nodes << " nodes)";
  cell.evidence = ev.str();
  cell.status = compare(expected, cell.computed);
  return cell;
}

}  // namespace

std::optional<Family> find_family(std::string_view name) {
  if (name == "k22_k33")
    return Family{"k22_k33", 3, {{2, {}}, {3, {}}, {4, 15}, {5, 12}, {6, 12}, {7, 9}, {8, 9}}};
  if (name == "k22_k55")
    return Family{"k22_k55", 5,
                  {{2, {}}, {3, {}}, {4, {}}, {5, {}}, {6, 40}, {7, 30}, {8, 30}}};
  if (name == "k22_k66")
    return Family{"k22_k66", 6,
                  {{2, {}}, {3, {}}, {4, {}}, {5, {}}, {6, {}}, {7, 57}, {8, 45}}};
  return std::nullopt;
}

std::vector<std::string> family_names() { return {"k22_k33", "k22_k55", "k22_k66"}; }

std::string_view to_string(CellStatus s) noexcept {
  switch (s) {
    case CellStatus::Match: return "match";
    case CellStatus::Mismatch: return "mismatch";
    case CellStatus::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

CellStatus TableRow::status() const {
  bool inconclusive = false;
  for (const auto& c : cells) {
    if (c.status == CellStatus::Mismatch) return CellStatus::Mismatch;
    if (c.status == CellStatus::Inconclusive) inconclusive = true;
  }
  return inconclusive ? CellStatus::Inconclusive : CellStatus::Match;
}

std::vector<TableRow> reproduction_table(const Family& family, const Budget& per_cell,
                                         const RuleSet& rules) {
  std::vector<TableRow> rows;
  for (const auto& [m, value] : family.values) {
    TableRow row;
    row.m = m;
    row.known_value = value;
    if (!value) {
      row.cells.push_back(star_cell(m, family.s));
    } else {
      row.cells.push_back(
          search_cell(ProblemSpec{m, *value - 1, 2, family.s}, ArrowStatus::NotArrow, per_cell, rules));
      row.cells.push_back(
          search_cell(ProblemSpec{m, *value, 2, family.s}, ArrowStatus::Arrow, per_cell, rules));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_table(std::ostream& out, const Family& family, const std::vector<TableRow>& rows) {
  out << "BR_m(K_{2,2}, K_{" << family.s << "," << family.s << "})  [" << family.name << "]\n";
  out << std::left << std::setw(4) << "m" << std::setw(10) << "expected" << std::setw(6) << "n"
      << std::setw(14) << "want" << std::setw(14) << "got" << std::setw(14) << "status"
      << "evidence\n";
  for (const auto& row : rows) {
    const std::string expected = row.known_value ? std::to_string(*row.known_value) : "none";
    for (std::size_t i = 0; i < row.cells.size(); ++i) {
      const auto& c = row.cells[i];
      out << std::setw(4) << (i == 0 ? std::to_string(row.m) : "")
          << std::setw(10) << (i == 0 ? expected : "") << std::setw(6) << c.n << std::setw(14)
          << to_string(c.expected) << std::setw(14) << to_string(c.computed) << std::setw(14)
          << to_string(c.status) << c.evidence << '\n';
    }
  }
  out << std::right;
}

}  // namespace bramsey
