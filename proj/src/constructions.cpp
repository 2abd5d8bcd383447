#include "bramsey/constructions.hpp"

#include <initializer_list>

#include "bramsey/detect.hpp"
#include "bramsey/error.hpp"

namespace bramsey {
namespace {

struct Closed {
  int lo;
  int hi;
};

// Row written the way it is printed: single 1-based indices and closed ranges.
std::vector<int> row(std::initializer_list<int> singles, std::initializer_list<Closed> ranges = {}) {
  std::vector<int> out;
  for (int y : singles) out.push_back(y - 1);
  for (auto r : ranges)
    for (int y = r.lo; y <= r.hi; ++y) out.push_back(y - 1);
  return out;
}

}  // namespace

Coloring star_witness(int m, int n) {
  ProblemSpec{m, n, 1, 1}.validate();
  std::vector<YSet> rows(static_cast<std::size_t>(m));
  rows[0] = YSet::prefix(n);
  return Coloring(n, std::move(rows));
}

NamedWitness witness_7_56() {
  // The second row is printed as {y1, y12, y11 ... y21}; read as {y1} plus y12..y21.
  const std::vector<std::vector<int>> rows = {
      row({}, {{1, 11}}),
      row({1}, {{12, 21}}),
      row({2, 12}, {{22, 30}}),
      row({3, 13, 22}, {{31, 38}}),
      row({4, 14, 23, 31, 39}, {{40, 45}}),
      row({5, 15, 24, 32, 39, 46}, {{47, 51}}),
      row({6, 16, 25, 33, 40, 46}, {{52, 56}}),
  };
  return NamedWitness{"a7x56", ProblemSpec{7, 56, 2, 6}, build_coloring(7, 56, rows),
                      WitnessClaims{1, 6, 51}};
}

NamedWitness witness_8_44() {
  const std::vector<std::vector<int>> rows = {
      row({}, {{1, 9}}),
      row({1}, {{10, 17}}),
      row({2, 10}, {{18, 24}}),
      row({3, 11, 18, 25, 26, 27, 28, 29, 30}),
      row({4, 12, 19, 25, 31, 32, 33, 34, 35}),
      row({5, 13, 20, 26, 31, 36, 37, 38, 39}),
      row({6, 14, 21, 27, 32, 36, 40, 41, 42}),
      row({7, 15, 22, 28, 33, 37, 40, 43, 44}),
  };
  return NamedWitness{"b8x44", ProblemSpec{8, 44, 2, 6}, build_coloring(8, 44, rows),
                      WitnessClaims{1, 6, 39}};
}

bool claims_hold(const NamedWitness& w) {
  const VerifyReport report = verify(w.coloring, w.spec);
  if (!report.good() || !report.min_union) return false;
  if (report.min_union->k != w.claims.min_union_k ||
      report.min_union->value != w.claims.min_union_value)
    return false;
  for (std::size_t i = 0; i < report.pairwise.size(); ++i)
    for (std::size_t j = 0; j < report.pairwise.size(); ++j)
      if (i != j && report.pairwise[i][j] != w.claims.pairwise) return false;
  return true;
}

}  // namespace bramsey
