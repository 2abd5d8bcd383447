#include "bramsey/detect.hpp"

#include <algorithm>

#include "bramsey/error.hpp"

namespace bramsey {
namespace {

// Depth-first over a-subsets of rows in lexicographic order, carrying the
// running intersection. A branch dies once fewer than b common columns remain.
bool red_dfs(const Coloring& c, int a, int b, int start, const YSet& common,
             std::vector<int>& chosen) {
  if (static_cast<int>(chosen.size()) == a) return true;
  const int need = a - static_cast<int>(chosen.size());
  for (int i = start; i <= c.m() - need; ++i) {
    const YSet next = common & c.row(i);
    if (next.count() < b) continue;
    chosen.push_back(i);
    if (red_dfs(c, a, b, i + 1, next, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

bool blue_dfs(const Coloring& c, int s, int t, int start, const YSet& uncovered,
              std::vector<int>& chosen) {
  if (static_cast<int>(chosen.size()) == s) return true;
  const int need = s - static_cast<int>(chosen.size());
  for (int i = start; i <= c.m() - need; ++i) {
    const YSet next = uncovered & c.blue_row(i);
    if (next.count() < t) continue;
    chosen.push_back(i);
    if (blue_dfs(c, s, t, i + 1, next, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

void min_union_dfs(const Coloring& c, int k, int start, const YSet& acc, std::vector<int>& chosen,
                   MinUnion& best) {
  const int size = acc.count();
  if (size >= best.value) return;
  if (static_cast<int>(chosen.size()) == k) {
    best.value = size;
    best.subset = chosen;
    return;
  }
  const int need = k - static_cast<int>(chosen.size());
  for (int i = start; i <= c.m() - need; ++i) {
    chosen.push_back(i);
    min_union_dfs(c, k, i + 1, acc | c.row(i), chosen, best);
    chosen.pop_back();
  }
}

}  // namespace

std::optional<Biclique> find_red_K(const Coloring& c, int a, int b) {
  if (a < 1 || b < 1 || a > c.m() || b > c.n()) return std::nullopt;
  std::vector<int> chosen;
  if (!red_dfs(c, a, b, 0, YSet::prefix(c.n()), chosen)) return std::nullopt;
  YSet common = YSet::prefix(c.n());
  for (int i : chosen) common &= c.row(i);
  return Biclique{chosen, common.first(b).indices()};
}

std::optional<Biclique> find_blue_K(const Coloring& c, int s, int t) {
  if (s < 1 || t < 1 || s > c.m() || t > c.n()) return std::nullopt;
  std::vector<int> chosen;
  if (!blue_dfs(c, s, t, 0, YSet::prefix(c.n()), chosen)) return std::nullopt;
  YSet uncovered = YSet::prefix(c.n());
  for (int i : chosen) uncovered &= c.blue_row(i);
  return Biclique{chosen, uncovered.first(t).indices()};
}

MinUnion min_union(const Coloring& c, int k) {
  if (k < 1 || k > c.m())
    throw Error(ErrorKind::BadK,
                "k = " + std::to_string(k) + " outside [1, " + std::to_string(c.m()) + "]");
  MinUnion best{k, c.n() + 1, {}};
  std::vector<int> chosen;
  min_union_dfs(c, k, 0, YSet{}, chosen, best);
  return best;
}

VerifyReport verify(const Coloring& c, const ProblemSpec& spec) {
  spec.validate();
  if (c.m() != spec.m || c.n() != spec.n)
    throw Error(ErrorKind::SpecMismatch, "colouring is " + std::to_string(c.m()) + "x" +
                                             std::to_string(c.n()) + ", spec is " +
                                             spec.to_string());
  VerifyReport report;
  report.red_copy = find_red_K(c, spec.a, spec.a);
  report.blue_copy = find_blue_K(c, spec.s, spec.s);
  const auto m = static_cast<std::size_t>(c.m());
  report.pairwise.assign(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const int v = c.row(static_cast<int>(i)).intersection_count(c.row(static_cast<int>(j)));
      report.pairwise[i][j] = v;
      report.pairwise[j][i] = v;
    }
    report.max_red_degree = std::max(report.max_red_degree, c.degree(static_cast<int>(i)));
  }
  if (spec.s <= c.m()) report.min_union = min_union(c, spec.s);
  return report;
}

}  // namespace bramsey
