#pragma once

#include <optional>
#include <vector>

#include "bramsey/coloring.hpp"

namespace bramsey {

/// A complete bipartite subgraph: every (x, y) with x in xs and y in ys.
struct Biclique {
  std::vector<int> xs;
  std::vector<int> ys;

  friend bool operator==(const Biclique&, const Biclique&) = default;
};

struct MinUnion {
  int k = 0;
  int value = 0;
  std::vector<int> subset;
};

struct VerifyReport {
  std::optional<Biclique> red_copy;
  std::optional<Biclique> blue_copy;
  /// pairwise[i][j] = |rows[i] ∩ rows[j]|; the diagonal holds the degrees.
  std::vector<std::vector<int>> pairwise;
  /// At k = s; absent when s > m.
  std::optional<MinUnion> min_union;
  int max_red_degree = 0;

  bool good() const { return !red_copy && !blue_copy; }
};

/// Red K_{a,b}: a rows of X whose red neighbourhoods share at least b columns.
/// The first such a-subset in lexicographic order is returned together with
/// the b smallest shared columns.
std::optional<Biclique> find_red_K(const Coloring& c, int a, int b);

/// Blue K_{s,t}: an s-subset of X leaving at least t columns uncovered by red.
/// Returns the lexicographically least subset and its t smallest uncovered columns.
std::optional<Biclique> find_blue_K(const Coloring& c, int s, int t);

/// Minimum over k-subsets of X of the size of the red-neighbourhood union.
/// Ties go to the lexicographically least subset. Throws BadK unless 1 <= k <= m.
MinUnion min_union(const Coloring& c, int k);

/// Throws SpecMismatch if the colouring's shape differs from the spec.
VerifyReport verify(const Coloring& c, const ProblemSpec& spec);

}  // namespace bramsey
