#pragma once

#include <span>
#include <string>
#include <vector>

#include "bramsey/yset.hpp"

namespace bramsey {

/// "Does K_{m,n} arrow (K_{a,a}, K_{s,s})?"  Red target K_{a,a}, blue target K_{s,s}.
struct ProblemSpec {
  int m = 1;
  int n = 1;
  int a = 2;
  int s = 2;

  /// Throws InvalidSpec for non-positive fields and CapacityExceeded for n > 512.
  void validate() const;

  std::string to_string() const;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// A red/blue colouring of K_{m,n}: rows[i] is the red neighbourhood of x_i.
/// Blue is the complement within [0, n) and is never stored.
class Coloring {
 public:
  /// Rows are taken as-is after a capacity and range check.
  Coloring(int n, std::vector<YSet> rows);

  int m() const { return static_cast<int>(rows_.size()); }
  int n() const { return n_; }

  std::span<const YSet> rows() const { return rows_; }
  const YSet& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  YSet blue_row(int i) const { return row(i).complement(n_); }
  int degree(int i) const { return row(i).count(); }
  bool is_red(int x, int y) const { return row(x).test(y); }

  /// Same red edges, n grown to new_n; the added columns are all blue.
  Coloring padded(int new_n) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  int n_;
  std::vector<YSet> rows_;
};

/// Validating constructor from 0-based index lists.
/// Errors: CapacityExceeded (n > 512), RowCountMismatch, IndexOutOfRange.
Coloring build_coloring(int m, int n, const std::vector<std::vector<int>>& rows);

/// Swap red and blue.
Coloring complement(const Coloring& c);

}  // namespace bramsey
