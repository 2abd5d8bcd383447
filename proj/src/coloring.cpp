#include "bramsey/coloring.hpp"

#include <sstream>

#include "bramsey/error.hpp"

namespace bramsey {

void ProblemSpec::validate() const {
  if (m < 1 || n < 1 || a < 1 || s < 1)
    throw Error(ErrorKind::InvalidSpec, "m, n, a, s must all be >= 1, got " + to_string());
  if (n > kYCapacity)
    throw Error(ErrorKind::CapacityExceeded,
                "n = " + std::to_string(n) + " exceeds capacity " + std::to_string(kYCapacity));
}

std::string ProblemSpec::to_string() const {
  std::ostringstream out;
  out << "(m=" << m << ", n=" << n << ", a=" << a << ", s=" << s << ")";
  return out.str();
}

Coloring::Coloring(int n, std::vector<YSet> rows) : n_(n), rows_(std::move(rows)) {
  if (n < 0 || n > kYCapacity)
    throw Error(ErrorKind::CapacityExceeded, "n = " + std::to_string(n));
  const YSet outside = YSet::prefix(n).complement(kYCapacity);
  for (const auto& r : rows_)
    if ((r & outside).any())
      throw Error(ErrorKind::IndexOutOfRange, "row has an element >= n = " + std::to_string(n));
}

Coloring Coloring::padded(int new_n) const {
  if (new_n < n_) throw Error(ErrorKind::SpecMismatch, "cannot shrink a colouring");
  return Coloring(new_n, rows_);
}

Coloring build_coloring(int m, int n, const std::vector<std::vector<int>>& rows) {
  if (n > kYCapacity)
    throw Error(ErrorKind::CapacityExceeded,
                "n = " + std::to_string(n) + " exceeds capacity " + std::to_string(kYCapacity));
  if (m < 0 || static_cast<std::size_t>(m) != rows.size())
    throw Error(ErrorKind::RowCountMismatch,
                "expected " + std::to_string(m) + " rows, got " + std::to_string(rows.size()));
  std::vector<YSet> sets(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int y : rows[i]) {
      if (y < 0 || y >= n)
        throw Error(ErrorKind::IndexOutOfRange, "row " + std::to_string(i) + " has index " +
                                                    std::to_string(y) + " outside [0, " +
                                                    std::to_string(n) + ")");
      sets[i].set(y);
    }
  }
  return Coloring(n, std::move(sets));
}

Coloring complement(const Coloring& c) {
  std::vector<YSet> rows;
  rows.reserve(static_cast<std::size_t>(c.m()));
  for (int i = 0; i < c.m(); ++i) rows.push_back(c.blue_row(i));
  return Coloring(c.n(), std::move(rows));
}

}  // namespace bramsey
