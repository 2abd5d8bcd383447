#include "bramsey/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <thread>
#include <vector>

#include "bramsey/error.hpp"

namespace bramsey {
namespace {

using Row = std::uint32_t;

// Row-index bitmasks of all k-subsets of [0, m).
std::vector<std::uint32_t> subsets_of_size(int m, int k) {
  std::vector<std::uint32_t> out;
  if (k < 1 || k > m) return out;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask)
    if (std::popcount(mask) == k) out.push_back(mask);
  return out;
}

struct Checker {
  int m, n, a, s;
  Row full;
  std::vector<std::uint32_t> red_sets;
  std::vector<std::uint32_t> blue_sets;

  Checker(const ProblemSpec& spec)
      : m(spec.m),
        n(spec.n),
        a(spec.a),
        s(spec.s),
        full(n >= 32 ? ~Row{0} : ((Row{1} << n) - 1)),
        red_sets(a <= n ? subsets_of_size(m, a) : std::vector<std::uint32_t>{}),
        blue_sets(s <= n ? subsets_of_size(m, s) : std::vector<std::uint32_t>{}) {}

  // Only subsets inside `within` are considered (rows that are already fixed).
  bool has_red(const Row* rows, std::uint32_t within) const {
    for (auto set : red_sets) {
      if ((set & ~within) != 0) continue;
      Row common = full;
      for (auto bits = set; bits != 0; bits &= bits - 1) common &= rows[std::countr_zero(bits)];
      if (std::popcount(common) >= a) return true;
    }
    return false;
  }

  bool has_blue(const Row* rows, std::uint32_t within) const {
    for (auto set : blue_sets) {
      if ((set & ~within) != 0) continue;
      Row covered = 0;
      for (auto bits = set; bits != 0; bits &= bits - 1) covered |= rows[std::countr_zero(bits)];
      if (n - std::popcount(covered) >= s) return true;
    }
    return false;
  }

  bool good(const Row* rows) const {
    const std::uint32_t all = (1U << m) - 1;
    return !has_red(rows, all) && !has_blue(rows, all);
  }
};

struct Chunk {
  std::uint64_t count = 0;
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
};

Chunk scan_range(const Checker& ck, std::uint64_t lo, std::uint64_t hi) {
  Chunk out;
  Row rows[32] = {};
  const std::uint64_t row_mask = (std::uint64_t{1} << ck.n) - 1;
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    for (int x = 0; x < ck.m; ++x) rows[x] = static_cast<Row>((mask >> (x * ck.n)) & row_mask);
    if (ck.good(rows)) {
      if (out.count == 0) out.first = mask;
      ++out.count;
    }
  }
  return out;
}

bool extend(const Checker& ck, Row* rows, int x, std::optional<int> next_degree, int cap) {
  if (x == ck.m) return true;
  const std::uint32_t placed = (1U << (x + 1)) - 1;
  for (Row r = 0; r <= ck.full; ++r) {
    const int d = std::popcount(r);
    if (next_degree ? d != *next_degree : d > cap) continue;
    rows[x] = r;
    // Copies among placed rows survive every extension, so prune on them.
    if (!ck.has_red(rows, placed) && !ck.has_blue(rows, placed) &&
        extend(ck, rows, x + 1, std::nullopt, cap))
      return true;
    if (r == ck.full) break;
  }
  return false;
}

}  // namespace

OracleResult brute_force_arrow(const ProblemSpec& spec, unsigned threads) {
  spec.validate();
  if (spec.m * spec.n > kOracleMaxEdges)
    throw Error(ErrorKind::TooLarge, "brute force needs m*n <= " + std::to_string(kOracleMaxEdges) +
                                         ", got " + spec.to_string());
  const Checker ck(spec);
  const std::uint64_t total = std::uint64_t{1} << (spec.m * spec.n);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total >> 12)));

  std::vector<Chunk> chunks(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = total * t / threads;
    const std::uint64_t hi = total * (t + 1) / threads;
    pool.emplace_back([&, t, lo, hi] { chunks[t] = scan_range(ck, lo, hi); });
  }
  for (auto& th : pool) th.join();

  OracleResult result;
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
  for (const auto& c : chunks) {
    result.good_count += c.count;
    first = std::min(first, c.first);
  }
  result.arrows = result.good_count == 0;
  if (!result.arrows) {
    std::vector<YSet> rows(static_cast<std::size_t>(spec.m));
    for (int x = 0; x < spec.m; ++x)
      for (int y = 0; y < spec.n; ++y)
        if ((first >> (x * spec.n + y)) & 1U) rows[static_cast<std::size_t>(x)].set(y);
    result.example = Coloring(spec.n, std::move(rows));
  }
  return result;
}

bool has_good_completion(const ProblemSpec& spec, std::span<const YSet> fixed,
                         std::optional<int> next_degree, int degree_cap) {
  spec.validate();
  const int k = static_cast<int>(fixed.size());
  if (spec.n > 32 || spec.m > 24 || k > spec.m || (spec.m - k) * spec.n > kOracleMaxEdges)
    throw Error(ErrorKind::TooLarge, "completion enumeration too large for " + spec.to_string());
  const Checker ck(spec);
  Row rows[32] = {};
  for (int x = 0; x < k; ++x) {
    const YSet& r = fixed[static_cast<std::size_t>(x)];
    for (int y = 0; y < spec.n; ++y)
      if (r.test(y)) rows[x] |= Row{1} << y;
  }
  const std::uint32_t placed = k == 0 ? 0U : (1U << k) - 1;
  if (ck.has_red(rows, placed) || ck.has_blue(rows, placed)) return false;
  if (k == spec.m) return ck.good(rows);
  return extend(ck, rows, k, next_degree, degree_cap);
}

}  // namespace bramsey
