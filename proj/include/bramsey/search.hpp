#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bramsey/coloring.hpp"

namespace bramsey {

struct Budget {
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
  double max_seconds = std::numeric_limits<double>::infinity();
  int parallel_width = 1;

  void validate() const;
};

enum class ArrowStatus { Arrow, NotArrow, Inconclusive };

std::string_view to_string(ArrowStatus status) noexcept;
std::optional<ArrowStatus> parse_status(std::string_view text) noexcept;

struct SearchStats {
  std::uint64_t nodes = 0;
  /// Keyed by rule name ("max_degree", "union_lookahead", "partial_blue", ...).
  std::map<std::string, std::uint64_t> prunes;
  double elapsed_seconds = 0.0;
};

struct SearchOutcome {
  ArrowStatus status = ArrowStatus::Inconclusive;
  std::optional<Coloring> witness;  // NotArrow only
  SearchStats stats;
};

/// Optional pruning rules for the a = 2 search. The blue-forced check on the
/// already assigned rows ("partial_blue") always runs and is not listed here.
enum class PruneRule {
  /// A row of degree >= 2s forces a blue K_{s,s} once m >= s + 1.
  MaxDegree,
  /// Some (s-1) assigned rows cover at most n - s - cap columns, where cap is
  /// the largest degree a later row may take; any later row completes a blue K_{s,s}.
  UnionLookahead,
  /// The same bound for k < s-1 assigned rows joined by s-k later rows, each
  /// adding at most cap columns: union + (s-k)*cap <= n - s.
  FutureUnion,
  /// j <= min(m-s, 3) assigned rows covering at least (j+1)s columns: every row
  /// outside a superset of them meets the union at most j times, so the s rows
  /// outside that superset leave s columns blue.
  UnionCap,
};

std::string_view to_string(PruneRule rule) noexcept;

struct RuleSet {
  bool max_degree = true;
  bool union_lookahead = true;
  bool future_union = true;
  bool union_cap = true;

  bool enabled(PruneRule r) const {
    switch (r) {
      case PruneRule::MaxDegree: return max_degree;
      case PruneRule::UnionLookahead: return union_lookahead;
      case PruneRule::FutureUnion: return future_union;
      case PruneRule::UnionCap: return union_cap;
    }
    return false;
  }
  static RuleSet none() { return {false, false, false, false}; }
  /// Comma separated rule names, or "all" / "none". Throws ParseError.
  static RuleSet parse(std::string_view text);
};

/// Reported each time a rule cuts a branch. Soundness is relative to
/// completions in which rows after `rows` have degree at most `future_degree_cap`
/// and, when `pending_degree` is set, the next row has exactly that degree.
struct PruneEvent {
  std::string_view rule;
  std::span<const YSet> rows;
  std::optional<int> pending_degree;
  int future_degree_cap = 0;
};

using PruneObserver = std::function<void(const PruneEvent&)>;

/// Decides K_{m,n} -> (K_{2,2}, K_{s,s}) by depth-first search over red graphs
/// whose rows pairwise meet in at most one column. Rows are assigned with
/// nonincreasing degree, fresh columns always take the lowest unused labels,
/// and each reused column is the lowest member of its row-membership class.
///
/// a = 1 is answered directly (the only red-K_{1,1}-free colouring is all blue).
/// Throws UnsupportedRedTarget for a >= 3 and CapacityExceeded for m > 16.
///
/// The observer, when given, is called from the worker threads; with
/// parallel_width > 1 it must be thread-safe.
SearchOutcome decide_arrow(const ProblemSpec& spec, const Budget& budget = {},
                           const RuleSet& rules = {}, const PruneObserver& observer = {});

inline constexpr int kMaxSearchRows = 16;

struct ScanEntry {
  int n = 0;
  SearchOutcome outcome;
};

/// BR_m lies in [lower_bound, upper_bound]; `value` is set when both meet.
/// A missing upper bound means no Arrow was seen in the scanned range.
struct ScanResult {
  std::vector<ScanEntry> entries;
  std::optional<int> value;
  int lower_bound = 1;
  std::optional<int> upper_bound;
  /// False if a NotArrow was found after an Arrow, which would contradict
  /// monotonicity in n.
  bool monotone = true;
};

/// decide_arrow over n = n_lo .. n_hi ascending, with the budget applied per n.
ScanResult brm_scan(int m, int a, int s, int n_lo, int n_hi, const Budget& budget = {},
                    const RuleSet& rules = {});

}  // namespace bramsey
