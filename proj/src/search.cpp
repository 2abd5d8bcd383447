#include "bramsey/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bramsey/detect.hpp"
#include "bramsey/error.hpp"

namespace bramsey {

void Budget::validate() const {
  if (max_nodes < 1 || !(max_seconds > 0.0) || parallel_width < 1)
    throw Error(ErrorKind::InvalidSpec, "budget fields must all be >= 1");
}

std::string_view to_string(ArrowStatus status) noexcept {
  switch (status) {
    case ArrowStatus::Arrow: return "Arrow";
    case ArrowStatus::NotArrow: return "NotArrow";
    case ArrowStatus::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::optional<ArrowStatus> parse_status(std::string_view text) noexcept {
  if (text == "Arrow") return ArrowStatus::Arrow;
  if (text == "NotArrow") return ArrowStatus::NotArrow;
  if (text == "Inconclusive") return ArrowStatus::Inconclusive;
  return std::nullopt;
}

std::string_view to_string(PruneRule rule) noexcept {
  switch (rule) {
    case PruneRule::MaxDegree: return "max_degree";
    case PruneRule::UnionLookahead: return "union_lookahead";
    case PruneRule::FutureUnion: return "future_union";
    case PruneRule::UnionCap: return "union_cap";
  }
  return "?";
}

RuleSet RuleSet::parse(std::string_view text) {
  if (text == "all") return {};
  RuleSet out = none();
  if (text == "none" || text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view name = text.substr(pos, comma - pos);
    if (name == to_string(PruneRule::MaxDegree)) {
      out.max_degree = true;
    } else if (name == to_string(PruneRule::UnionLookahead)) {
      out.union_lookahead = true;
    } else if (name == to_string(PruneRule::FutureUnion)) {
      out.future_union = true;
    } else if (name == to_string(PruneRule::UnionCap)) {
      out.union_cap = true;
    } else {
      throw Error(ErrorKind::ParseError, "unknown rule '" + std::string(name) + "'");
    }
    pos = comma + 1;
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::string_view kPartialBlue = "partial_blue";
constexpr int kUnbounded = std::numeric_limits<int>::max();

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// State shared by all workers of one decide_arrow call.
struct Control {
  Budget budget;
  Clock::time_point start = Clock::now();
  std::atomic<bool> stop{false};
  std::atomic<bool> exhausted{false};
  std::atomic<std::uint64_t> nodes{0};  // flushed in batches by workers
  std::mutex witness_mutex;
  std::optional<std::pair<std::size_t, Coloring>> witness;  // (task index, colouring)
};

struct Counters {
  std::uint64_t nodes = 0;
  std::uint64_t max_degree = 0;
  std::uint64_t union_lookahead = 0;
  std::uint64_t future_union = 0;
  std::uint64_t union_cap = 0;
  std::uint64_t partial_blue = 0;

  void add(const Counters& o) {
    nodes += o.nodes;
    max_degree += o.max_degree;
    union_lookahead += o.union_lookahead;
    future_union += o.future_union;
    union_cap += o.union_cap;
    partial_blue += o.partial_blue;
  }
};

template <int W>
class Dfs {
 public:
  using Set = BasicYSet<W>;

  Dfs(const ProblemSpec& spec, const RuleSet& rules, const PruneObserver& observer, Control& ctl)
      : m_(spec.m),
        n_(spec.n),
        s_(spec.s),
        rules_(rules),
        observer_(observer),
        ctl_(ctl),
        degree_rule_applies_(rules.max_degree && spec.m >= spec.s + 1),
        cap_rows_(rules.union_cap ? std::min(spec.m - spec.s, 3) : 0),
        rows_(static_cast<std::size_t>(m_)),
        deg_(static_cast<std::size_t>(m_), 0),
        used_(static_cast<std::size_t>(m_) + 1, 0),
        kmin_((static_cast<std::size_t>(m_) + 1) * static_cast<std::size_t>(s_), kUnbounded),
        reps_(static_cast<std::size_t>(m_)),
        rep_sig_(static_cast<std::size_t>(m_)),
        sig_(static_cast<std::size_t>(n_), 0),
        stamp_(std::size_t{1} << m_, 0) {
    for (int i = 0; i <= m_; ++i) kmin(i, 0) = 0;
  }

  /// Full search from the root. Returns true iff a good colouring was completed.
  bool run_root() { return branch(0); }

  /// Enumerate surviving prefixes of `depth` rows instead of descending further.
  /// Returns true if a complete good colouring turned up before that depth.
  bool collect(int depth, std::vector<std::vector<Set>>& out) {
    collect_depth_ = depth;
    collected_ = &out;
    const bool found = branch(0);
    collect_depth_ = -1;
    collected_ = nullptr;
    return found;
  }

  /// Resume below a prefix produced by collect(); the prefix is replayed without counting.
  bool run_from(const std::vector<Set>& prefix) {
    const int depth = static_cast<int>(prefix.size());
    for (int i = 0; i < depth; ++i) {
      rows_[idx(i)] = prefix[idx(i)];
      deg_[idx(i)] = prefix[idx(i)].count();
      used_[idx(i + 1)] = std::max(used_[idx(i)], prefix[idx(i)].highest() + 1);
      scan_subsets(i);
    }
    return branch(depth);
  }

  Coloring witness() const {
    std::vector<YSet> rows;
    rows.reserve(rows_.size());
    for (const auto& r : rows_) rows.push_back(r.template resized<YSet::kWords>());
    return Coloring(n_, std::move(rows));
  }

  const Counters& counters() const { return counters_; }

  void flush_nodes() {
    ctl_.nodes.fetch_add(unflushed_, std::memory_order_relaxed);
    unflushed_ = 0;
  }

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

  int& kmin(int rows, int k) { return kmin_[idx(rows) * idx(s_) + idx(k)]; }

  // With `rows` rows assigned and `future` more to come, each of degree at most
  // cap: the rule that proves a blue K_{s,s}, if any. A later row adds at most
  // cap columns to a k-row union, and at most one column from each other
  // assigned row besides the unused ones.
  std::optional<PruneRule> lookahead(int rows, int cap, int future) {
    const int unused = n_ - used_[idx(rows)];
    for (int k = s_ - 1; k >= 0 && future >= s_ - k; --k) {
      const PruneRule rule = k == s_ - 1 ? PruneRule::UnionLookahead : PruneRule::FutureUnion;
      if (!rules_.enabled(rule)) continue;
      const int f = s_ - k;
      const int gain = std::min(f * cap, f * (rows - k) + unused);
      if (kmin(rows, k) <= n_ - s_ - gain) return rule;
    }
    return std::nullopt;
  }

  void count(PruneRule rule) {
    ++(rule == PruneRule::UnionLookahead ? counters_.union_lookahead : counters_.future_union);
  }

  // Classes of already used columns by the set of rows containing them; only
  // the lowest column of each class may be reused by row i.
  void compute_reps(int i) {
    auto& reps = reps_[idx(i)];
    auto& sigs = rep_sig_[idx(i)];
    reps.clear();
    sigs.clear();
    const int used = used_[idx(i)];
    std::fill(sig_.begin(), sig_.begin() + used, 0U);
    for (int j = 0; j < i; ++j)
      rows_[idx(j)].for_each([&](int c) { sig_[idx(c)] |= 1U << j; });
    ++stamp_gen_;
    for (int c = 0; c < used; ++c) {
      const std::uint32_t sig = sig_[idx(c)];
      if (stamp_[sig] == stamp_gen_) continue;
      stamp_[sig] = stamp_gen_;
      reps.push_back(c);
      sigs.push_back(sig);
    }
  }

  bool branch(int i) {
    compute_reps(i);
    const int dmax = i == 0 ? n_ : deg_[idx(i - 1)];
    const int fresh = n_ - used_[idx(i)];
    const int max_old = std::min(static_cast<int>(reps_[idx(i)].size()), i);
    const int cover_cap = degree_cap(i);
    for (int d = dmax; d >= 0; --d) {
      if (ctl_.stop.load(std::memory_order_relaxed)) return false;
      if (degree_rule_applies_ && d >= 2 * s_) {
        ++counters_.max_degree;
        notify(to_string(PruneRule::MaxDegree), i, d, n_);
        continue;
      }
      if (d > cover_cap) {
        ++counters_.union_cap;
        notify(to_string(PruneRule::UnionCap), i, d, n_);
        continue;
      }
      if (d > max_old + fresh) continue;
      // Smaller degrees only shrink the bound, so the cut covers them too.
      if (const auto rule = lookahead(i, d, m_ - i)) {
        count(*rule);
        notify(to_string(*rule), i, std::nullopt, d);
        return false;
      }
      if (choose(i, d, 0, 0U, 0, Set{})) return true;
    }
    return false;
  }

  bool choose(int i, int d, std::size_t k, std::uint32_t hit, int count, const Set& acc) {
    const auto& reps = reps_[idx(i)];
    const auto& sigs = rep_sig_[idx(i)];
    const int fresh = n_ - used_[idx(i)];
    if (count == d || k == reps.size()) {
      if (d - count > fresh) return false;
      const int used = used_[idx(i)];
      return place(i, acc | Set::range(used, used + d - count), d);
    }
    if (count + static_cast<int>(reps.size() - k) + fresh < d) return false;
    if ((sigs[k] & hit) == 0) {
      Set with = acc;
      with.set(reps[k]);
      if (choose(i, d, k + 1, hit | sigs[k], count + 1, with)) return true;
      if (ctl_.stop.load(std::memory_order_relaxed)) return false;
    }
    return choose(i, d, k + 1, hit, count, acc);
  }

  bool over_budget() {
    const Budget& b = ctl_.budget;
    if (ctl_.stop.load(std::memory_order_relaxed)) return true;
    if (++unflushed_ >= 1024) flush_nodes();
    const std::uint64_t seen = ctl_.nodes.load(std::memory_order_relaxed) + unflushed_;
    bool out = seen > b.max_nodes;
    if (!out && (counters_.nodes & 1023U) == 0 && seconds_since(ctl_.start) > b.max_seconds)
      out = true;
    if (out) {
      ctl_.exhausted.store(true);
      ctl_.stop.store(true);
    }
    return out;
  }

  bool place(int i, const Set& row, int d) {
    if (over_budget()) return false;
    ++counters_.nodes;
    rows_[idx(i)] = row;
    deg_[idx(i)] = d;
    used_[idx(i + 1)] = std::max(used_[idx(i)], row.highest() + 1);

    if (scan_subsets(i)) {
      ++counters_.partial_blue;
      notify(kPartialBlue, i + 1, std::nullopt, n_);
      return false;
    }
    if (cap_rows_ > 0 && covers_too_much(i, 0, 1, rows_[idx(i)])) {
      ++counters_.union_cap;
      notify(to_string(PruneRule::UnionCap), i + 1, std::nullopt, n_);
      return false;
    }
    if (const auto rule = lookahead(i + 1, d, m_ - i - 1)) {
      count(*rule);
      notify(to_string(*rule), i + 1, std::nullopt, d);
      return false;
    }
    if (i + 1 == m_) return true;
    if (i + 1 == collect_depth_) {
      collected_->emplace_back(rows_.begin(), rows_.begin() + i + 1);
      return false;
    }
    return branch(i + 1);
  }

  // Visits subsets of rows 0..i-1 of size <= s-1, each joined with row i.
  // Returns true when some s-subset ending in row i is blue-forced (union <= n - s),
  // and records the smallest k-subset unions (k < s) for the lookahead rules.
  bool scan_subsets(int i) {
    for (int k = 0; k < s_; ++k) kmin(i + 1, k) = kmin(i, k);
    return subsets_from(i, 0, 0, rows_[idx(i)]);
  }

  bool subsets_from(int i, int start, int chosen, const Set& acc) {
    const int size = acc.count();
    // No check can fire on this union or any superset of it.
    if (size > n_ - s_) return false;
    if (chosen == s_ - 1) return true;
    int& best = kmin(i + 1, chosen + 1);
    best = std::min(best, size);
    for (int j = start; j < i; ++j)
      if (subsets_from(i, j + 1, chosen + 1, acc | rows_[idx(j)])) return true;
    return false;
  }

  // Whether a subset of rows 0..i-1 of size < cap_rows_, joined with row i,
  // reaches the union_cap threshold.
  bool covers_too_much(int i, int start, int j, const Set& acc) {
    if (acc.count() >= (j + 1) * s_) return true;
    if (j == cap_rows_) return false;
    for (int r = start; r < i; ++r)
      if (covers_too_much(i, r + 1, j + 1, acc | rows_[idx(r)])) return true;
    return false;
  }

  // Largest degree row i may take under union_cap: joined with a subset J of
  // rows 0..i-1 (|J| < cap_rows_) it adds at least d - |J| columns to U(J).
  int degree_cap(int i) {
    int cap = kUnbounded;
    if (cap_rows_ < 2) return cap;
    auto visit = [&](auto&& self, int start, int j, const Set& acc) -> void {
      if (j > 0) cap = std::min(cap, (j + 2) * s_ - 1 - acc.count() + j);
      if (j + 1 == cap_rows_) return;
      for (int r = start; r < i; ++r) self(self, r + 1, j + 1, acc | rows_[idx(r)]);
    };
    visit(visit, 0, 0, Set{});
    return cap;
  }

  void notify(std::string_view rule, int assigned, std::optional<int> pending, int cap) {
    if (!observer_) return;
    std::vector<YSet> rows;
    rows.reserve(idx(assigned));
    for (int j = 0; j < assigned; ++j) rows.push_back(rows_[idx(j)].template resized<YSet::kWords>());
    observer_(PruneEvent{rule, rows, pending, cap});
  }

  const int m_, n_, s_;
  const RuleSet rules_;
  const PruneObserver& observer_;
  Control& ctl_;
  const bool degree_rule_applies_;
  const int cap_rows_;  // largest j checked by union_cap; 0 when off

  std::vector<Set> rows_;
  std::vector<int> deg_;
  std::vector<int> used_;    // used_[i]: columns [0, used_[i]) appear in rows 0..i-1
  std::vector<int> kmin_;    // kmin(i, k): smallest union of k rows among rows 0..i-1
  std::vector<std::vector<int>> reps_;
  std::vector<std::vector<std::uint32_t>> rep_sig_;
  std::vector<std::uint32_t> sig_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t stamp_gen_ = 0;

  int collect_depth_ = -1;
  std::vector<std::vector<Set>>* collected_ = nullptr;

  Counters counters_;
  std::uint64_t unflushed_ = 0;
};

SearchStats to_stats(const Counters& c, double elapsed) {
  SearchStats stats;
  stats.nodes = c.nodes;
  stats.prunes[std::string(to_string(PruneRule::MaxDegree))] = c.max_degree;
  stats.prunes[std::string(to_string(PruneRule::UnionLookahead))] = c.union_lookahead;
  stats.prunes[std::string(to_string(PruneRule::FutureUnion))] = c.future_union;
  stats.prunes[std::string(to_string(PruneRule::UnionCap))] = c.union_cap;
  stats.prunes[std::string(kPartialBlue)] = c.partial_blue;
  stats.elapsed_seconds = elapsed;
  return stats;
}

// Workers own disjoint subtrees below the collected prefixes and pull them
// from a shared cursor.
constexpr int kSplitDepth = 2;

template <int W>
SearchOutcome run_search(const ProblemSpec& spec, const Budget& budget, const RuleSet& rules,
                         const PruneObserver& observer) {
  Control ctl;
  ctl.budget = budget;
  Counters total;
  bool found = false;

  if (budget.parallel_width == 1 || spec.m <= kSplitDepth) {
    Dfs<W> dfs(spec, rules, observer, ctl);
    found = dfs.run_root();
    total = dfs.counters();
    if (found) ctl.witness.emplace(0, dfs.witness());
  } else {
    std::vector<std::vector<BasicYSet<W>>> tasks;
    {
      Dfs<W> head(spec, rules, observer, ctl);
      found = head.collect(kSplitDepth, tasks);
      head.flush_nodes();
      total = head.counters();
      if (found) ctl.witness.emplace(0, head.witness());
    }
    if (!found && !ctl.stop.load()) {
      std::atomic<std::size_t> cursor{0};
      std::mutex merge;
      const int width = std::min<int>(budget.parallel_width, static_cast<int>(tasks.size()));
      std::vector<std::thread> workers;
      for (int w = 0; w < width; ++w) {
        workers.emplace_back([&] {
          Counters mine;
          while (!ctl.stop.load()) {
            const std::size_t t = cursor.fetch_add(1);
            if (t >= tasks.size()) break;
            Dfs<W> dfs(spec, rules, observer, ctl);
            const bool hit = dfs.run_from(tasks[t]);
            dfs.flush_nodes();
            mine.add(dfs.counters());
            if (hit) {
              std::lock_guard lock(ctl.witness_mutex);
              if (!ctl.witness || ctl.witness->first > t) ctl.witness.emplace(t, dfs.witness());
              ctl.stop.store(true);
            }
          }
          std::lock_guard lock(merge);
          total.add(mine);
        });
      }
      for (auto& t : workers) t.join();
      found = ctl.witness.has_value();
    }
  }

  SearchOutcome out;
  out.stats = to_stats(total, seconds_since(ctl.start));
  if (found) {
    out.status = ArrowStatus::NotArrow;
    out.witness = std::move(ctl.witness->second);
    if (!verify(*out.witness, spec).good())
      throw std::logic_error("search produced a colouring that fails verification");
  } else {
    out.status = ctl.exhausted.load() ? ArrowStatus::Inconclusive : ArrowStatus::Arrow;
  }
  return out;
}

}  // namespace

SearchOutcome decide_arrow(const ProblemSpec& spec, const Budget& budget, const RuleSet& rules,
                           const PruneObserver& observer) {
  spec.validate();
  budget.validate();
  if (spec.a >= 3)
    throw Error(ErrorKind::UnsupportedRedTarget,
                "the search handles a = 2 only (got a = " + std::to_string(spec.a) +
                    "); use the CNF encoding instead");
  if (spec.m > kMaxSearchRows)
    throw Error(ErrorKind::CapacityExceeded,
                "search supports m <= " + std::to_string(kMaxSearchRows));

  if (spec.a == 1) {
    // No red edge may exist, so everything hinges on the all-blue colouring.
    const auto t0 = Clock::now();
    SearchOutcome out;
    out.stats = to_stats(Counters{1, 0, 0, 0}, 0.0);
    if (spec.m >= spec.s && spec.n >= spec.s) {
      out.status = ArrowStatus::Arrow;
    } else {
      out.status = ArrowStatus::NotArrow;
      out.witness = Coloring(spec.n, std::vector<YSet>(static_cast<std::size_t>(spec.m)));
    }
    out.stats.elapsed_seconds = seconds_since(t0);
    return out;
  }

  if (spec.n <= 64) return run_search<1>(spec, budget, rules, observer);
  if (spec.n <= 128) return run_search<2>(spec, budget, rules, observer);
  if (spec.n <= 256) return run_search<4>(spec, budget, rules, observer);
  return run_search<8>(spec, budget, rules, observer);
}

ScanResult brm_scan(int m, int a, int s, int n_lo, int n_hi, const Budget& budget,
                    const RuleSet& rules) {
  if (a != 2)
    throw Error(ErrorKind::UnsupportedRedTarget, "scan requires a = 2");
  if (n_lo < 1 || n_lo > n_hi)
    throw Error(ErrorKind::InvalidSpec, "need 1 <= n_lo <= n_hi");

  ScanResult result;
  result.lower_bound = 1;
  bool seen_arrow = false;
  for (int n = n_lo; n <= n_hi; ++n) {
    ScanEntry entry{n, decide_arrow(ProblemSpec{m, n, a, s}, budget, rules)};
    switch (entry.outcome.status) {
      case ArrowStatus::NotArrow:
        if (seen_arrow) result.monotone = false;
        // Arrowing is monotone in n, so a good colouring at n rules out every smaller value.
        result.lower_bound = std::max(result.lower_bound, n + 1);
        break;
      case ArrowStatus::Arrow:
        if (!seen_arrow) result.upper_bound = n;
        seen_arrow = true;
        break;
      case ArrowStatus::Inconclusive:
        break;
    }
    result.entries.push_back(std::move(entry));
  }
  if (result.upper_bound && result.lower_bound == *result.upper_bound && result.monotone)
    result.value = result.upper_bound;
  return result;
}

}  // namespace bramsey
