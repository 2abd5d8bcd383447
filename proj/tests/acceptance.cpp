// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bramsey/constructions.hpp"
#include "bramsey/detect.hpp"
#include "bramsey/oracle.hpp"
#include "bramsey/satbridge.hpp"
#include "bramsey/search.hpp"

using namespace bramsey;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool pass = false;
  std::string detail;
};

Coloring from_mask(int m, int n, std::uint32_t mask) {
  std::vector<YSet> rows(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < n; ++y)
      if ((mask >> (x * n + y)) & 1U) rows[static_cast<std::size_t>(x)].set(y);
  return Coloring(n, rows);
}

// Every (m, n, a, s) with m <= 4, n <= 6, a <= 2, s <= 3.
std::vector<ProblemSpec> small_sweep() {
  std::vector<ProblemSpec> out;
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 6; ++n)
      for (int a = 1; a <= 2; ++a)
        for (int s = 1; s <= 3; ++s) out.push_back({m, n, a, s});
  return out;
}

Verdict constructions() {
  const auto t0 = Clock::now();
  const auto a = witness_7_56();
  const auto ra = verify(a.coloring, {7, 56, 2, 6});
  bool pairwise = true;
  for (std::size_t i = 0; i < ra.pairwise.size(); ++i)
    for (std::size_t j = 0; j < ra.pairwise.size(); ++j)
      if (i != j && ra.pairwise[i][j] != 1) pairwise = false;
  const double ta = since(t0);
  const auto t1 = Clock::now();
  const auto rb = verify(witness_8_44().coloring, {8, 44, 2, 6});
  const double tb = since(t1);
  const int ua = ra.min_union ? ra.min_union->value : -1;
  const int ub = rb.min_union ? rb.min_union->value : -1;
  char buf[160];
  std::snprintf(buf, sizeof buf, "7x56 good=%d pairwise=1:%d minunion=%d; 8x44 good=%d minunion=%d; %.3fs/%.3fs",
                ra.good(), pairwise, ua, rb.good(), ub, ta, tb);
  return {ra.good() && pairwise && ua == 51 && rb.good() && ub == 39 && ta < 1.0 && tb < 1.0, buf};
}

Verdict nonexistence() {
  const auto t0 = Clock::now();
  int good = 0, total = 0;
  for (int m = 2; m <= 6; ++m)
    for (int n : {6, 20, 57, 200}) {
      ++total;
      good += verify(star_witness(m, n), {m, n, 2, 6}).good();
    }
  const double t = since(t0);
  char buf[96];
  std::snprintf(buf, sizeof buf, "star colouring good in %d/%d cells; %.3fs", good, total, t);
  return {good == total && t < 1.0, buf};
}

Verdict known_values() {
  const auto t0 = Clock::now();
  const std::map<int, int> expected{{4, 15}, {5, 12}, {6, 12}, {7, 9}, {8, 9}};
  std::string detail;
  bool ok = true;
  for (const auto& [m, v] : expected) {
    const ScanResult r = brm_scan(m, 2, 3, 1, v + 1);
    const bool hit = r.value && *r.value == v && r.monotone;
    ok &= hit;
    detail += "BR_" + std::to_string(m) + "=" + (r.value ? std::to_string(*r.value) : "?") + " ";
  }
  for (int m : {2, 3}) {
    const ScanResult r = brm_scan(m, 2, 3, 1, 20);
    bool all_not = true;
    for (const auto& e : r.entries) all_not &= e.outcome.status == ArrowStatus::NotArrow;
    ok &= all_not;
    detail += "m=" + std::to_string(m) + (all_not ? ":none " : ":ARROW ");
  }
  const double t = since(t0);
  char buf[32];
  std::snprintf(buf, sizeof buf, "; %.1fs", t);
  return {ok && t <= 1800.0, detail + buf};
}

Verdict cross_validation() {
  const auto t0 = Clock::now();
  const auto solver = SolverHarness::from_env();
  int disagreements = 0, bad_witnesses = 0, specs = 0, cegar_runs = 0;
  for (const auto& spec : small_sweep()) {
    ++specs;
    const bool truth = brute_force_arrow(spec).arrows;
    const auto dfs = decide_arrow(spec);
    if (dfs.status == ArrowStatus::Inconclusive || (dfs.status == ArrowStatus::Arrow) != truth)
      ++disagreements;
    if (dfs.witness && !verify(*dfs.witness, spec).good()) ++bad_witnesses;
    if (solver) {
      ++cegar_runs;
      const auto sat = cegar(spec, *solver, {}, {.batch = true});
      if ((sat.status == ArrowStatus::Arrow) != truth) ++disagreements;
      if (sat.witness && !verify(*sat.witness, spec).good()) ++bad_witnesses;
    }
  }
  const double t = since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d specs, %d cegar runs%s, %d disagreements, %d bad witnesses; %.1fs",
                specs, cegar_runs, solver ? "" : " (no solver configured)", disagreements,
                bad_witnesses, t);
  return {disagreements == 0 && bad_witnesses == 0 && t <= 600.0, buf};
}

Verdict rule_soundness() {
  const auto t0 = Clock::now();
  using Key = std::tuple<std::string, std::vector<std::vector<int>>, std::optional<int>, int>;
  std::map<std::string, std::uint64_t> firings;
  std::uint64_t checked = 0, violations = 0;
  for (const auto& spec : small_sweep()) {
    if (spec.a != 2) continue;
    std::set<Key> events;
    std::mutex mu;
    decide_arrow(spec, {}, {}, [&](const PruneEvent& e) {
      if (e.rule == "partial_blue") return;
      std::vector<std::vector<int>> rows;
      for (const auto& r : e.rows) rows.push_back(r.indices());
      std::lock_guard lock(mu);
      ++firings[std::string(e.rule)];
      events.insert({std::string(e.rule), std::move(rows), e.pending_degree, e.future_degree_cap});
    });
    for (const auto& [rule, rows, pending, cap] : events) {
      std::vector<YSet> fixed;
      for (const auto& r : rows) {
        YSet y;
        for (int i : r) y.set(i);
        fixed.push_back(y);
      }
      ++checked;
      if (has_good_completion(spec, fixed, pending, cap)) ++violations;
    }
  }
  std::string counts;
  for (const auto& [rule, c] : firings) counts += rule + "=" + std::to_string(c) + " ";
  char buf[128];
  std::snprintf(buf, sizeof buf, "%llu distinct states checked, %llu violations; %.1fs",
                static_cast<unsigned long long>(checked), static_cast<unsigned long long>(violations),
                since(t0));
  const bool both = firings["max_degree"] > 0 && firings["union_lookahead"] > 0;
  return {violations == 0 && both, "firings " + counts + "; " + buf};
}

Verdict upper_bounds() {
  const auto t0 = Clock::now();
  const Budget budget{.max_seconds = 600.0};
  const auto b7 = decide_arrow({7, 57, 2, 6}, budget);
  const auto b8 = decide_arrow({8, 45, 2, 6}, budget);
  // NotArrow here would contradict the claimed values; Inconclusive is an honest miss.
  const bool honest = b7.status != ArrowStatus::NotArrow && b8.status != ArrowStatus::NotArrow;
  const bool lower = verify(witness_7_56().coloring, {7, 56, 2, 6}).good() &&
                     verify(witness_8_44().coloring, {8, 44, 2, 6}).good();
  const auto tiny = decide_arrow({8, 45, 2, 6}, Budget{.max_nodes = 10});
  const bool budget_honest = tiny.status == ArrowStatus::Inconclusive;
  std::string cegar_note = "cegar: no solver configured";
  bool cegar_ok = true;
  if (const auto solver = SolverHarness::from_env()) {
    const auto o = cegar({8, 45, 2, 6}, *solver, Budget{.max_nodes = 3, .max_seconds = 60.0},
                         {.batch = true});
    cegar_ok = o.status != ArrowStatus::NotArrow;
    cegar_note = "cegar(8,45) " + std::string(to_string(o.status)) + " after " +
                 std::to_string(o.stats.nodes) + " calls";
  }
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "dfs(7,57) %s in %llu nodes, dfs(8,45) %s in %llu nodes; 10-node budget gives %s; %s; "
                "56 and 44 lower bounds %s; %.1fs",
                std::string(to_string(b7.status)).c_str(), static_cast<unsigned long long>(b7.stats.nodes),
                std::string(to_string(b8.status)).c_str(), static_cast<unsigned long long>(b8.stats.nodes),
                std::string(to_string(tiny.status)).c_str(), cegar_note.c_str(),
                lower ? "proved" : "FAILED", since(t0));
  return {honest && lower && budget_honest && cegar_ok, buf};
}

Verdict encoding() {
  const auto t0 = Clock::now();
  std::uint64_t assignments = 0, mismatches = 0;
  for (int m = 1; m <= 9; ++m)
    for (int n = 1; m * n <= 9; ++n)
      for (int a = 1; a <= std::max(m, n); ++a)
        for (int s = 1; s <= std::max(m, n); ++s) {
          const ProblemSpec spec{m, n, a, s};
          const CnfDoc doc = encode_cnf(spec, EncodeMode::Full);
          for (std::uint32_t mask = 0; mask < (1U << (m * n)); ++mask) {
            ++assignments;
            std::vector<int> lits;
            for (int v = 1; v <= doc.num_vars; ++v) lits.push_back((mask >> (v - 1)) & 1U ? v : -v);
            bool sat = true;
            for (const auto& c : doc.clauses) {
              bool hit = false;
              for (int lit : c) hit |= ((mask >> (std::abs(lit) - 1)) & 1U) == (lit > 0 ? 1U : 0U);
              if (!hit) {
                sat = false;
                break;
              }
            }
            const bool good = verify(decode_model(doc, lits, spec), spec).good();
            if (sat != good) ++mismatches;
            if (from_mask(m, n, mask) != decode_model(doc, lits, spec)) ++mismatches;
          }
        }
  const double t = since(t0);
  char buf[128];
  std::snprintf(buf, sizeof buf, "%llu assignments, %llu mismatches; %.1fs",
                static_cast<unsigned long long>(assignments), static_cast<unsigned long long>(mismatches), t);
  return {mismatches == 0 && t < 60.0, buf};
}

Verdict monotonicity() {
  const auto t0 = Clock::now();
  constexpr int kM = 8, kN = 16;
  int violations = 0, cells = 0;
  for (int s : {2, 3}) {
    bool arrow[kM + 1][kN + 1] = {};
    for (int m = 1; m <= kM; ++m)
      for (int n = 1; n <= kN; ++n) {
        const auto o = decide_arrow({m, n, 2, s});
        if (o.status == ArrowStatus::Inconclusive) ++violations;
        arrow[m][n] = o.status == ArrowStatus::Arrow;
        ++cells;
      }
    for (int m = 1; m <= kM; ++m)
      for (int n = 1; n <= kN; ++n) {
        if (n < kN && arrow[m][n] && !arrow[m][n + 1]) ++violations;
        if (m < kM && arrow[m][n] && !arrow[m + 1][n]) ++violations;
      }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d cells (m<=%d, n<=%d, s=2,3), %d violations; %.1fs", cells, kM,
                kN, violations, since(t0));
  return {violations == 0, buf};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"constructions", constructions},   {"nonexistence", nonexistence},
      {"known values", known_values},     {"oracle cross-validation", cross_validation},
      {"rule soundness", rule_soundness}, {"upper bounds", upper_bounds},
      {"encoding soundness", encoding},   {"monotonicity", monotonicity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("[%s] %zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                v.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
