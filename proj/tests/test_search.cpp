#include <map>
#include <mutex>
#include <set>

#include "bramsey/detect.hpp"
#include "bramsey/error.hpp"
#include "bramsey/oracle.hpp"
#include "bramsey/search.hpp"
#include "doctest.h"

using namespace bramsey;

namespace {

bool expected_arrow(const ProblemSpec& spec) { return brute_force_arrow(spec, 1).arrows; }

void check_outcome(const ProblemSpec& spec, const SearchOutcome& o) {
  REQUIRE(o.status != ArrowStatus::Inconclusive);
  if (o.status == ArrowStatus::NotArrow) {
    REQUIRE(o.witness);
    CHECK(verify(*o.witness, spec).good());
  } else {
    CHECK_FALSE(o.witness);
  }
}

}  // namespace

TEST_CASE("single row never arrows") {
  const ProblemSpec spec{1, 10, 2, 6};
  const auto o = decide_arrow(spec);
  CHECK(o.status == ArrowStatus::NotArrow);
  check_outcome(spec, o);
}

TEST_CASE("8x44 does not arrow K_{6,6}") {
  const ProblemSpec spec{8, 44, 2, 6};
  const auto o = decide_arrow(spec);
  CHECK(o.status == ArrowStatus::NotArrow);
  check_outcome(spec, o);
}

TEST_CASE("K_{2,2} versus K_{6,6} at m = 7, 8") {
  CHECK(decide_arrow({7, 56, 2, 6}).status == ArrowStatus::NotArrow);
  CHECK(decide_arrow({7, 57, 2, 6}).status == ArrowStatus::Arrow);
  CHECK(decide_arrow({8, 44, 2, 6}).status == ArrowStatus::NotArrow);
  CHECK(decide_arrow({8, 45, 2, 6}).status == ArrowStatus::Arrow);
  for (int m = 2; m <= 6; ++m) CHECK(decide_arrow({m, 200, 2, 6}).status == ArrowStatus::NotArrow);
}

TEST_CASE("agreement with brute force on small shapes") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 5; ++n)
      for (int a = 1; a <= 2; ++a)
        for (int s = 1; s <= 3; ++s) {
          const ProblemSpec spec{m, n, a, s};
          CAPTURE(spec.to_string());
          const auto o = decide_arrow(spec);
          check_outcome(spec, o);
          CHECK((o.status == ArrowStatus::Arrow) == expected_arrow(spec));
        }
  for (const ProblemSpec spec : {ProblemSpec{4, 4, 2, 2}, ProblemSpec{4, 5, 2, 2},
                                 ProblemSpec{4, 6, 2, 3}, ProblemSpec{5, 4, 2, 3},
                                 ProblemSpec{6, 4, 2, 3}, ProblemSpec{4, 6, 2, 2}}) {
    CAPTURE(spec.to_string());
    const auto o = decide_arrow(spec);
    check_outcome(spec, o);
    CHECK((o.status == ArrowStatus::Arrow) == expected_arrow(spec));
  }
}

TEST_CASE("BR_m(K_{2,2}, K_{3,3}) for m = 4..8") {
  const std::pair<int, int> values[] = {{4, 15}, {5, 12}, {6, 12}, {7, 9}, {8, 9}};
  for (const auto& [m, v] : values) {
    CAPTURE(m);
    const auto below = decide_arrow({m, v - 1, 2, 3});
    CHECK(below.status == ArrowStatus::NotArrow);
    check_outcome({m, v - 1, 2, 3}, below);
    CHECK(decide_arrow({m, v, 2, 3}).status == ArrowStatus::Arrow);
  }
  // m = 2, 3: the star colouring keeps every n good.
  CHECK(decide_arrow({3, 40, 2, 3}).status == ArrowStatus::NotArrow);
  CHECK(decide_arrow({2, 40, 2, 3}).status == ArrowStatus::NotArrow);
}

TEST_CASE("brm_scan") {
  const ScanResult r = brm_scan(5, 2, 3, 9, 14);
  CHECK(r.monotone);
  REQUIRE(r.value);
  CHECK(*r.value == 12);
  CHECK(r.lower_bound == 12);
  CHECK(r.entries.size() == 6);
  for (const auto& e : r.entries)
    CHECK((e.outcome.status == ArrowStatus::Arrow) == (e.n >= 12));

  // Starting at the value itself leaves the lower bound open.
  const ScanResult top = brm_scan(5, 2, 3, 12, 13);
  CHECK(top.upper_bound == 12);
  CHECK_FALSE(top.value);

  CHECK_THROWS_AS(brm_scan(5, 3, 3, 1, 2), Error);
  CHECK_THROWS_AS(brm_scan(5, 2, 3, 4, 2), Error);
}

TEST_CASE("determinism") {
  const ProblemSpec spec{6, 11, 2, 3};
  const auto a = decide_arrow(spec);
  const auto b = decide_arrow(spec);
  CHECK(a.status == b.status);
  CHECK(a.stats.nodes == b.stats.nodes);
  CHECK(a.stats.prunes == b.stats.prunes);
  REQUIRE(a.witness);
  CHECK(*a.witness == *b.witness);
}

TEST_CASE("parallel width does not change the verdict") {
  for (const ProblemSpec spec : {ProblemSpec{6, 11, 2, 3}, ProblemSpec{6, 12, 2, 3},
                                 ProblemSpec{7, 9, 2, 3}, ProblemSpec{5, 20, 2, 4}}) {
    CAPTURE(spec.to_string());
    const auto seq = decide_arrow(spec);
    const auto par = decide_arrow(spec, Budget{.parallel_width = 4});
    CHECK(seq.status == par.status);
    check_outcome(spec, par);
  }
}

TEST_CASE("each rule only cuts branches without good completions") {
  struct Key {
    std::string rule;
    std::vector<std::vector<int>> rows;
    std::optional<int> pending;
    int cap;
    auto operator<=>(const Key&) const = default;
  };
  const ProblemSpec specs[] = {{4, 5, 2, 2}, {4, 6, 2, 3}, {5, 4, 2, 3}, {3, 8, 2, 2},
                               {6, 4, 2, 3}, {4, 6, 2, 2}, {3, 7, 2, 3}, {5, 4, 2, 2},
                               {6, 4, 2, 2}, {4, 6, 2, 1}, {8, 3, 2, 4}, {5, 4, 2, 1},
                               {5, 7, 2, 2}, {6, 8, 2, 2}, {6, 9, 2, 3}, {7, 8, 2, 3}};
  std::map<std::string, int> fired;
  for (const auto& spec : specs) {
    CAPTURE(spec.to_string());
    std::set<Key> events;
    std::mutex mu;
    decide_arrow(spec, {}, {}, [&](const PruneEvent& e) {
      Key k{std::string(e.rule), {}, e.pending_degree, e.future_degree_cap};
      for (const auto& r : e.rows) k.rows.push_back(r.indices());
      std::lock_guard lock(mu);
      events.insert(std::move(k));
    });
    for (const auto& k : events) {
      CAPTURE(k.rule);
      // The oracle completes at most 24 free cells.
      if ((spec.m - static_cast<int>(k.rows.size())) * spec.n > 24) continue;
      ++fired[k.rule];
      std::vector<YSet> rows;
      for (const auto& r : k.rows) {
        YSet y;
        for (int i : r) y.set(i);
        rows.push_back(y);
      }
      REQUIRE_FALSE(has_good_completion(spec, rows, k.pending, k.cap));
    }
  }
  for (const std::string rule : {"max_degree", "union_lookahead", "future_union", "union_cap", "partial_blue"}) {
    CAPTURE(rule);
    CHECK(fired[rule] > 0);
  }
}

TEST_CASE("rules change work, not answers") {
  for (const ProblemSpec spec : {ProblemSpec{6, 11, 2, 3}, ProblemSpec{6, 12, 2, 3},
                                 ProblemSpec{4, 14, 2, 3}, ProblemSpec{4, 15, 2, 3}}) {
    CAPTURE(spec.to_string());
    const auto all = decide_arrow(spec);
    for (const std::string name : {"none", "max_degree", "union_lookahead", "future_union", "union_cap"}) {
      CAPTURE(name);
      const RuleSet rules = RuleSet::parse(name);
      const auto o = decide_arrow(spec, {}, rules);
      CHECK(o.status == all.status);
      CHECK(o.stats.nodes >= all.stats.nodes);
    }
  }
}

TEST_CASE("monotone in n") {
  for (int m = 2; m <= 6; ++m) {
    bool arrowed = false;
    for (int n = 1; n <= 16; ++n) {
      const bool arrow = decide_arrow({m, n, 2, 3}).status == ArrowStatus::Arrow;
      CHECK_FALSE((arrowed && !arrow));
      arrowed = arrowed || arrow;
    }
  }
}

TEST_CASE("budget exhaustion is inconclusive") {
  const auto o = decide_arrow({8, 45, 2, 6}, Budget{.max_nodes = 10});
  CHECK(o.status == ArrowStatus::Inconclusive);
  CHECK_FALSE(o.witness);
  const auto t = decide_arrow({8, 45, 2, 6}, Budget{.max_seconds = 0.01}, RuleSet::none());
  CHECK(t.status == ArrowStatus::Inconclusive);
}

TEST_CASE("errors and parsing") {
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::IoError;
  };
  CHECK(kind([] { decide_arrow({3, 3, 3, 2}); }) == ErrorKind::UnsupportedRedTarget);
  CHECK(kind([] { decide_arrow({17, 3, 2, 2}); }) == ErrorKind::CapacityExceeded);
  CHECK(kind([] { decide_arrow({3, 3, 2, 2}, Budget{.parallel_width = 0}); }) ==
        ErrorKind::InvalidSpec);
  CHECK(kind([] { RuleSet::parse("bogus"); }) == ErrorKind::ParseError);
  CHECK_FALSE(RuleSet::parse("none").max_degree);
  const RuleSet only = RuleSet::parse("union_lookahead,union_cap");
  CHECK(only.union_lookahead);
  CHECK(only.union_cap);
  CHECK_FALSE(only.max_degree);
  CHECK_FALSE(only.future_union);
  for (auto s : {ArrowStatus::Arrow, ArrowStatus::NotArrow, ArrowStatus::Inconclusive})
    CHECK(parse_status(to_string(s)) == s);
  CHECK_FALSE(parse_status("maybe"));
}
