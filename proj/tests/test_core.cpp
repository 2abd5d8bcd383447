#include <random>

#include "bramsey/combinations.hpp"
#include "bramsey/constructions.hpp"
#include "bramsey/detect.hpp"
#include "bramsey/error.hpp"
#include "doctest.h"

using namespace bramsey;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::IoError;
}

Coloring all_red(int m, int n) {
  return Coloring(n, std::vector<YSet>(static_cast<std::size_t>(m), YSet::prefix(n)));
}

Coloring all_blue(int m, int n) { return Coloring(n, std::vector<YSet>(static_cast<std::size_t>(m))); }

Coloring from_mask(int m, int n, std::uint32_t mask) {
  std::vector<YSet> rows(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < n; ++y)
      if ((mask >> (x * n + y)) & 1U) rows[static_cast<std::size_t>(x)].set(y);
  return Coloring(n, rows);
}

}  // namespace

TEST_CASE("build_coloring") {
  SUBCASE("first bundled row has degree 11") {
    const auto w = witness_7_56();
    CHECK(w.coloring.m() == 7);
    CHECK(w.coloring.degree(0) == 11);
  }
  SUBCASE("all blue") {
    const Coloring c = build_coloring(3, 3, {{}, {}, {}});
    CHECK(verify(c, {3, 3, 2, 2}).max_red_degree == 0);
  }
  SUBCASE("errors") {
    CHECK(kind_of([] { build_coloring(2, 4, {{0, 5}, {1}}); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([] { build_coloring(2, 4, {{0}}); }) == ErrorKind::RowCountMismatch);
    CHECK(kind_of([] { build_coloring(1, 513, {{}}); }) == ErrorKind::CapacityExceeded);
    CHECK(kind_of([] { build_coloring(1, 4, {{-1}}); }) == ErrorKind::IndexOutOfRange);
  }
  SUBCASE("n = 512 is allowed") {
    const Coloring c = build_coloring(1, 512, {{0, 511}});
    CHECK(c.degree(0) == 2);
    CHECK(c.blue_row(0).count() == 510);
  }
}

TEST_CASE("ProblemSpec validation") {
  CHECK(kind_of([] { ProblemSpec{0, 1, 1, 1}.validate(); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { ProblemSpec{1, 513, 1, 1}.validate(); }) == ErrorKind::CapacityExceeded);
  CHECK_NOTHROW(ProblemSpec{1, 512, 1, 1}.validate());
}

TEST_CASE("find_red_K") {
  CHECK_FALSE(find_red_K(witness_7_56().coloring, 2, 2));
  const auto full = find_red_K(all_red(2, 2), 2, 2);
  REQUIRE(full);
  CHECK(full->xs == std::vector<int>{0, 1});
  CHECK(full->ys == std::vector<int>{0, 1});

  const Coloring dup = build_coloring(2, 5, {{0, 1, 2}, {0, 1, 2}});
  const auto hit = find_red_K(dup, 2, 2);
  REQUIRE(hit);
  for (int y : hit->ys) CHECK(y <= 2);

  CHECK_FALSE(find_red_K(all_red(2, 2), 3, 1));  // a > m
  CHECK_FALSE(find_red_K(all_red(2, 2), 1, 3));  // b > n
}

TEST_CASE("find_blue_K") {
  CHECK_FALSE(find_blue_K(witness_8_44().coloring, 6, 6));

  // Every 6 rows of the 7x56 colouring cover 51 columns, so one extra blue
  // column leaves 57 - 51 = 6 uncovered.
  const Coloring padded = witness_7_56().coloring.padded(57);
  const auto copy = find_blue_K(padded, 6, 6);
  REQUIRE(copy);
  for (int x : copy->xs)
    for (int y : copy->ys) CHECK_FALSE(padded.is_red(x, y));

  const auto blue = find_blue_K(all_blue(6, 6), 6, 6);
  REQUIRE(blue);
  CHECK(blue->xs == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(blue->ys == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("find_blue_K picks the lexicographically least subset") {
  // Rows 0 and 1 are fully red; rows 2..4 leave columns 1..3 blue.
  const Coloring c = build_coloring(5, 4, {{0, 1, 2, 3}, {0, 1, 2, 3}, {0}, {0}, {0}});
  const auto copy = find_blue_K(c, 2, 3);
  REQUIRE(copy);
  CHECK(copy->xs == std::vector<int>{2, 3});
  CHECK(copy->ys == std::vector<int>{1, 2, 3});
}

TEST_CASE("min_union") {
  CHECK(min_union(witness_7_56().coloring, 6).value == 51);
  CHECK(min_union(witness_8_44().coloring, 6).value == 39);
  const MinUnion star = min_union(star_witness(4, 10), 1);
  CHECK(star.value == 0);
  CHECK(star.subset == std::vector<int>{1});  // lexicographically least empty row
  CHECK(kind_of([] { min_union(star_witness(3, 3), 0); }) == ErrorKind::BadK);
  CHECK(kind_of([] { min_union(star_witness(3, 3), 4); }) == ErrorKind::BadK);
}

TEST_CASE("verify") {
  SUBCASE("7x56 pairwise entries") {
    const auto r = verify(witness_7_56().coloring, {7, 56, 2, 6});
    CHECK(r.good());
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) CHECK(r.pairwise[i][j] == (i == j ? 11 : 1));
    CHECK(r.max_red_degree == 11);
  }
  SUBCASE("8x44 min union") {
    const auto r = verify(witness_8_44().coloring, {8, 44, 2, 6});
    CHECK(r.good());
    REQUIRE(r.min_union);
    CHECK(r.min_union->value == 39);
  }
  SUBCASE("all blue K_{8,45}") {
    const auto r = verify(all_blue(8, 45), {8, 45, 2, 6});
    CHECK_FALSE(r.good());
    CHECK(r.blue_copy);
    CHECK_FALSE(r.red_copy);
  }
  SUBCASE("spec mismatch") {
    CHECK(kind_of([] { verify(all_blue(2, 3), {2, 4, 2, 2}); }) == ErrorKind::SpecMismatch);
  }
  SUBCASE("s > m leaves min_union empty") {
    CHECK_FALSE(verify(all_blue(2, 3), {2, 3, 2, 3}).min_union);
  }
  SUBCASE("pure function") {
    const auto w = witness_8_44();
    const auto r1 = verify(w.coloring, w.spec);
    const auto r2 = verify(w.coloring, w.spec);
    CHECK(r1.pairwise == r2.pairwise);
    CHECK(r1.min_union->subset == r2.min_union->subset);
    CHECK(r1.red_copy == r2.red_copy);
    CHECK(r1.blue_copy == r2.blue_copy);
  }
}

// Exhaustive over every colouring with m*n <= 16 (shapes up to 4x4).
TEST_CASE("red/blue duality and the pairwise characterisation") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; m * n <= 16; ++n) {
      for (std::uint32_t mask = 0; mask < (1U << (m * n)); ++mask) {
        const Coloring c = from_mask(m, n, mask);
        const Coloring flipped = complement(c);
        for (int p = 1; p <= m; ++p)
          for (int q = 1; q <= n; ++q)
            REQUIRE(find_red_K(c, p, q).has_value() == find_blue_K(flipped, p, q).has_value());
        bool pairwise_ok = true;
        for (int i = 0; i < m; ++i)
          for (int j = i + 1; j < m; ++j)
            if (c.row(i).intersection_count(c.row(j)) > 1) pairwise_ok = false;
        REQUIRE(find_red_K(c, 2, 2).has_value() == !pairwise_ok);
        for (int s = 1; s <= std::min(m, n); ++s)
          REQUIRE(find_blue_K(c, s, s).has_value() == (min_union(c, s).value <= n - s));
      }
    }
  }
}

TEST_CASE("design counting on the bundled witnesses") {
  // Pairwise intersections of 1 and no column in three rows: every k-subset
  // union is the degree sum minus C(k, 2).
  for (const auto& w : {witness_7_56(), witness_8_44()}) {
    const Coloring& c = w.coloring;
    for (int y = 0; y < c.n(); ++y) {
      int rows_containing = 0;
      for (int x = 0; x < c.m(); ++x) rows_containing += c.is_red(x, y);
      REQUIRE(rows_containing <= 2);
    }
    for (int k = 1; k <= c.m(); ++k) {
      for_each_combination(c.m(), k, [&](std::span<const int> xs) {
        YSet u;
        int degrees = 0;
        for (int x : xs) {
          u |= c.row(x);
          degrees += c.degree(x);
        }
        REQUIRE(u.count() == degrees - k * (k - 1) / 2);
        return true;
      });
    }
  }
}

TEST_CASE("for_each_combination visits C(n,k) subsets in lexicographic order") {
  std::vector<std::vector<int>> seen;
  for_each_combination(5, 3, [&](std::span<const int> s) {
    seen.emplace_back(s.begin(), s.end());
    return true;
  });
  CHECK(seen.size() == binomial(5, 3));
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(seen.front() == std::vector<int>{0, 1, 2});
  CHECK(seen.back() == std::vector<int>{2, 3, 4});
  CHECK(binomial(57, 6) == 36288252ULL);
  CHECK(binomial(3, 5) == 0);
}
