#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rochart/mtwo.hpp"

namespace {

using rochart::Bidegree;

// Piecewise restatement of the two cones, written independently of the
// header: the top cone holds monomials r^i t^j at (i, i+j), the lower
// cone holds th/(r^i t^j) at (-i, -2-i-j), for i, j >= 0.
bool cone_member(int a, int b) {
  for (int i = 0; i <= 16; ++i)
    for (int j = 0; j <= 24; ++j) {
      if (a == i && b == i + j) return true;
      if (a == -i && b == -2 - i - j) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("point dimensions at named elements") {
  CHECK(rochart::m2_dim(0, 0) == 1);
  CHECK(rochart::m2_dim(1, 1) == 1);
  CHECK(rochart::m2_dim(0, 1) == 1);
  CHECK(rochart::m2_dim(0, -2) == 1);
  CHECK(rochart::m2_dim(-1, -3) == 1);
  CHECK(rochart::m2_dim(1, 0) == 0);
  CHECK(rochart::m2_dim(0, -1) == 0);
  CHECK(rochart::m2_dim(-1, 0) == 0);
}

TEST_CASE("point dimensions match the monomial cones on a window") {
  for (int a = -6; a <= 6; ++a)
    for (int b = -8; b <= 8; ++b) {
      CHECK(rochart::m2_dim(a, b) == (cone_member(a, b) ? 1 : 0));
      if (b == a - 1) CHECK(rochart::m2_dim(a, b) == 0);
      if (a > 0 && b < a) CHECK(rochart::m2_dim(a, b) == 0);
    }
}

TEST_CASE("free rank counts multiplicity") {
  const auto chart = rochart::make_chart({{2, 1}, {0, 0}, {2, 1}, {3, 2}});
  CHECK(rochart::free_rank_at(chart, 2, 1) == 2);
  CHECK(rochart::free_rank_at(chart, 0, 0) == 1);
  CHECK(rochart::free_rank_at(chart, 1, 1) == 0);
  CHECK(rochart::free_rank_at(rochart::RankChart{}, 0, 0) == 0);
}

TEST_CASE("chart equality ignores metadata") {
  auto a = rochart::make_chart({{1, 1}, {0, 0}});
  auto b = rochart::make_chart({{0, 0}, {1, 1}});
  b.metadata["status"] = "anything";
  CHECK(a == b);
}

TEST_CASE("group rank of a single generator is a translated point") {
  const auto chart = rochart::make_chart({{3, 2}});
  for (int p = -3; p <= 8; ++p)
    for (int q = -6; q <= 8; ++q)
      CHECK(rochart::group_rank_at(chart, p, q) == rochart::m2_dim(p - 3, q - 2));
}

TEST_CASE("group rank sums cone contributions") {
  const auto chart = rochart::make_chart({{0, 0}, {1, 1}, {2, 1}});
  // at (2,2): unit contributes (top cone at (2,2)), (1,1) contributes at
  // (1,1), (2,1) contributes at (0,1)
  CHECK(rochart::group_rank_at(chart, 2, 2) == 3);
  // at (1,0): unit gives 0 at (1,0); (1,1) gives 0 at (0,-1); (2,1) gives
  // th/r at (-1,-1)... which is not in the lower cone either
  CHECK(rochart::group_rank_at(chart, 1, 0) == 0);
  // at (0,-2): the unit contributes th and (1,1) contributes th/r;
  // (2,1) would need (-2,-3), outside the lower cone
  CHECK(rochart::group_rank_at(chart, 0, -2) == 2);
}

TEST_CASE("pairwise shift golds") {
  using P = std::pair<Bidegree, Bidegree>;
  CHECK(rochart::kronholm_shift({1, 0}, {2, 2}) == P{{1, 1}, {2, 1}});
  CHECK(rochart::kronholm_shift({2, 1}, {3, 3}) == P{{2, 2}, {3, 2}});
  CHECK(rochart::kronholm_shift({3, 1}, {4, 3}) == P{{3, 2}, {4, 2}});
}

TEST_CASE("shift swaps the two fixed-set dimensions") {
  for (int sp = 0; sp <= 5; ++sp)
    for (int sq = 0; sq <= sp; ++sq)
      for (int tp = sp + 1; tp <= 6; ++tp)
        for (int tq = 0; tq <= tp; ++tq) {
          const Bidegree src{sp, sq}, tgt{tp, tq};
          if (src.fixdim() <= tgt.fixdim()) continue;
          const auto [s2, t2] = rochart::kronholm_shift(src, tgt);
          CHECK(s2.fixdim() == tgt.fixdim());
          CHECK(t2.fixdim() == src.fixdim());
          CHECK(s2.p == src.p);
          CHECK(t2.p == tgt.p);
        }
}

TEST_CASE("shift rejects inadmissible pairs") {
  CHECK_THROWS_AS(rochart::kronholm_shift({2, 1}, {3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(rochart::kronholm_shift({3, 0}, {3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(rochart::kronholm_shift({4, 0}, {3, 2}), std::invalid_argument);
}

TEST_CASE("shifts preserve per-dimension totals") {
  auto gens = std::vector<Bidegree>{{0, 0}, {1, 0}, {2, 2}, {2, 1}};
  const auto before = rochart::make_chart(gens);
  const auto [s2, t2] = rochart::kronholm_shift(gens[1], gens[2]);
  gens[1] = s2;
  gens[2] = t2;
  const auto after = rochart::make_chart(gens);
  for (int d = 0; d <= 3; ++d) {
    int totalBefore = 0, totalAfter = 0;
    for (int q = -2; q <= 6; ++q) {
      totalBefore += rochart::free_rank_at(before, d, q);
      totalAfter += rochart::free_rank_at(after, d, q);
    }
    CHECK(totalBefore == totalAfter);
  }
}
