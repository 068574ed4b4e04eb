#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "rochart/formulas.hpp"

namespace {

using rochart::Bidegree;
using rochart::RankChart;

long long binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  long long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace

TEST_CASE("projective space charts") {
  const RankChart want11 = rochart::make_chart({{0, 0}, {1, 1}, {2, 1}, {3, 2}, {4, 2},
                                                {5, 3}, {6, 3}, {7, 4}, {8, 4}, {9, 4},
                                                {10, 4}});
  CHECK(rochart::proj_space(11, 4) == want11);
  CHECK(rochart::proj_space(3, 1) == rochart::make_chart({{0, 0}, {1, 1}, {2, 1}}));
  CHECK(rochart::proj_space(4, 0) ==
        rochart::make_chart({{0, 0}, {1, 0}, {2, 0}, {3, 0}}));
  CHECK_THROWS_AS(rochart::proj_space(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(rochart::proj_space(0, 0), std::invalid_argument);
  for (int p = 1; p <= 12; ++p)
    for (int q = 0; 2 * q <= p; ++q) {
      const auto chart = rochart::proj_space(p, q);
      CHECK(static_cast<int>(chart.generators.size()) == p);
      for (int d = 0; d < p; ++d) {
        int total = 0;
        for (int w = 0; w <= q; ++w) total += rochart::free_rank_at(chart, d, w);
        CHECK(total == 1);
      }
    }
}

TEST_CASE("one-sign charts agree with the partition count") {
  CHECK(rochart::gr_kn1(2, 4) ==
        rochart::make_chart({{0, 0}, {1, 1}, {2, 1}, {2, 1}, {3, 1}, {4, 2}}));
  CHECK(rochart::gr_kn1(3, 3) == rochart::make_chart({{0, 0}}));
  const auto big = rochart::gr_kn1(4, 9);
  CHECK(rochart::free_rank_at(big, 6, 2) == 5);
  CHECK(rochart::free_rank_at(big, 8, 2) == 10);
  CHECK(rochart::free_rank_at(big, 20, 4) == 1);
  for (int n = 1; n <= 9; ++n)
    for (int k = 1; k <= std::min(n, 4); ++k) {
      const auto chart = rochart::gr_kn1(k, n);
      CHECK(static_cast<long long>(chart.generators.size()) == binom(n, k));
      for (int p = 0; p <= k * (n - k); ++p)
        for (int q = 0; q <= k; ++q)
          CHECK(rochart::free_rank_at(chart, p, q) == rochart::part(p, k, n - k, q));
    }
  for (int n = 2; n <= 9; ++n) CHECK(rochart::gr_kn1(1, n) == rochart::proj_space(n, 1));
}

TEST_CASE("one-sign charts satisfy rank duality") {
  for (int n = 1; n <= 9; ++n)
    for (int k = 1; k <= std::min(n, 4); ++k) {
      const auto chart = rochart::gr_kn1(k, n);
      for (int q = 0; q <= k; ++q)
        for (int p = 0; p <= n * q; ++p)
          CHECK(rochart::free_rank_at(chart, p, q) ==
                rochart::free_rank_at(chart, n * q - p, q));
    }
}

TEST_CASE("per-dimension totals are the singular Betti numbers") {
  for (int n = 3; n <= 10; ++n) {
    const auto chart = rochart::gr_2n2(n);
    for (int d = 0; d <= 2 * (n - 2); ++d) {
      long long total = 0;
      for (int q = 0; q <= 4; ++q) total += rochart::free_rank_at(chart, d, q);
      CHECK(total == rochart::betti(2, n, d));
    }
  }
  for (int n = 1; n <= 9; ++n)
    for (int k = 1; k <= std::min(n, 4); ++k) {
      const auto chart = rochart::gr_kn1(k, n);
      for (int d = 0; d <= k * (n - k); ++d) {
        long long total = 0;
        for (int q = 0; q <= k; ++q) total += rochart::free_rank_at(chart, d, q);
        CHECK(total == rochart::betti(k, n, d));
      }
    }
}

TEST_CASE("two-sign charts for small n") {
  CHECK(rochart::gr_2n2(3) == rochart::make_chart({{0, 0}, {1, 1}, {2, 1}}));
  CHECK(rochart::gr_2n2(4) ==
        rochart::make_chart({{0, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}, {4, 2}}));
  CHECK(rochart::gr_2n2(5) ==
        rochart::make_chart({{0, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 2},
                             {4, 2}, {4, 2}, {5, 3}, {6, 3}}));
  CHECK_THROWS_AS(rochart::gr_2n2(2), std::invalid_argument);
}

TEST_CASE("two-sign chart sizes and sample entries") {
  for (int n = 3; n <= 12; ++n)
    CHECK(static_cast<long long>(rochart::gr_2n2(n).generators.size()) == binom(n, 2));
  const auto ten = rochart::gr_2n2(10);
  CHECK(rochart::free_rank_at(ten, 4, 2) == 3);
  CHECK(rochart::free_rank_at(ten, 5, 3) == 1);
  CHECK(rochart::free_rank_at(ten, 12, 4) == 3);
  CHECK(rochart::free_rank_at(ten, 14, 4) == 2);
  CHECK(rochart::free_rank_at(ten, 16, 4) == 1);
  CHECK(rochart::free_rank_at(ten, 9, 2) == 1);
  CHECK(rochart::free_rank_at(ten, 11, 3) == 1);
}

TEST_CASE("stable two-sign ranks") {
  CHECK(rochart::inf_gr2_rank(12, 4) == 3);
  CHECK(rochart::inf_gr2_rank(9, 4) == 1);
  CHECK(rochart::inf_gr2_rank(13, 3) == 2);
  CHECK(rochart::inf_gr2_rank(8, 2) == 2);
  CHECK(rochart::inf_gr2_rank(1, 0) == 0);
  // the opening window of the stable chart
  const std::map<Bidegree, long long> window = {
      {{0, 0}, 1},  {{1, 1}, 1},  {{2, 1}, 1},  {{2, 2}, 1},  {{3, 2}, 2},
      {{4, 2}, 3},  {{5, 2}, 2},  {{6, 2}, 2},  {{7, 2}, 2},  {{8, 2}, 2},
      {{9, 2}, 2},  {{10, 2}, 2}, {{11, 2}, 2}, {{12, 2}, 2}, {{13, 2}, 2},
      {{5, 3}, 1},  {{6, 3}, 2},  {{7, 3}, 2},  {{8, 3}, 2},  {{9, 3}, 2},
      {{10, 3}, 2}, {{11, 3}, 2}, {{12, 3}, 2}, {{13, 3}, 2},
      {{8, 4}, 1},  {{9, 4}, 1},  {{10, 4}, 2}, {{11, 4}, 2}, {{12, 4}, 3},
      {{13, 4}, 3}};
  for (int p = 0; p <= 13; ++p)
    for (int q = 0; q <= 5; ++q) {
      const auto it = window.find({p, q});
      const long long want = it == window.end() ? 0 : it->second;
      CHECK(rochart::inf_gr2_rank(p, q) == want);
    }
}

TEST_CASE("stable ranks are the tails of the finite charts") {
  for (int p = 0; p <= 12; ++p)
    for (int q = 0; q <= 5; ++q)
      for (int n = std::max(p + 2, 3); n <= 15; ++n)
        CHECK(rochart::inf_gr2_rank(p, q) == rochart::free_rank_at(rochart::gr_2n2(n), p, q));
  for (int p = 0; p <= 10; ++p)
    for (int q = 0; q <= 4; ++q)
      for (int k = 0; k <= 4; ++k) {
        CHECK(rochart::inf_kn1_rank(p, q, k) == rochart::part(p, k, p, q));
        if (k >= 1 && p <= k * (p + 1))
          CHECK(rochart::inf_kn1_rank(p, q, k) ==
                rochart::free_rank_at(rochart::gr_kn1(k, k + p), p, q));
      }
}

TEST_CASE("stable one-sign golds") {
  CHECK(rochart::inf_kn1_rank(6, 2, 4) == 5);
  CHECK(rochart::inf_kn1_rank(0, 0, 3) == 1);
  CHECK(rochart::inf_kn1_rank(4, 3, 2) == 0);
}

TEST_CASE("complexification doubles bidegrees") {
  CHECK(rochart::complexify(RankChart{}) == RankChart{});
  const auto real = rochart::gr_kn1(2, 5);
  const auto cplx = rochart::complexify(real);
  CHECK(cplx.generators.size() == real.generators.size());
  for (int p = 0; p <= 12; ++p)
    for (int q = 0; q <= 4; ++q) {
      if (p % 2 == 0 && q % 2 == 0)
        CHECK(rochart::free_rank_at(cplx, p, q) ==
              rochart::free_rank_at(real, p / 2, q / 2));
      else
        CHECK(rochart::free_rank_at(cplx, p, q) == 0);
    }
}

TEST_CASE("conjugation charts") {
  CHECK(rochart::gr_conj(2, 4) ==
        rochart::make_chart({{0, 0}, {2, 1}, {4, 2}, {4, 2}, {6, 3}, {8, 4}}));
  CHECK(rochart::gr_conj(1, 2) == rochart::make_chart({{0, 0}, {2, 1}}));
  CHECK(rochart::gr_conj(0, 5) == rochart::make_chart({{0, 0}}));
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto chart = rochart::gr_conj(k, n);
      for (int i = 0; i <= k * (n - k); ++i)
        CHECK(rochart::free_rank_at(chart, 2 * i, i) == rochart::betti(k, n, i));
    }
}
