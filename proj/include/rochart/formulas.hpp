#pragma once

#include <vector>

#include "rochart/mtwo.hpp"
#include "rochart/young.hpp"

namespace rochart {

// Projective space of a representation with q sign coordinates out of p:
// a unit, a staircase of two generators per weight below q, and a tail row
// at weight q. Exactly p generators.
inline RankChart proj_space(int p, int q) {
  detail::require(p >= 1, "proj_space: need p >= 1");
  detail::require(q >= 0 && p >= 2 * q, "proj_space: need p >= 2q >= 0");
  std::vector<Bidegree> gens;
  gens.push_back({0, 0});
  for (int i = 1; i <= q - 1; ++i) {
    gens.push_back({2 * i - 1, i});
    gens.push_back({2 * i, i});
  }
  for (int j = std::max(2 * q - 1, 1); j <= p - 1; ++j) gens.push_back({j, q});
  return make_chart(std::move(gens));
}

// One-sign Grassmannian: a generator at (|lambda|, trace(lambda)) for each
// cell label, so the rank at (p, q) is part(p, k, n-k, q).
inline RankChart gr_kn1(int k, int n) {
  detail::require(k >= 1 && k <= n, "gr_kn1: need 1 <= k <= n");
  std::vector<Bidegree> gens;
  for (const Partition& lambda : enumerate_partitions(k, n - k))
    gens.push_back({box_count(lambda), trace(lambda)});
  return make_chart(std::move(gens));
}

// Two-sign Grassmannian of planes. For n >= 6 this is the five-block
// closed form: a fixed head through dimension 4, a weight-2 row ending at
// n-1, a weight-3 row from 5 to n+1, and a weight-4 ramp that climbs as
// ceil((p-7)/2) up to p = n+1 and then descends as n-1-ceil(p/2) until
// 2n-4. The three smaller cases are their worked-out charts.
inline RankChart gr_2n2(int n) {
  detail::require(n >= 3, "gr_2n2: need n >= 3");
  if (n == 3) return make_chart({{0, 0}, {1, 1}, {2, 1}});
  if (n == 4) return make_chart({{0, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}, {4, 2}});
  if (n == 5)
    return make_chart(
        {{0, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 2}, {4, 2}, {4, 2}, {5, 3}, {6, 3}});
  std::vector<Bidegree> gens = {{0, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 2},
                                {4, 2}, {4, 2}, {4, 2}};
  for (int p = 5; p <= n - 2; ++p) {
    gens.push_back({p, 2});
    gens.push_back({p, 2});
  }
  gens.push_back({n - 1, 2});
  gens.push_back({5, 3});
  for (int p = 6; p <= n; ++p) {
    gens.push_back({p, 3});
    gens.push_back({p, 3});
  }
  gens.push_back({n + 1, 3});
  for (int p = 8; p <= n + 1; ++p)
    for (int c = 0; c < (p - 7 + 1) / 2; ++c) gens.push_back({p, 4});
  for (int p = n + 2; p <= 2 * n - 4; ++p)
    for (int c = 0; c < n - 1 - (p + 1) / 2; ++c) gens.push_back({p, 4});
  return make_chart(std::move(gens));
}

// Stable two-sign ranks: what gr_2n2(n) settles to once n >= p + 2.
inline long long inf_gr2_rank(int p, int q) {
  detail::require(p >= 0, "inf_gr2_rank: need p >= 0");
  switch (q) {
    case 0:
      return p == 0 ? 1 : 0;
    case 1:
      return p == 1 || p == 2 ? 1 : 0;
    case 2:
      if (p == 2) return 1;
      if (p == 3) return 2;
      if (p == 4) return 3;
      return p >= 5 ? 2 : 0;
    case 3:
      if (p == 5) return 1;
      return p >= 6 ? 2 : 0;
    case 4:
      return p >= 8 ? (p - 7 + 1) / 2 : 0;
    default:
      return 0;
  }
}

// Stable one-sign ranks: partitions of p into k parts of any size with
// trace q (part sizes never exceed p, so the cap is p).
inline long long inf_kn1_rank(int p, int q, int k) {
  detail::require(p >= 0 && q >= 0 && k >= 0, "inf_kn1_rank: arguments must be nonnegative");
  return part(p, k, unbounded, q);
}

// Complex points double every suspension degree; odd bidegrees vanish.
inline RankChart complexify(const RankChart& chart) {
  std::vector<Bidegree> gens;
  gens.reserve(chart.generators.size());
  for (const Bidegree& g : chart.generators) gens.push_back({2 * g.p, 2 * g.q});
  return make_chart(std::move(gens));
}

// Conjugation action: the filtration collapses immediately, leaving one
// generator at (2i, i) per mod-2 singular class in degree 2i.
inline RankChart gr_conj(int k, int n) {
  detail::require(k >= 0 && k <= n, "gr_conj: need 0 <= k <= n");
  std::vector<Bidegree> gens;
  for (int i = 0; i <= k * (n - k); ++i) {
    const long long r = betti(k, n, i);
    for (long long c = 0; c < r; ++c) gens.push_back({2 * i, i});
  }
  return make_chart(std::move(gens));
}

}  // namespace rochart
