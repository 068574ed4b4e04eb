#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rochart/young.hpp"

namespace rochart {

struct Bidegree {
  int p = 0;  // topological dimension
  int q = 0;  // weight

  constexpr int fixdim() const { return p - q; }

  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

// Finite multiset of suspension bidegrees of a free module. Generators are
// kept sorted; equality compares the multiset only, never the metadata.
struct RankChart {
  std::vector<Bidegree> generators;
  std::map<std::string, std::string> metadata;

  friend bool operator==(const RankChart& a, const RankChart& b) {
    return a.generators == b.generators;
  }
};

inline RankChart make_chart(std::vector<Bidegree> generators) {
  std::sort(generators.begin(), generators.end());
  return RankChart{std::move(generators), {}};
}

// Dimension of the cohomology of a point at bidegree (a, b): a polynomial
// cone above the origin and a dual cone below it, nothing else.
constexpr int m2_dim(int a, int b) {
  if (a >= 0 && b >= a) return 1;
  if (a <= 0 && b <= a - 2) return 1;
  return 0;
}

inline int free_rank_at(const RankChart& chart, int p, int q) {
  const Bidegree probe{p, q};
  return static_cast<int>(
      std::count(chart.generators.begin(), chart.generators.end(), probe));
}

inline long long group_rank_at(const RankChart& chart, int p, int q) {
  long long total = 0;
  for (const Bidegree& g : chart.generators) total += m2_dim(p - g.p, q - g.q);
  return total;
}

// A differential from a free summand at src into the dual cone over tgt
// trades their fixed-set dimensions: the source rises, the target drops,
// both by the fixdim gap. Topological dimensions never move.
inline std::pair<Bidegree, Bidegree> kronholm_shift(Bidegree src, Bidegree tgt) {
  detail::require(src.fixdim() > tgt.fixdim(),
                  "kronholm_shift: source must have larger fixed-set dimension");
  detail::require(tgt.p >= src.p + 1, "kronholm_shift: target must sit in higher dimension");
  const int s = src.fixdim() - tgt.fixdim();
  return {Bidegree{src.p, src.q + s}, Bidegree{tgt.p, tgt.q - s}};
}

}  // namespace rochart
