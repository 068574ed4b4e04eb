#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "rochart/mtwo.hpp"
#include "rochart/young.hpp"

namespace rochart {

enum class Field { real, complex, conj };

inline const char* field_name(Field f) {
  switch (f) {
    case Field::real: return "R";
    case Field::complex: return "C";
    case Field::conj: return "Cconj";
  }
  return "?";
}

// Ordered choice of trivial (+) and sign (-) coordinates for one
// construction of the ambient representation. For Field::conj every
// coordinate carries the conjugation action and the signs are ignored.
struct SignSequence {
  std::string signs;
  Field field = Field::real;

  int n() const { return static_cast<int>(signs.size()); }
  int minus_count() const {
    return static_cast<int>(std::count(signs.begin(), signs.end(), '-'));
  }

  friend bool operator==(const SignSequence&, const SignSequence&) = default;
};

inline SignSequence parse_signs(const std::string& text, Field field = Field::real) {
  detail::require(!text.empty(), "parse_signs: empty sequence");
  for (char c : text)
    detail::require(c == '+' || c == '-', "parse_signs: characters must be '+' or '-'");
  return SignSequence{text, field};
}

struct CellEntry {
  Partition label;
  Bidegree bidegree;

  friend bool operator==(const CellEntry&, const CellEntry&) = default;
};

struct CellTable {
  std::vector<CellEntry> entries;  // sorted by (p, q, label)
  SignSequence provenance;
  int k = 0;
};

// Weight of the cell labelled lambda in the construction s: for each jump
// position, count the free coordinates below it whose sign differs from
// the jump's sign.
inline int cell_weight(const Partition& lambda, const SignSequence& s) {
  const int n = s.n();
  const int k = static_cast<int>(lambda.size());
  detail::check_in_box(lambda, k, n, "cell_weight: partition outside the k-by-(n-k) box");
  const auto jumps = to_jumps(lambda, n).jumps;
  std::vector<bool> is_jump(static_cast<std::size_t>(n) + 1, false);
  for (int j : jumps) is_jump[static_cast<std::size_t>(j)] = true;
  int w = 0;
  for (int kappa : jumps)
    for (int i = 1; i < kappa; ++i)
      if (!is_jump[static_cast<std::size_t>(i)] &&
          s.signs[static_cast<std::size_t>(i - 1)] != s.signs[static_cast<std::size_t>(kappa - 1)])
        ++w;
  return w;
}

// Independent weight computation that simulates the sign action on the
// canonical matrix of the cell: place a pivot 1 in column j_r of row r and
// a free +1 in every earlier non-jump column, negate the '-' columns,
// renormalize each pivot to +1 by row negation, then count the free slots
// left negative.
inline int cell_weight_by_matrix(const Partition& lambda, const SignSequence& s) {
  const int n = s.n();
  const int k = static_cast<int>(lambda.size());
  detail::check_in_box(lambda, k, n, "cell_weight_by_matrix: partition outside the box");
  const auto jumps = to_jumps(lambda, n).jumps;
  std::vector<bool> is_jump(static_cast<std::size_t>(n) + 1, false);
  for (int j : jumps) is_jump[static_cast<std::size_t>(j)] = true;
  std::vector<std::vector<int>> mat(static_cast<std::size_t>(k),
                                    std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int r = 0; r < k; ++r) {
    mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(jumps[static_cast<std::size_t>(r)] - 1)] = 1;
    for (int c = 1; c < jumps[static_cast<std::size_t>(r)]; ++c)
      if (!is_jump[static_cast<std::size_t>(c)])
        mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] = 1;
  }
  for (int c = 1; c <= n; ++c)
    if (s.signs[static_cast<std::size_t>(c - 1)] == '-')
      for (int r = 0; r < k; ++r) mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] *= -1;
  int w = 0;
  for (int r = 0; r < k; ++r) {
    const int pivot =
        mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(jumps[static_cast<std::size_t>(r)] - 1)];
    for (int c = 1; c <= n; ++c) {
      if (c == jumps[static_cast<std::size_t>(r)] || is_jump[static_cast<std::size_t>(c)]) continue;
      const int v = mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] * pivot;
      if (v < 0) ++w;
    }
  }
  return w;
}

// One entry per partition in the k-by-(n-k) box. Real cells sit at
// (|lambda|, w); complex cells double both coordinates; conjugation cells
// sit at (2|lambda|, |lambda|) regardless of the signs.
inline CellTable ingredient_table(int k, const SignSequence& s) {
  const int n = s.n();
  detail::require(k >= 0 && k <= n, "ingredient_table: need 0 <= k <= n");
  CellTable table;
  table.provenance = s;
  table.k = k;
  for (const Partition& lambda : enumerate_partitions(k, n - k)) {
    const int boxes = box_count(lambda);
    Bidegree deg;
    switch (s.field) {
      case Field::real:
        deg = Bidegree{boxes, cell_weight(lambda, s)};
        break;
      case Field::complex:
        deg = Bidegree{2 * boxes, 2 * cell_weight(lambda, s)};
        break;
      case Field::conj:
        deg = Bidegree{2 * boxes, boxes};
        break;
    }
    table.entries.push_back(CellEntry{lambda, deg});
  }
  std::sort(table.entries.begin(), table.entries.end(),
            [](const CellEntry& a, const CellEntry& b) {
              if (a.bidegree != b.bidegree) return a.bidegree < b.bidegree;
              return a.label < b.label;
            });
  return table;
}

// k-1 trivial coordinates, one sign coordinate, n-k trivial coordinates:
// the construction whose cell weights equal the traces of their labels.
inline SignSequence canonical_kn1_signs(int k, int n) {
  detail::require(k >= 1 && k <= n, "canonical_kn1_signs: need 1 <= k <= n");
  std::string s(static_cast<std::size_t>(n), '+');
  s[static_cast<std::size_t>(k - 1)] = '-';
  return SignSequence{s, Field::real};
}

// Every length-n sequence with exactly q signs, ordered by ascending minus
// positions. Field::conj collapses to the single all-conjugation marker.
inline std::vector<SignSequence> enumerate_decompositions(int n, int q, Field field = Field::real) {
  detail::require(n >= 1, "enumerate_decompositions: need n >= 1");
  detail::require(q >= 0 && q <= n, "enumerate_decompositions: need 0 <= q <= n");
  if (field == Field::conj)
    return {SignSequence{std::string(static_cast<std::size_t>(n), '+'), field}};
  std::vector<SignSequence> out;
  std::vector<int> pos(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) pos[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    std::string s(static_cast<std::size_t>(n), '+');
    for (int p : pos) s[static_cast<std::size_t>(p - 1)] = '-';
    out.push_back(SignSequence{s, field});
    // advance the minus positions to the next combination
    int i = q - 1;
    while (i >= 0 && pos[static_cast<std::size_t>(i)] == n - (q - 1 - i)) --i;
    if (i < 0) break;
    ++pos[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < q; ++j)
      pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace rochart
