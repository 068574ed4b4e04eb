#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rochart/mtwo.hpp"
#include "rochart/schubert.hpp"
#include "rochart/young.hpp"

namespace rochart {

// All (source index, target index) pairs that could carry a nonzero
// differential: source label strictly contained in the target label and
// source fixed-set dimension strictly larger. Containment already forces
// the target into higher topological dimension.
inline std::vector<std::pair<int, int>> admissible_pairs(const CellTable& table) {
  std::vector<std::pair<int, int>> out;
  const int m = static_cast<int>(table.entries.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const CellEntry& a = table.entries[static_cast<std::size_t>(i)];
      const CellEntry& b = table.entries[static_cast<std::size_t>(j)];
      if (a.label == b.label || !contains(a.label, b.label)) continue;
      if (a.bidegree.fixdim() <= b.bidegree.fixdim()) continue;
      out.push_back({i, j});
    }
  return out;
}

// One simultaneous round of differentials: admissible pairs whose endpoint
// cells are pairwise distinct, so every cell is shifted at most once.
struct DifferentialPattern {
  std::vector<std::pair<int, int>> pairs;
};

inline bool is_valid_pattern(const CellTable& table, const DifferentialPattern& pattern) {
  const auto admissible = admissible_pairs(table);
  const std::set<std::pair<int, int>> allowed(admissible.begin(), admissible.end());
  std::set<int> endpoints;
  for (const auto& pr : pattern.pairs) {
    if (!allowed.count(pr)) return false;
    if (!endpoints.insert(pr.first).second) return false;
    if (!endpoints.insert(pr.second).second) return false;
  }
  return true;
}

inline RankChart apply_pattern(const CellTable& table, const DifferentialPattern& pattern) {
  detail::require(is_valid_pattern(table, pattern),
                  "apply_pattern: pairs must be admissible with distinct endpoints");
  std::vector<Bidegree> generators;
  generators.reserve(table.entries.size());
  for (const CellEntry& e : table.entries) generators.push_back(e.bidegree);
  for (const auto& [src, tgt] : pattern.pairs) {
    const auto shifted = kronholm_shift(generators[static_cast<std::size_t>(src)],
                                        generators[static_cast<std::size_t>(tgt)]);
    generators[static_cast<std::size_t>(src)] = shifted.first;
    generators[static_cast<std::size_t>(tgt)] = shifted.second;
  }
  return make_chart(std::move(generators));
}

namespace detail {

// A cell's weight move under one differential round: topological dimension,
// weight before, weight after. A sorted list of these is a canonical
// fingerprint of what a matching did to the table.
using ShiftDelta = std::vector<std::array<int, 3>>;

struct DeltaSet {
  // (whole-table delta, delta restricted to pairs between prefix cells)
  std::set<std::pair<ShiftDelta, ShiftDelta>> deltas;
  bool overflow = false;
};

// Enumerates the distinct shift fingerprints over all valid differential
// patterns without walking every matching: targets are processed in order
// while free sources collapse into interchangeability classes keyed by
// bidegree, prefix flag, and adjacency to the targets not yet processed.
// Cells acting as both source and target are tracked individually. States
// whose class counts and fingerprints agree are merged, which keeps the
// frontier polynomial in practice; past state_cap the result is abandoned
// and flagged instead of truncated.
inline DeltaSet enumerate_shift_deltas(const CellTable& table,
                                       const std::vector<std::pair<int, int>>& pairs,
                                       const std::vector<char>& prefix_cell,
                                       std::size_t state_cap) {
  DeltaSet out;
  std::set<int> source_cells, target_cells;
  for (const auto& [a, b] : pairs) {
    source_cells.insert(a);
    target_cells.insert(b);
  }
  const std::vector<int> targets(target_cells.begin(), target_cells.end());
  const int nt = static_cast<int>(targets.size());
  if (nt > 64) {
    out.overflow = true;
    return out;
  }
  std::map<int, int> target_pos;
  for (int j = 0; j < nt; ++j) target_pos[targets[static_cast<std::size_t>(j)]] = j;
  std::map<int, std::uint64_t> adjacency;
  for (const auto& [a, b] : pairs)
    adjacency[a] |= std::uint64_t{1} << target_pos.at(b);

  struct SourceClass {
    Bidegree deg;
    char prefix = 0;
    std::uint64_t remaining = 0;  // adjacency to targets not yet processed
    int shared_cell = -1;         // cell index when the class is a lone shared cell
  };
  // Recomputed before each target: classes only merge as targets retire, so
  // per-class free counts project forward by summation.
  std::vector<std::vector<SourceClass>> classes(static_cast<std::size_t>(nt) + 1);
  std::vector<std::map<int, int>> class_of(static_cast<std::size_t>(nt) + 1);
  for (int idx = 0; idx <= nt; ++idx) {
    std::map<std::tuple<int, int, int, std::uint64_t, int>, int> ids;
    for (const auto& [cell, mask] : adjacency) {
      const std::uint64_t remaining = mask >> idx;
      const bool shared = target_cells.count(cell) != 0;
      const bool slot_ahead = shared && target_pos.at(cell) >= idx;
      if (remaining == 0 && !slot_ahead) continue;
      const CellEntry& e = table.entries[static_cast<std::size_t>(cell)];
      const auto key = std::make_tuple(e.bidegree.p, e.bidegree.q,
                                       static_cast<int>(prefix_cell[static_cast<std::size_t>(cell)]),
                                       remaining, shared ? cell : -1);
      const auto [it, fresh] = ids.try_emplace(key, static_cast<int>(ids.size()));
      if (fresh)
        classes[static_cast<std::size_t>(idx)].push_back(
            SourceClass{e.bidegree, prefix_cell[static_cast<std::size_t>(cell)], remaining,
                        shared ? cell : -1});
      class_of[static_cast<std::size_t>(idx)][cell] = it->second;
    }
  }

  using State = std::tuple<std::vector<int>, ShiftDelta, ShiftDelta>;
  std::set<State> states;
  {
    std::vector<int> counts(classes[0].size(), 0);
    for (const auto& [cell, cls] : class_of[0]) ++counts[static_cast<std::size_t>(cls)];
    states.insert(State{std::move(counts), {}, {}});
  }
  for (int idx = 0; idx < nt; ++idx) {
    const auto& cur = classes[static_cast<std::size_t>(idx)];
    const auto& cur_of = class_of[static_cast<std::size_t>(idx)];
    const auto& next_of = class_of[static_cast<std::size_t>(idx) + 1];
    std::vector<int> project(cur.size(), -1);
    for (const auto& [cell, cls] : cur_of) {
      const auto it = next_of.find(cell);
      if (it != next_of.end()) project[static_cast<std::size_t>(cls)] = it->second;
    }
    const int target_cell = targets[static_cast<std::size_t>(idx)];
    const CellEntry& target = table.entries[static_cast<std::size_t>(target_cell)];
    const auto own = cur_of.find(target_cell);
    const int own_class = own == cur_of.end() ? -1 : own->second;

    std::set<State> next;
    const auto push = [&](const std::vector<int>& counts, ShiftDelta full, ShiftDelta pre) {
      std::vector<int> projected(classes[static_cast<std::size_t>(idx) + 1].size(), 0);
      for (std::size_t c = 0; c < cur.size(); ++c)
        if (project[c] >= 0) projected[static_cast<std::size_t>(project[c])] += counts[c];
      next.insert(State{std::move(projected), std::move(full), std::move(pre)});
    };
    for (const auto& [counts, full, pre] : states) {
      push(counts, full, pre);  // leave this target unmatched
      if (own_class >= 0 && counts[static_cast<std::size_t>(own_class)] == 0)
        continue;  // the cell already acted as a source
      for (std::size_t c = 0; c < cur.size(); ++c) {
        if (static_cast<int>(c) == own_class || counts[c] == 0 ||
            (cur[c].remaining & std::uint64_t{1}) == 0)
          continue;
        std::vector<int> reduced = counts;
        --reduced[c];
        if (own_class >= 0) reduced[static_cast<std::size_t>(own_class)] = 0;
        const auto shifted = kronholm_shift(cur[c].deg, target.bidegree);
        const std::array<int, 3> src_move{cur[c].deg.p, cur[c].deg.q, shifted.first.q};
        const std::array<int, 3> tgt_move{target.bidegree.p, target.bidegree.q,
                                          shifted.second.q};
        ShiftDelta full2 = full;
        full2.insert(std::upper_bound(full2.begin(), full2.end(), src_move), src_move);
        full2.insert(std::upper_bound(full2.begin(), full2.end(), tgt_move), tgt_move);
        ShiftDelta pre2 = pre;
        if (cur[c].prefix && prefix_cell[static_cast<std::size_t>(target_cell)]) {
          pre2.insert(std::upper_bound(pre2.begin(), pre2.end(), src_move), src_move);
          pre2.insert(std::upper_bound(pre2.begin(), pre2.end(), tgt_move), tgt_move);
        }
        push(reduced, std::move(full2), std::move(pre2));
        if (next.size() > state_cap) {
          out.overflow = true;
          return out;
        }
      }
    }
    states = std::move(next);
  }
  for (const auto& [counts, full, pre] : states)
    out.deltas.insert({full, pre});
  return out;
}

// Rewrites a sorted bidegree multiset through a shift fingerprint: every
// touched cell loses its old weight entry and gains the shifted one.
inline std::vector<Bidegree> apply_delta(const std::vector<Bidegree>& base,
                                         const ShiftDelta& delta) {
  std::vector<Bidegree> result = base;
  for (const auto& move : delta) {
    const Bidegree old{move[0], move[1]};
    const auto it = std::lower_bound(result.begin(), result.end(), old);
    result.erase(it);
  }
  for (const auto& move : delta) {
    const Bidegree fresh{move[0], move[2]};
    result.insert(std::upper_bound(result.begin(), result.end(), fresh), fresh);
  }
  return result;
}

inline std::size_t delta_state_cap(std::size_t cap) {
  const std::size_t floor_cap = std::size_t{1} << 20;
  return std::max(cap * 16, floor_cap);
}

}  // namespace detail

struct CandidateOutcomes {
  std::vector<RankChart> charts;  // deduplicated, sorted; empty when overflow
  bool overflow = false;
};

// Every achievable generator multiset over all differential patterns of the
// table, the untouched table included. Signals overflow rather than
// returning a truncated set.
inline CandidateOutcomes candidate_outcomes(const CellTable& table, std::size_t cap = 100000) {
  detail::require(cap > 0, "candidate_outcomes: cap must be positive");
  CandidateOutcomes out;
  const auto pairs = admissible_pairs(table);
  const std::vector<char> no_prefix(table.entries.size(), 0);
  const auto enumerated =
      detail::enumerate_shift_deltas(table, pairs, no_prefix, detail::delta_state_cap(cap));
  if (enumerated.overflow) {
    out.overflow = true;
    return out;
  }
  std::vector<Bidegree> base;
  base.reserve(table.entries.size());
  for (const CellEntry& e : table.entries) base.push_back(e.bidegree);
  std::sort(base.begin(), base.end());
  std::set<std::vector<Bidegree>> charts;
  for (const auto& [full, pre] : enumerated.deltas) {
    charts.insert(detail::apply_delta(base, full));
    if (charts.size() > cap) {
      out.overflow = true;
      return out;
    }
  }
  out.charts.reserve(charts.size());
  for (const auto& generators : charts) out.charts.push_back(RankChart{generators, {}});
  return out;
}

enum class SolveStatus { certified, ambiguous, inconclusive };

inline const char* solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::certified: return "certified";
    case SolveStatus::ambiguous: return "ambiguous";
    case SolveStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

struct ConstructionWitness {
  SignSequence construction;
  std::size_t pair_count = 0;
  bool enumerated = false;  // candidate set was computed to completion
  bool overflow = false;    // enumeration abandoned past the cap
  bool pruned = false;      // prefix filtering was in effect
  std::size_t candidate_count = 0;
  std::optional<bool> contains_result;  // certified chart lies in this set
};

struct SolveReport {
  SolveStatus status = SolveStatus::inconclusive;
  RankChart result;  // populated when certified
  std::vector<RankChart> candidates;
  std::vector<ConstructionWitness> witnesses;
  std::optional<SignSequence> certified_by;
  std::string note;
};

struct SolveOptions {
  bool prefix_pruning = true;
  std::size_t max_candidates = 100000;
};

inline SolveReport solve(int k, int n, int q, Field field = Field::real,
                         const SolveOptions& options = {});

namespace detail {

struct ConstructionWork {
  SignSequence signs;
  CellTable table;
  std::vector<std::pair<int, int>> pairs;
  std::vector<char> prefix_cell;      // jumps confined to the first n-1 slots
  std::vector<Bidegree> prefix_base;  // their bidegrees, sorted
  bool prunable = false;              // last slot is '+', so the prefix keeps all q signs
};

// Candidate charts of one construction, optionally filtered so the induced
// behaviour on the prefix cells reproduces a certified sub-answer.
struct ConstructionCandidates {
  std::set<std::vector<Bidegree>> charts;
  bool overflow = false;
  bool pruned = false;
};

inline ConstructionCandidates construction_candidates(
    const ConstructionWork& work, const std::optional<std::vector<Bidegree>>& sub_answer,
    std::size_t cap) {
  ConstructionCandidates out;
  const auto enumerated = enumerate_shift_deltas(work.table, work.pairs, work.prefix_cell,
                                                 delta_state_cap(cap));
  if (enumerated.overflow) {
    out.overflow = true;
    return out;
  }
  std::vector<Bidegree> base;
  base.reserve(work.table.entries.size());
  for (const CellEntry& e : work.table.entries) base.push_back(e.bidegree);
  std::sort(base.begin(), base.end());
  out.pruned = sub_answer.has_value();
  for (const auto& [full, pre] : enumerated.deltas) {
    if (sub_answer && apply_delta(work.prefix_base, pre) != *sub_answer) continue;
    out.charts.insert(apply_delta(base, full));
    if (out.charts.size() > cap) {
      out.overflow = true;
      out.charts.clear();
      return out;
    }
  }
  return out;
}

inline std::string table_fingerprint(const CellTable& table, bool prunable) {
  std::string key;
  for (const CellEntry& e : table.entries) {
    for (int part : e.label) key += std::to_string(part) + ',';
    key += ':' + std::to_string(e.bidegree.p) + ',' + std::to_string(e.bidegree.q) + ';';
  }
  key += '#' + std::to_string(static_cast<int>(prunable));
  return key;
}

inline RankChart chart_from_generators(std::vector<Bidegree> generators) {
  return RankChart{std::move(generators), {}};
}

}  // namespace detail

// Plays every construction of Gr_k over a length-n sequence with q signs off
// against the others. A construction admitting no differentials certifies
// its table outright; otherwise candidate sets are enumerated until one pins
// a single chart, falling back to the cross-construction intersection.
// Prefix pruning applies only to constructions ending in '+': there the
// ambient space grows by a trivial summand, the prefix cells carry the same
// weights as in the length-(n-1) problem with the same q, and restriction
// forces the matching on prefix cells to reproduce that sub-answer. Ending
// in '-' the added summand is sign-reversed and the sub-answer no longer
// constrains the matching (a differential may leave the prefix), so those
// constructions are enumerated unpruned.
inline SolveReport solve(int k, int n, int q, Field field, const SolveOptions& options) {
  detail::require(0 <= k && k <= n, "solve: need 0 <= k <= n");
  detail::require(0 <= q && q <= n, "solve: need 0 <= q <= n");
  detail::require(options.max_candidates > 0, "solve: max_candidates must be positive");

  using MemoKey = std::tuple<int, int, int, int, bool, std::size_t>;
  static std::map<MemoKey, SolveReport> memo;
  static std::mutex memo_mutex;
  const MemoKey key{k, n, q, static_cast<int>(field), options.prefix_pruning,
                    options.max_candidates};
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    const auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  SolveReport report;
  if (n == 0) {
    report.status = SolveStatus::certified;
    report.result = make_chart({Bidegree{0, 0}});
    report.candidates = {report.result};
    report.note = "point space";
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(key, report);
    return report;
  }

  // Distinct sign sequences frequently give byte-identical tables; they can
  // only be merged when their pruning eligibility matches too.
  std::vector<detail::ConstructionWork> work;
  {
    std::set<std::string> seen;
    for (const SignSequence& s : enumerate_decompositions(n, q, field)) {
      detail::ConstructionWork item;
      item.signs = s;
      item.table = ingredient_table(k, s);
      item.prunable = s.signs.back() == '+';
      if (!seen.insert(detail::table_fingerprint(item.table, item.prunable)).second) continue;
      item.pairs = admissible_pairs(item.table);
      item.prefix_cell.assign(item.table.entries.size(), 0);
      for (std::size_t i = 0; i < item.table.entries.size(); ++i) {
        const auto jumps = to_jumps(item.table.entries[i].label, n).jumps;
        item.prefix_cell[i] = jumps.empty() || jumps.back() <= n - 1;
        if (item.prefix_cell[i])
          item.prefix_base.push_back(item.table.entries[i].bidegree);
      }
      std::sort(item.prefix_base.begin(), item.prefix_base.end());
      work.push_back(std::move(item));
    }
  }

  const auto base_chart = [](const detail::ConstructionWork& item) {
    std::vector<Bidegree> generators;
    generators.reserve(item.table.entries.size());
    for (const CellEntry& e : item.table.entries) generators.push_back(e.bidegree);
    return make_chart(std::move(generators));
  };

  const auto finalize = [&](SolveReport r) {
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(key, r);
    return r;
  };

  // A construction with no admissible pairs leaves nothing to decide.
  for (const auto& item : work) {
    if (!item.pairs.empty()) continue;
    report.status = SolveStatus::certified;
    report.result = base_chart(item);
    report.candidates = {report.result};
    report.certified_by = item.signs;
    for (const auto& other : work) {
      ConstructionWitness w;
      w.construction = other.signs;
      w.pair_count = other.pairs.size();
      if (&other == &item) {
        w.enumerated = true;
        w.candidate_count = 1;
        w.contains_result = true;
      }
      report.witnesses.push_back(std::move(w));
    }
    return finalize(std::move(report));
  }

  // The shared prefix sub-answer, resolved lazily on first use.
  std::optional<std::optional<std::vector<Bidegree>>> sub_answer;
  const auto prefix_sub_answer = [&]() -> const std::optional<std::vector<Bidegree>>& {
    if (!sub_answer) {
      std::optional<std::vector<Bidegree>> answer;
      if (options.prefix_pruning && n - 1 >= k && field != Field::conj) {
        const SolveReport sub = solve(k, n - 1, q, field, options);
        if (sub.status == SolveStatus::certified) answer = sub.result.generators;
      }
      sub_answer = std::move(answer);
    }
    return *sub_answer;
  };
  const std::optional<std::vector<Bidegree>> no_sub_answer;

  std::vector<detail::ConstructionCandidates> computed(work.size());
  std::vector<bool> attempted(work.size(), false);
  bool any_overflow = false;
  for (std::size_t i = 0; i < work.size(); ++i) {
    const auto& item = work[i];
    computed[i] = detail::construction_candidates(
        item, item.prunable ? prefix_sub_answer() : no_sub_answer, options.max_candidates);
    attempted[i] = true;
    any_overflow = any_overflow || computed[i].overflow;
    if (computed[i].overflow || computed[i].charts.size() != 1) continue;

    report.status = SolveStatus::certified;
    report.result = detail::chart_from_generators(*computed[i].charts.begin());
    report.candidates = {report.result};
    report.certified_by = item.signs;
    for (std::size_t j = 0; j < work.size(); ++j) {
      ConstructionWitness w;
      w.construction = work[j].signs;
      w.pair_count = work[j].pairs.size();
      if (attempted[j]) {
        w.enumerated = !computed[j].overflow;
        w.overflow = computed[j].overflow;
        w.pruned = computed[j].pruned;
        w.candidate_count = computed[j].charts.size();
        if (w.enumerated)
          w.contains_result = computed[j].charts.count(report.result.generators) != 0;
      }
      report.witnesses.push_back(std::move(w));
    }
    return finalize(std::move(report));
  }

  // No construction pinned a unique chart; intersect what completed.
  std::optional<std::set<std::vector<Bidegree>>> intersection;
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (computed[i].overflow) continue;
    if (!intersection) {
      intersection = computed[i].charts;
      continue;
    }
    std::set<std::vector<Bidegree>> kept;
    for (const auto& chart : *intersection)
      if (computed[i].charts.count(chart)) kept.insert(chart);
    intersection = std::move(kept);
  }

  for (std::size_t j = 0; j < work.size(); ++j) {
    ConstructionWitness w;
    w.construction = work[j].signs;
    w.pair_count = work[j].pairs.size();
    w.enumerated = !computed[j].overflow;
    w.overflow = computed[j].overflow;
    w.pruned = computed[j].pruned;
    w.candidate_count = computed[j].charts.size();
    report.witnesses.push_back(std::move(w));
  }

  if (intersection && intersection->size() == 1 && !any_overflow) {
    report.status = SolveStatus::certified;
    report.result = detail::chart_from_generators(*intersection->begin());
    report.candidates = {report.result};
    report.note = "certified by cross-construction intersection";
    for (std::size_t j = 0; j < work.size(); ++j)
      report.witnesses[j].contains_result =
          computed[j].charts.count(report.result.generators) != 0;
    return finalize(std::move(report));
  }

  if (any_overflow) {
    report.status = SolveStatus::inconclusive;
    report.note = "candidate enumeration overflowed; evidence incomplete";
    if (intersection)
      for (const auto& chart : *intersection)
        report.candidates.push_back(detail::chart_from_generators(chart));
    return finalize(std::move(report));
  }

  report.status = SolveStatus::ambiguous;
  if (intersection) {
    for (const auto& chart : *intersection)
      report.candidates.push_back(detail::chart_from_generators(chart));
    if (intersection->empty())
      report.note =
          "no chart lies in every candidate set; the single-round shift model "
          "cannot realize the answer in at least one construction";
  }
  return finalize(std::move(report));
}

}  // namespace rochart
