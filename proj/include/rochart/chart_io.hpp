#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rochart/mtwo.hpp"
#include "rochart/schubert.hpp"
#include "rochart/solver.hpp"

// Serialization and rendering for rank charts and ingredient tables:
// a canonical JSON document, CSV rows, and the figure-style text grid
// (weights as rows from the top down, dimensions as columns).

namespace rochart {

// One construction's worth of solver evidence, flattened for output.
struct ConstructionDiagnostic {
  std::string construction;
  std::size_t pair_count = 0;
  bool enumerated = false;
  bool overflow = false;
  bool pruned = false;
  std::size_t candidate_count = 0;
  std::optional<bool> contains_result;

  friend bool operator==(const ConstructionDiagnostic&, const ConstructionDiagnostic&) = default;
};

// Self-describing record of one computed chart. Only fields that are
// meaningful for the producing command are populated; emission skips the
// rest, so a document round-trips through JSON byte for byte.
struct ChartDocument {
  std::string schema = "1";
  std::optional<int> k;
  std::optional<int> n;
  std::optional<int> q;
  std::optional<int> p;
  std::string field = "R";          // "R", "C", or "Cconj"
  std::string source;               // "solver" or "formula"
  std::optional<std::string> family;
  std::string certification;        // solver status, or "closed-form"
  std::optional<std::string> certified_by;
  std::vector<Bidegree> generators;  // sorted lexicographically
  std::optional<std::string> note;
  std::vector<ConstructionDiagnostic> diagnostics;

  friend bool operator==(const ChartDocument&, const ChartDocument&) = default;
};

inline Field parse_field_name(const std::string& name) {
  if (name == "R") return Field::real;
  if (name == "C") return Field::complex;
  if (name == "Cconj") return Field::conj;
  detail::require(false, "field must be one of R, C, Cconj");
  return Field::real;
}

inline ChartDocument document_from_report(int k, int n, int q, Field field,
                                          const SolveReport& report) {
  ChartDocument doc;
  doc.k = k;
  doc.n = n;
  doc.q = q;
  doc.field = field_name(field);
  doc.source = "solver";
  doc.certification = solve_status_name(report.status);
  if (report.certified_by) doc.certified_by = report.certified_by->signs;
  if (report.status == SolveStatus::certified) doc.generators = report.result.generators;
  if (!report.note.empty()) doc.note = report.note;
  for (const ConstructionWitness& w : report.witnesses) {
    ConstructionDiagnostic d;
    d.construction = w.construction.signs;
    d.pair_count = w.pair_count;
    d.enumerated = w.enumerated;
    d.overflow = w.overflow;
    d.pruned = w.pruned;
    d.candidate_count = w.candidate_count;
    d.contains_result = w.contains_result;
    doc.diagnostics.push_back(std::move(d));
  }
  return doc;
}

inline ChartDocument document_from_formula(const std::string& family, const RankChart& chart) {
  ChartDocument doc;
  doc.source = "formula";
  doc.family = family;
  doc.certification = "closed-form";
  doc.generators = chart.generators;
  return doc;
}

inline nlohmann::json to_json(const ChartDocument& doc) {
  nlohmann::json j;
  j["schema"] = doc.schema;
  nlohmann::json params = nlohmann::json::object();
  if (doc.k) params["k"] = *doc.k;
  if (doc.n) params["n"] = *doc.n;
  if (doc.q) params["q"] = *doc.q;
  if (doc.p) params["p"] = *doc.p;
  params["field"] = doc.field;
  params["source"] = doc.source;
  if (doc.family) params["family"] = *doc.family;
  j["parameters"] = params;
  j["certification"] = doc.certification;
  if (doc.certified_by) j["certified_by"] = *doc.certified_by;
  nlohmann::json gens = nlohmann::json::array();
  for (const Bidegree& g : doc.generators) gens.push_back({g.p, g.q});
  j["generators"] = gens;
  if (doc.note) j["note"] = *doc.note;
  if (!doc.diagnostics.empty()) {
    nlohmann::json diags = nlohmann::json::array();
    for (const ConstructionDiagnostic& d : doc.diagnostics) {
      nlohmann::json e;
      e["construction"] = d.construction;
      e["pair_count"] = d.pair_count;
      e["enumerated"] = d.enumerated;
      e["overflow"] = d.overflow;
      e["pruned"] = d.pruned;
      e["candidate_count"] = d.candidate_count;
      if (d.contains_result)
        e["contains_result"] = *d.contains_result;
      else
        e["contains_result"] = nullptr;
      diags.push_back(std::move(e));
    }
    j["diagnostics"] = std::move(diags);
  }
  return j;
}

inline ChartDocument document_from_json(const nlohmann::json& j) {
  ChartDocument doc;
  doc.schema = j.at("schema").get<std::string>();
  detail::require(doc.schema == "1", "unsupported document schema");
  const nlohmann::json& params = j.at("parameters");
  if (params.contains("k")) doc.k = params.at("k").get<int>();
  if (params.contains("n")) doc.n = params.at("n").get<int>();
  if (params.contains("q")) doc.q = params.at("q").get<int>();
  if (params.contains("p")) doc.p = params.at("p").get<int>();
  doc.field = params.at("field").get<std::string>();
  doc.source = params.at("source").get<std::string>();
  if (params.contains("family")) doc.family = params.at("family").get<std::string>();
  doc.certification = j.at("certification").get<std::string>();
  if (j.contains("certified_by")) doc.certified_by = j.at("certified_by").get<std::string>();
  for (const nlohmann::json& g : j.at("generators")) {
    detail::require(g.is_array() && g.size() == 2, "generator entries must be [p, q] pairs");
    doc.generators.push_back({g.at(0).get<int>(), g.at(1).get<int>()});
  }
  detail::require(std::is_sorted(doc.generators.begin(), doc.generators.end()),
                  "generator list must be sorted");
  if (j.contains("note")) doc.note = j.at("note").get<std::string>();
  if (j.contains("diagnostics")) {
    for (const nlohmann::json& e : j.at("diagnostics")) {
      ConstructionDiagnostic d;
      d.construction = e.at("construction").get<std::string>();
      d.pair_count = e.at("pair_count").get<std::size_t>();
      d.enumerated = e.at("enumerated").get<bool>();
      d.overflow = e.at("overflow").get<bool>();
      d.pruned = e.at("pruned").get<bool>();
      d.candidate_count = e.at("candidate_count").get<std::size_t>();
      if (!e.at("contains_result").is_null())
        d.contains_result = e.at("contains_result").get<bool>();
      doc.diagnostics.push_back(std::move(d));
    }
  }
  return doc;
}

inline std::string render_json(const ChartDocument& doc) { return to_json(doc).dump(2) + "\n"; }

inline ChartDocument document_from_json_text(const std::string& text) {
  return document_from_json(nlohmann::json::parse(text));
}

// CSV rows of the distinct bidegrees with their free ranks, ascending.
inline std::string render_csv(const RankChart& chart) {
  std::ostringstream out;
  out << "p,q,free_rank\n";
  for (std::size_t i = 0; i < chart.generators.size();) {
    std::size_t next = i;
    while (next < chart.generators.size() && chart.generators[next] == chart.generators[i]) ++next;
    out << chart.generators[i].p << ',' << chart.generators[i].q << ',' << (next - i) << '\n';
    i = next;
  }
  return out.str();
}

namespace detail {

inline std::string right_align(const std::string& s, std::size_t width) {
  return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

inline std::string left_align(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

}  // namespace detail

// Figure-style grid: one row per weight (highest weight on top), one
// column per topological dimension, "." for an empty position. The last
// line labels the dimension columns.
inline std::string render_text_grid(const RankChart& chart) {
  if (chart.generators.empty()) return "(empty chart)\n";
  int pmax = 0, qmin = 0, qmax = 0;
  std::map<std::pair<int, int>, int> counts;
  for (const Bidegree& g : chart.generators) {
    pmax = std::max(pmax, g.p);
    qmin = std::min(qmin, g.q);
    qmax = std::max(qmax, g.q);
    ++counts[{g.q, g.p}];
  }
  std::size_t cell = 1;
  for (const auto& [key, c] : counts) cell = std::max(cell, std::to_string(c).size());
  cell = std::max(cell, std::to_string(pmax).size());
  std::size_t head = std::max<std::size_t>(1, std::to_string(qmin).size());
  head = std::max(head, std::to_string(qmax).size());
  std::ostringstream out;
  for (int q = qmax; q >= qmin; --q) {
    out << "q " << detail::right_align(std::to_string(q), head) << " |";
    for (int p = 0; p <= pmax; ++p) {
      auto it = counts.find({q, p});
      out << ' '
          << detail::right_align(it == counts.end() ? "." : std::to_string(it->second), cell);
    }
    out << '\n';
  }
  out << "  " << detail::right_align("p", head) << " |";
  for (int p = 0; p <= pmax; ++p) out << ' ' << detail::right_align(std::to_string(p), cell);
  out << '\n';
  return out.str();
}

// Inverse of render_text_grid on its weight rows: any line of the form
// "q <w> | t0 t1 ..." contributes tokens, "." meaning zero, a number
// meaning that many generators at (column index, w). Other lines are
// ignored, so a full command report re-parses to its chart.
inline RankChart parse_text_grid(const std::string& text) {
  std::vector<Bidegree> gens;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const std::size_t bar = line.find('|');
    if (bar == std::string::npos) continue;
    std::istringstream headstream(line.substr(0, bar));
    std::string tag;
    int q = 0;
    if (!(headstream >> tag) || tag != "q") continue;
    if (!(headstream >> q)) continue;
    std::string trailing;
    if (headstream >> trailing) continue;
    std::istringstream tokens(line.substr(bar + 1));
    std::string token;
    for (int p = 0; tokens >> token; ++p) {
      if (token == ".") continue;
      const int count = std::stoi(token);
      detail::require(count >= 0, "grid counts must be nonnegative");
      for (int c = 0; c < count; ++c) gens.push_back({p, q});
    }
  }
  return make_chart(std::move(gens));
}

inline std::string partition_label(const Partition& lambda) {
  std::string out = "[";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(lambda[i]);
  }
  out += ']';
  return out;
}

// Ingredient table as a grid of cell labels: rows by weight (highest on
// top), columns by topological dimension, several labels sharing one
// bidegree printed side by side inside the cell.
inline std::string render_ingredients_text(const CellTable& table) {
  std::ostringstream out;
  out << "construction " << table.provenance.signs << "  k=" << table.k
      << "  field=" << field_name(table.provenance.field) << '\n';
  if (table.entries.empty()) return out.str();
  int pmax = 0, qmin = 0, qmax = 0;
  std::map<std::pair<int, int>, std::string> cells;
  for (const CellEntry& e : table.entries) {
    pmax = std::max(pmax, e.bidegree.p);
    qmin = std::min(qmin, e.bidegree.q);
    qmax = std::max(qmax, e.bidegree.q);
    std::string& cell = cells[{e.bidegree.q, e.bidegree.p}];
    if (!cell.empty()) cell += ' ';
    cell += partition_label(e.label);
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(pmax) + 1, 1);
  for (int p = 0; p <= pmax; ++p)
    width[static_cast<std::size_t>(p)] =
        std::max(width[static_cast<std::size_t>(p)], std::to_string(p).size());
  for (const auto& [key, cell] : cells)
    width[static_cast<std::size_t>(key.second)] =
        std::max(width[static_cast<std::size_t>(key.second)], cell.size());
  std::size_t head = std::max<std::size_t>(1, std::to_string(qmin).size());
  head = std::max(head, std::to_string(qmax).size());
  for (int q = qmax; q >= qmin; --q) {
    out << "q " << detail::right_align(std::to_string(q), head) << " |";
    for (int p = 0; p <= pmax; ++p) {
      auto it = cells.find({q, p});
      out << ' '
          << detail::left_align(it == cells.end() ? "." : it->second,
                                width[static_cast<std::size_t>(p)]);
    }
    out << '\n';
  }
  out << "  " << detail::right_align("p", head) << " |";
  for (int p = 0; p <= pmax; ++p)
    out << ' ' << detail::left_align(std::to_string(p), width[static_cast<std::size_t>(p)]);
  out << '\n';
  return out.str();
}

inline std::string render_ingredients_csv(const CellTable& table) {
  std::ostringstream out;
  out << "label,p,q\n";
  for (const CellEntry& e : table.entries)
    out << partition_label(e.label) << ',' << e.bidegree.p << ',' << e.bidegree.q << '\n';
  return out.str();
}

inline nlohmann::json ingredients_to_json(const CellTable& table) {
  nlohmann::json j;
  j["schema"] = "1";
  j["k"] = table.k;
  j["signs"] = table.provenance.signs;
  j["field"] = field_name(table.provenance.field);
  nlohmann::json entries = nlohmann::json::array();
  for (const CellEntry& e : table.entries) {
    nlohmann::json item;
    item["label"] = e.label;
    item["p"] = e.bidegree.p;
    item["q"] = e.bidegree.q;
    entries.push_back(std::move(item));
  }
  j["entries"] = std::move(entries);
  return j;
}

inline std::string render_ingredients_json(const CellTable& table) {
  return ingredients_to_json(table).dump(2) + "\n";
}

}  // namespace rochart
