#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "rochart/chart_io.hpp"
#include "rochart/formulas.hpp"
#include "rochart/solver.hpp"

// Command-line front end. Exit codes: 0 success (including a certified
// solve and a vacuously passing verify), 1 usage or domain error, 2 an
// ambiguous solve or a verify mismatch, 3 an inconclusive solve.

namespace rochart {

namespace cli_detail {

struct VerifyCheck {
  std::string name;
  std::size_t instances = 0;
  std::vector<std::string> failures;
};

inline void emit_chart(const ChartDocument& doc, const RankChart& chart,
                       const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << render_json(doc);
    return;
  }
  if (format == "csv") {
    out << render_csv(chart);
    return;
  }
  out << render_text_grid(chart);
}

inline void emit_rank(const std::string& family, const std::vector<std::pair<std::string, int>>& params,
                      long long rank, const std::string& format, std::ostream& out) {
  if (format == "json") {
    nlohmann::json j;
    j["schema"] = "1";
    j["source"] = "formula";
    j["family"] = family;
    for (const auto& [name, value] : params) j[name] = value;
    j["rank"] = rank;
    out << j.dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    std::string header, row;
    for (const auto& [name, value] : params) {
      header += name + ',';
      row += std::to_string(value) + ',';
    }
    out << header << "rank\n" << row << rank << '\n';
    return;
  }
  out << rank << '\n';
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bredon cohomology rank charts of real and complex Grassmannians"};
  app.name("rochart");
  app.require_subcommand(0, 1);

  // ingredients: the cell table of one construction.
  int ing_k = 0;
  std::string ing_signs, ing_field = "R", ing_format = "text";
  CLI::App* ingredients =
      app.add_subcommand("ingredients", "List the cells of one construction with their bidegrees");
  ingredients->add_option("-k", ing_k, "number of planes")->required();
  ingredients->add_option("-s,--signs", ing_signs, "construction as a string of + and -")
      ->required();
  ingredients->add_option("--field", ing_field, "coefficient action: R, C, or Cconj")
      ->check(CLI::IsMember({"R", "C", "Cconj"}));
  ingredients->add_option("--format", ing_format, "text, json, or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // solve: cross-construction elimination.
  int s_k = 0, s_n = 0, s_q = 0;
  std::string s_field = "R", s_format = "text";
  bool s_pruning = true;
  std::size_t s_cap = 100000;
  CLI::App* solvecmd = app.add_subcommand(
      "solve", "Determine one chart by differential-pattern elimination across constructions");
  solvecmd->add_option("-k", s_k, "number of planes")->required();
  solvecmd->add_option("-n", s_n, "ambient dimension")->required();
  solvecmd->add_option("-q", s_q, "number of sign coordinates")->required();
  solvecmd->add_option("--field", s_field, "coefficient action: R, C, or Cconj")
      ->check(CLI::IsMember({"R", "C", "Cconj"}));
  solvecmd->add_option("--format", s_format, "text, json, or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  solvecmd->add_flag("--prefix-pruning,!--no-prefix-pruning", s_pruning,
                     "reuse smaller certified charts to filter candidate sets (default on)");
  solvecmd->add_option("--max-candidates", s_cap, "per-construction enumeration cap");

  // formula: closed forms and stable ranks.
  std::string f_family, f_format = "text";
  int f_k = 0, f_n = 0, f_p = 0, f_q = 0;
  CLI::App* formula = app.add_subcommand("formula", "Evaluate a closed-form chart or stable rank");
  formula->add_option("family", f_family, "proj, kn1, 2n2, conj, complex, inf2n2, or infkn1")
      ->required()
      ->check(CLI::IsMember({"proj", "kn1", "2n2", "conj", "complex", "inf2n2", "infkn1"}));
  CLI::Option* fk = formula->add_option("-k", f_k, "number of planes");
  CLI::Option* fn = formula->add_option("-n", f_n, "ambient dimension");
  CLI::Option* fp = formula->add_option("-p", f_p, "topological dimension / total dimension");
  CLI::Option* fq = formula->add_option("-q", f_q, "weight / number of sign coordinates");
  formula->add_option("--format", f_format, "text, json, or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // verify: the cross-check battery.
  bool v_kn1 = false, v_2n2 = false, v_weights = false, v_duality = false, v_betti = false,
       v_transpose = false, v_empty = false;
  int v_max_n = 7, v_max_k = 6;
  CLI::App* verify =
      app.add_subcommand("verify", "Cross-check the solver, the closed forms, and the identities");
  verify->add_flag("--kn1", v_kn1, "solver vs one-sign closed form");
  verify->add_flag("--2n2", v_2n2, "solver vs two-sign closed form");
  verify->add_flag("--weights", v_weights, "weight computations agree; canonical weights = traces");
  verify->add_flag("--duality", v_duality, "chart symmetry and partner involution");
  verify->add_flag("--betti", v_betti, "per-dimension totals match cell counts");
  verify->add_flag("--transpose", v_transpose, "transpose and complement identities");
  verify->add_option("--max-n", v_max_n, "largest ambient dimension (default 7)");
  verify->add_option("--max-k", v_max_k, "largest plane count (default 6)");
  verify->add_flag("--empty-range", v_empty, "run the selected checks over an empty range");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*ingredients) {
      const SignSequence s = parse_signs(ing_signs, parse_field_name(ing_field));
      const CellTable table = ingredient_table(ing_k, s);
      if (ing_format == "json")
        out << render_ingredients_json(table);
      else if (ing_format == "csv")
        out << render_ingredients_csv(table);
      else
        out << render_ingredients_text(table);
      return 0;
    }

    if (*solvecmd) {
      const Field field = parse_field_name(s_field);
      const SolveReport report = solve(s_k, s_n, s_q, field, SolveOptions{s_pruning, s_cap});
      const ChartDocument doc = document_from_report(s_k, s_n, s_q, field, report);
      if (s_format == "json") {
        out << render_json(doc);
      } else if (s_format == "csv") {
        out << render_csv(report.result);
      } else {
        out << "status: " << doc.certification << '\n';
        if (doc.certified_by) out << "construction: " << *doc.certified_by << '\n';
        if (doc.note) out << "note: " << *doc.note << '\n';
        if (report.status == SolveStatus::certified)
          out << render_text_grid(report.result);
        else
          out << "candidates: " << report.candidates.size() << '\n';
      }
      switch (report.status) {
        case SolveStatus::certified: return 0;
        case SolveStatus::ambiguous: return 2;
        case SolveStatus::inconclusive: return 3;
      }
      return 3;
    }

    if (*formula) {
      auto need = [&](const CLI::Option* opt, const char* flag) {
        if (opt->count() == 0)
          throw std::invalid_argument("formula " + f_family + " requires " + flag);
      };
      if (f_family == "proj") {
        need(fp, "-p");
        need(fq, "-q");
        ChartDocument doc = document_from_formula("proj", proj_space(f_p, f_q));
        doc.p = f_p;
        doc.q = f_q;
        cli_detail::emit_chart(doc, proj_space(f_p, f_q), f_format, out);
      } else if (f_family == "kn1") {
        need(fk, "-k");
        need(fn, "-n");
        ChartDocument doc = document_from_formula("kn1", gr_kn1(f_k, f_n));
        doc.k = f_k;
        doc.n = f_n;
        doc.q = 1;
        cli_detail::emit_chart(doc, gr_kn1(f_k, f_n), f_format, out);
      } else if (f_family == "2n2") {
        need(fn, "-n");
        ChartDocument doc = document_from_formula("2n2", gr_2n2(f_n));
        doc.k = 2;
        doc.n = f_n;
        doc.q = 2;
        cli_detail::emit_chart(doc, gr_2n2(f_n), f_format, out);
      } else if (f_family == "conj") {
        need(fk, "-k");
        need(fn, "-n");
        ChartDocument doc = document_from_formula("conj", gr_conj(f_k, f_n));
        doc.k = f_k;
        doc.n = f_n;
        doc.field = "Cconj";
        cli_detail::emit_chart(doc, gr_conj(f_k, f_n), f_format, out);
      } else if (f_family == "complex") {
        need(fk, "-k");
        need(fn, "-n");
        need(fq, "-q");
        RankChart chart;
        if (f_q == 1) {
          chart = complexify(gr_kn1(f_k, f_n));
        } else if (f_q == 2 && f_k == 2) {
          chart = complexify(gr_2n2(f_n));
        } else {
          throw std::invalid_argument("formula complex supports -q 1, or -q 2 with -k 2");
        }
        ChartDocument doc = document_from_formula("complex", chart);
        doc.k = f_k;
        doc.n = f_n;
        doc.q = f_q;
        doc.field = "C";
        cli_detail::emit_chart(doc, chart, f_format, out);
      } else if (f_family == "inf2n2") {
        need(fp, "-p");
        need(fq, "-q");
        cli_detail::emit_rank("inf2n2", {{"p", f_p}, {"q", f_q}}, inf_gr2_rank(f_p, f_q), f_format,
                              out);
      } else {  // infkn1
        need(fk, "-k");
        need(fp, "-p");
        need(fq, "-q");
        cli_detail::emit_rank("infkn1", {{"k", f_k}, {"p", f_p}, {"q", f_q}},
                              inf_kn1_rank(f_p, f_q, f_k), f_format, out);
      }
      return 0;
    }

    if (*verify) {
      const bool all = !(v_kn1 || v_2n2 || v_weights || v_duality || v_betti || v_transpose);
      const int max_n = v_empty ? 0 : v_max_n;
      const int max_k = v_empty ? 0 : v_max_k;
      std::vector<cli_detail::VerifyCheck> checks;

      if (all || v_kn1) {
        cli_detail::VerifyCheck c{"solver matches one-sign closed form", 0, {}};
        for (int k = 1; k <= max_k; ++k)
          for (int n = k + 1; n <= max_n; ++n) {
            ++c.instances;
            const SolveReport rep = solve(k, n, 1);
            if (rep.status != SolveStatus::certified || !(rep.result == gr_kn1(k, n)))
              c.failures.push_back("k=" + std::to_string(k) + " n=" + std::to_string(n));
          }
        checks.push_back(std::move(c));
      }

      if (all || v_2n2) {
        cli_detail::VerifyCheck c{"solver matches two-sign closed form", 0, {}};
        for (int n = 3; n <= max_n; ++n) {
          ++c.instances;
          const SolveReport rep = solve(2, n, 2);
          if (rep.status != SolveStatus::certified || !(rep.result == gr_2n2(n)))
            c.failures.push_back("n=" + std::to_string(n));
        }
        checks.push_back(std::move(c));
      }

      if (all || v_weights) {
        cli_detail::VerifyCheck c{"weight computations agree", 0, {}};
        for (int n = 1; n <= std::min(max_n, 7); ++n)
          for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::string text(static_cast<std::size_t>(n), '+');
            for (int i = 0; i < n; ++i)
              if (mask & (1u << i)) text[static_cast<std::size_t>(i)] = '-';
            const SignSequence s = parse_signs(text);
            for (int k = 0; k <= std::min(n, max_k); ++k) {
              ++c.instances;
              for (const Partition& lambda : enumerate_partitions(k, n - k))
                if (cell_weight(lambda, s) != cell_weight_by_matrix(lambda, s))
                  c.failures.push_back("k=" + std::to_string(k) + " signs=" + text);
            }
          }
        checks.push_back(std::move(c));

        cli_detail::VerifyCheck t{"canonical weights equal traces", 0, {}};
        for (int k = 1; k <= max_k; ++k)
          for (int n = k + 1; n <= max_n; ++n) {
            ++t.instances;
            const CellTable table = ingredient_table(k, canonical_kn1_signs(k, n));
            for (const CellEntry& e : table.entries)
              if (e.bidegree.q != trace(e.label) || e.bidegree.p != box_count(e.label))
                t.failures.push_back("k=" + std::to_string(k) + " n=" + std::to_string(n));
          }
        checks.push_back(std::move(t));
      }

      if (all || v_duality) {
        cli_detail::VerifyCheck c{"duality symmetry and involution", 0, {}};
        for (int k = 1; k <= max_k; ++k)
          for (int n = k + 1; n <= max_n; ++n) {
            ++c.instances;
            bool ok = true;
            const RankChart chart = gr_kn1(k, n);
            for (int q = 0; q <= k && ok; ++q)
              for (int p = -1; p <= k * (n - k) + 1 && ok; ++p)
                if (free_rank_at(chart, p, q) != free_rank_at(chart, n * q - p, q)) ok = false;
            for (const Partition& lambda : enumerate_partitions(k, n - k)) {
              const Partition partner = duality_partner(lambda, k, n);
              if (duality_partner(partner, k, n) != lambda || trace(partner) != trace(lambda) ||
                  box_count(partner) != n * trace(lambda) - box_count(lambda))
                ok = false;
            }
            if (!ok) c.failures.push_back("k=" + std::to_string(k) + " n=" + std::to_string(n));
          }
        checks.push_back(std::move(c));
      }

      if (all || v_betti) {
        cli_detail::VerifyCheck c{"per-dimension totals match cell counts", 0, {}};
        auto conserved = [&](const RankChart& chart, int k, int n, const std::string& name) {
          ++c.instances;
          for (int d = 0; d <= k * (n - k); ++d) {
            long long total = 0;
            for (int q = 0; q <= n; ++q) total += free_rank_at(chart, d, q);
            if (total != betti(k, n, d)) {
              c.failures.push_back(name);
              return;
            }
          }
        };
        for (int k = 1; k <= max_k; ++k)
          for (int n = k + 1; n <= max_n; ++n)
            conserved(gr_kn1(k, n), k, n, "kn1 k=" + std::to_string(k) + " n=" + std::to_string(n));
        for (int n = 3; n <= max_n; ++n)
          conserved(gr_2n2(n), 2, n, "2n2 n=" + std::to_string(n));
        for (int p = 1; p <= max_n; ++p)
          for (int q = 0; 2 * q <= p; ++q)
            conserved(proj_space(p, q), 1, p,
                      "proj p=" + std::to_string(p) + " q=" + std::to_string(q));
        checks.push_back(std::move(c));
      }

      if (all || v_transpose) {
        cli_detail::VerifyCheck c{"transpose and complement identities", 0, {}};
        for (int k = 1; k <= max_k; ++k)
          for (int m = 0; m <= max_n - k; ++m) {
            ++c.instances;
            bool ok = true;
            const int n = k + m;
            for (const Partition& lambda : enumerate_partitions(k, m)) {
              const Partition tau = transpose(lambda, k, n);
              if (static_cast<int>(tau.size()) != m || transpose(tau, m, n) != lambda ||
                  box_count(tau) != box_count(lambda))
                ok = false;
              const JumpSequence js = to_jumps(lambda, n);
              const JumpComplement hc = jump_complement(lambda, n);
              for (std::size_t i = 0; i < hc.size(); ++i) {
                int lhs = 0, rhs = 0;
                for (std::size_t j = 0; j < lambda.size(); ++j) {
                  if (js.jumps[j] > hc[i]) ++lhs;
                  if (lambda[j] > static_cast<int>(i)) ++rhs;
                }
                if (lhs != rhs) ok = false;
              }
            }
            if (!ok) c.failures.push_back("k=" + std::to_string(k) + " m=" + std::to_string(m));
          }
        checks.push_back(std::move(c));
      }

      std::size_t total_instances = 0, total_failures = 0;
      for (const cli_detail::VerifyCheck& c : checks) {
        total_instances += c.instances;
        total_failures += c.failures.size();
        out << c.name << ": " << c.instances << " instances, " << c.failures.size()
            << " failures\n";
        for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i)
          out << "  mismatch at " << c.failures[i] << '\n';
      }
      out << "verify: " << (total_failures ? "FAIL" : "PASS") << " (" << checks.size()
          << " checks, " << total_instances << " instances)\n";
      return total_failures ? 2 : 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  out << app.help();
  return 0;
}

}  // namespace rochart
