// Tour of the closed-form charts: builds the main published tables, prints
// them as figure-style grids, and demonstrates the rank queries and the
// serialization formats.

#include <iostream>

#include "rochart/chart_io.hpp"
#include "rochart/formulas.hpp"

using namespace rochart;

int main() {
  std::cout << "Rank chart of Gr_4(R^{9,1}) - one sign coordinate, 126 generators.\n"
            << "Rows are weights, columns are topological dimensions:\n\n"
            << render_text_grid(gr_kn1(4, 9)) << '\n';

  std::cout << "Rank chart of Gr_2(R^{10,2}) - two sign coordinates, 45 generators:\n\n"
            << render_text_grid(gr_2n2(10)) << '\n';

  std::cout << "A chart lists only free-module generators. The full group at a\n"
            << "bidegree also collects the cone over every nearby generator:\n"
            << "  gr_2n2(10) at (4,0): free rank " << free_rank_at(gr_2n2(10), 4, 0)
            << ", group rank " << group_rank_at(gr_2n2(10), 4, 0) << '\n'
            << "  gr_2n2(10) at (2,3): free rank " << free_rank_at(gr_2n2(10), 2, 3)
            << ", group rank " << group_rank_at(gr_2n2(10), 2, 3) << "\n\n";

  std::cout << "Complex points double both coordinates (odd bidegrees vanish):\n\n"
            << render_text_grid(complexify(gr_2n2(4))) << '\n';

  std::cout << "Under the conjugation action the chart collapses onto the diagonal,\n"
            << "one generator at (2i, i) per mod-2 class in degree 2i:\n\n"
            << render_text_grid(gr_conj(2, 4)) << '\n';

  std::cout << "Stable ranks answer single-bidegree queries without a chart:\n"
            << "  inf_gr2_rank(12, 4) = " << inf_gr2_rank(12, 4) << '\n'
            << "  inf_kn1_rank(6, 2, k=3) = " << inf_kn1_rank(6, 2, 3) << "\n\n";

  std::cout << "The same chart serializes to CSV rows\n\n"
            << render_csv(gr_2n2(4)) << '\n';

  ChartDocument doc = document_from_formula("2n2", gr_2n2(4));
  doc.k = 2;
  doc.n = 4;
  doc.q = 2;
  std::cout << "or to a canonical JSON document:\n\n" << render_json(doc);
  return 0;
}
