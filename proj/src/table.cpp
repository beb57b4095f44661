#include "filaff/table.hpp"

#include "filaff/affine.hpp"
#include "filaff/cohomology.hpp"

#include "json.hpp"

#include <sstream>

namespace filaff {

const std::vector<ExpectedRow>& expected_table() {
  static const std::vector<ExpectedRow> rows = {
      {3, "A_3", "w1,w", true, 2, false},
      {4, "A_4", "w1,w", true, 2, false},
      {5, "A_5", "w1,w2,w", true, 3, false},
      {6, "A_{6,1}", "w1,w2", false, 2, false},
      {6, "A_{6,2}", "w1,w2,w", true, 3, false},
      {7, "A_{7,1}", "w1,w2,w", true, 3, false},
      {7, "A_{7,2}", "w1,w2,w3,w", true, 4, false},
      {8, "A_{8,1}", "w1,w2,w3", false, 3, false},
      {8, "A_{8,2}", "w1,w2,w", true, 3, false},
      {8, "A_{8,3}", "w1,w2,w3", false, 3, false},
      {8, "A_{8,4}", "w1,w2,w3,w", true, 4, false},
      {9, "A_{9,1}", "w1,w2,w", true, 3, false},
      {9, "A_{9,2}", "w1,w2,w,w'", true, 4, false},
      {9, "A_{9,3}", "w1,w2,w3", false, 3, false},
      {9, "A_{9,4}", "w1,w2,w3,w", true, 4, false},
      {9, "A_{9,5}", "w1,w2,w3,w", true, 4, false},
      {9, "A_{9,6}", "w1,w2,w3,w,w'", true, 5, false},
      {10, "A_{10,1}", "w1,w2,w3", false, 3, false},
      {10, "A_{10,2}", "w1,w2,w3,w4", false, 4, false},
      {10, "A_{10,3}", "w1,w2,w", true, 3, false},
      {10, "A_{10,4}", "w1,w2,w3", false, 3, false},
      {10, "A_{10,5}", "w1,w2,w3", false, 3, false},
      {10, "A_{10,6}", "w1,w2,w3,w", true, 4, false},
      {10, "A_{10,7}", "w1,w2,w3,w", true, 4, false},
      {10, "A_{10,8}", "w1,w2,w3,w4", false, 4, false},
      {10, "A_{10,9}", "w1,w2,w3,w4,w", true, 5, false},
      {11, "A_{11,1}", "w1,w2", false, 2, false},
      {11, "A_{11,2}", "w1,w2,w", true, 3, false},
      {11, "A_{11,3}", "w1,w2,w", true, 3, false},
      {11, "A_{11,4}", "w1,w2,w3", false, 3, false},
      {11, "A_{11,5}", "w1,w2,w3", false, 3, false},
      {11, "A_{11,6}", "w1,w2,w3,w4", false, 4, false},
      {11, "A_{11,7}", "w1,w2,w3,w", true, 4, false},
      {11, "A_{11,8}", "w1,w2,w3,w4", false, 4, false},
      {11, "A_{11,9}", "w1,w2,w3,w4,w", true, 5, false},
      {11, "A_{11,10}", "", true, -1, true},
  };
  return rows;
}

namespace {

// Tags "w1", "w2", ... for the omega_ell whose classes are successively
// independent modulo coboundaries, then fillers for the rest of a basis
// of H^2: "w" for an affine representative, "w'" (then "w''", ...) for
// the remainder.
std::string basis_tags(const LieAlgebra& g, int betti2, bool affine) {
  const int n = g.dim();
  RowReducer reducer(binomial(n, 2));
  const Matrix d1 = coboundary_matrix(g, 1, Coefficients::Trivial);
  for (int j = 0; j < d1.cols(); ++j) reducer.add(d1.column(j));

  std::vector<std::string> tags;
  int independent = 0;
  for (int ell = 1; 2 * ell + 1 <= n && ell <= 4; ++ell) {
    const Cochain w = omega_cochain(n, ell);
    if (!is_cocycle(g, w)) continue;
    if (reducer.add(w.coordinates())) {
      tags.push_back("w" + std::to_string(ell));
      ++independent;
    }
  }
  int deficit = betti2 - independent;
  if (affine && deficit > 0) {
    tags.push_back("w");
    --deficit;
  }
  std::string prime = "w'";
  for (; deficit > 0; --deficit) {
    tags.push_back(prime);
    prime += "'";
  }
  std::string out;
  for (const auto& t : tags) {
    if (!out.empty()) out += ",";
    out += t;
  }
  return out;
}

}  // namespace

TableResult compute_table(int n_min, int n_max, std::uint64_t seed,
                          int budget) {
  if (n_min < 3 || n_max > 11 || n_min > n_max)
    throw std::invalid_argument("table range must satisfy 3 <= min <= max <= 11");
  TableResult result;
  for (const ExpectedRow& exp : expected_table()) {
    if (exp.n < n_min || exp.n > n_max) continue;
    TableRow row;
    row.n = exp.n;
    row.label = exp.label;
    row.expected = exp.informational
                       ? "-"
                       : std::to_string(exp.betti2) +
                             (exp.affine ? " yes" : " no");
    const auto params = find_witness(exp.label, budget, seed);
    if (!params) {
      row.witness = "none";
      row.diff = "no-witness";
      result.all_ok = false;
      result.rows.push_back(row);
      continue;
    }
    row.witness_found = true;
    row.witness = to_string(*params);
    const LieAlgebra g = build_algebra(*params);
    row.betti2 = cohomology(g, 2, Coefficients::Trivial).betti;
    row.affine = find_affine_class(g).exists ? 1 : 0;
    row.h2_basis = basis_tags(g, row.betti2, row.affine == 1);
    if (exp.informational) {
      row.diff = "info";
    } else if (row.betti2 == exp.betti2 && (row.affine == 1) == exp.affine) {
      row.diff = "ok";
    } else {
      std::ostringstream d;
      if (row.betti2 != exp.betti2)
        d << "b2 " << row.betti2 << "!=" << exp.betti2 << " ";
      if ((row.affine == 1) != exp.affine)
        d << "affine " << (row.affine == 1 ? "yes" : "no") << "!="
          << (exp.affine ? "yes" : "no");
      row.diff = d.str();
      while (!row.diff.empty() && row.diff.back() == ' ')
        row.diff.pop_back();
      result.all_ok = false;
    }
    result.rows.push_back(row);
  }
  return result;
}

std::string render_table_tsv(const TableResult& t) {
  std::ostringstream out;
  out << "n\tclass\tb2\th2_basis\taffine\texpected\tdiff\twitness\n";
  for (const TableRow& r : t.rows) {
    out << r.n << "\t" << r.label << "\t";
    if (r.betti2 >= 0)
      out << r.betti2;
    else
      out << "-";
    out << "\t" << (r.h2_basis.empty() ? "-" : r.h2_basis) << "\t"
        << (r.affine == 1 ? "yes" : r.affine == 0 ? "no" : "-") << "\t"
        << r.expected << "\t" << r.diff << "\t" << r.witness << "\n";
  }
  return out.str();
}

std::string render_table_json(const TableResult& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const TableRow& r : t.rows) {
    nlohmann::json row;
    row["n"] = r.n;
    row["class"] = r.label;
    row["witness_found"] = r.witness_found;
    row["witness"] = r.witness;
    if (r.betti2 >= 0) row["b2"] = r.betti2;
    if (r.affine >= 0) row["affine"] = r.affine == 1;
    row["h2_basis"] = r.h2_basis;
    row["expected"] = r.expected;
    row["diff"] = r.diff;
    rows.push_back(row);
  }
  nlohmann::json out;
  out["rows"] = rows;
  out["all_ok"] = t.all_ok;
  return out.dump(2) + "\n";
}

}  // namespace filaff
