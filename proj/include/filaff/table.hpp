// Regeneration of the master classification table for dimensions 3-11:
// one row per class, each row recomputed from a searched witness and
// diffed against the hardcoded expected values.
#pragma once

#include "filaff/filiform.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace filaff {

// What the classification is known to say about a row.  The final
// dimension-11 class is informational: its members are not subclassified
// but all admit affine structures, so only the computed values are shown.
struct ExpectedRow {
  int n = 0;
  std::string label;
  std::string h2_basis;  // tags like "w1,w2,w"
  bool affine = false;
  int betti2 = 0;
  bool informational = false;
};

const std::vector<ExpectedRow>& expected_table();

struct TableRow {
  int n = 0;
  std::string label;
  bool witness_found = false;
  std::string witness;   // printed parameters, or "none"
  int betti2 = -1;       // -1 without a witness
  std::string h2_basis;  // computed tags ("w1,w2,..." plus fillers)
  int affine = -1;       // 1 / 0, -1 without a witness
  std::string expected;  // expected "b2 affine" digest, or "-" if none
  std::string diff;      // "ok" | "info" | "no-witness" | mismatch text
};

struct TableResult {
  std::vector<TableRow> rows;
  bool all_ok = true;  // every non-informational row diffs "ok"
};

// Witness search, b2, computed H^2 basis tags, affine verdict and diff
// for every class with n_min <= n <= n_max.  Deterministic for a fixed
// seed.  Throws std::invalid_argument unless 3 <= n_min <= n_max <= 11.
TableResult compute_table(int n_min, int n_max, std::uint64_t seed,
                          int budget);

std::string render_table_tsv(const TableResult& t);
std::string render_table_json(const TableResult& t);

}  // namespace filaff
