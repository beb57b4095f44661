// Exact linear algebra: reduced row echelon form, kernels, images,
// solving, quotient-space representatives, and a sparse column reducer
// for large structured systems.
//
// Pivoting rule: within the eligible rows of a column, pick the nonzero
// entry of smallest absolute value (ties broken by lowest row index).
// This keeps intermediate numerators/denominators small and, being a
// deterministic rule on exact data, makes every result reproducible.
#pragma once

#include "filaff/matrix.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace filaff {

// A list of vectors in an ambient coordinate space, understood as a basis
// of the subspace they span.
struct SubspaceBasis {
  int ambient_dim = 0;
  std::vector<Vec> vectors;
  int dim() const { return static_cast<int>(vectors.size()); }
};

struct RrefResult {
  Matrix mat;               // reduced row echelon form
  std::vector<int> pivots;  // pivot column per pivot row, increasing
  int rank() const { return static_cast<int>(pivots.size()); }
};

RrefResult rref(const Matrix& m);
int rank(const Matrix& m);

// Scale a nonzero vector so its first nonzero entry is 1.  Zero vectors
// pass through unchanged.
Vec normalize_first_nonzero(const Vec& v);

// Basis of {x : m x = 0}; each vector normalized (first nonzero entry 1),
// ordered by free column.  A matrix with zero rows has full kernel.
SubspaceBasis kernel_basis(const Matrix& m);

// Basis of the column span: the original columns sitting at the pivot
// positions of rref(m), in column order.
SubspaceBasis image_basis(const Matrix& m);

// One solution of A x = b (free variables set to 0), or nullopt if
// inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

// Determinant by exact elimination (throws on non-square input).
Rational determinant(const Matrix& m);

// Inverse, or nullopt if singular (throws on non-square input).
std::optional<Matrix> inverse(const Matrix& m);

// Incremental Gaussian reducer over dense vectors: maintains a set of
// normalized rows keyed by leading index.
class RowReducer {
 public:
  explicit RowReducer(int ambient_dim) : ambient_(ambient_dim) {}

  // Reduce v against the rows collected so far (the result has zeros at
  // every stored leading index).
  Vec reduce(Vec v) const;

  // Reduce and, if a nonzero residue remains, store it; returns true
  // exactly when the rank grew.
  bool add(const Vec& v);

  bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }
  int rank() const { return static_cast<int>(rows_.size()); }
  int ambient_dim() const { return ambient_; }

 private:
  int ambient_;
  std::map<int, Vec> rows_;  // leading index -> normalized row
};

// Representatives completing `small` to a basis of span(`big`): reduce the
// vectors of `big` modulo `small` and keep the independent nonzero
// residues, normalized.  Throws std::invalid_argument unless
// span(small) <= span(big) in the same ambient space.
SubspaceBasis quotient_representatives(const SubspaceBasis& big,
                                       const SubspaceBasis& small);

// ---- sparse rank machinery ----
//
// A sparse vector is a list of (index, value) pairs with strictly
// increasing indices and nonzero values.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec sparse_from_dense(const Vec& v);
Vec sparse_to_dense(const SparseVec& v, int n);
// a -= c*b, merged
SparseVec sparse_axpy(const SparseVec& a, const Rational& c,
                      const SparseVec& b);

class SparseReducer {
 public:
  SparseVec reduce(SparseVec v) const;
  bool add(SparseVec v);
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::map<int, SparseVec> rows_;  // leading index -> row with leading 1
};

int rank_of_columns(const std::vector<SparseVec>& columns);

}  // namespace filaff
