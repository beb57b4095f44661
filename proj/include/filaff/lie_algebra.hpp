// Finite-dimensional Lie algebras over exact rationals, given by structure
// constants on an ordered basis e_1, ..., e_n.
//
// Validation model: constructing an algebra does not check the Jacobi
// identity.  jacobi_defects() computes every violated basis triple; when it
// returns empty the instance is marked validated, and operations that only
// make sense for genuine Lie algebras insist on that (running the check on
// demand if it has not happened yet).
#pragma once

#include "filaff/linalg.hpp"
#include "filaff/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace filaff {

// One summand of [e_i, e_j] = sum_k c * e_k with 1 <= i < j <= n.
// Entries with the same (i, j, k) accumulate.
struct StructureEntry {
  int i;
  int j;
  int k;
  Rational c;
};

// A basis triple i < j < k whose Jacobi sum is nonzero, with the value of
// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j].
struct JacobiDefect {
  int i;
  int j;
  int k;
  Vec defect;
};

class LieAlgebra {
 public:
  // Abelian algebra of the given dimension.
  explicit LieAlgebra(int n);
  LieAlgebra(int n, const std::vector<StructureEntry>& entries);

  int dim() const { return n_; }

  // [e_i, e_j] for any i, j in 1..n (antisymmetry applied as needed).
  Vec bracket(int i, int j) const;
  // Bilinear extension to coordinate vectors.
  Vec bracket(const Vec& x, const Vec& y) const;
  // ad(x): the matrix y -> [x, y].
  Matrix ad(const Vec& x) const;

  // All violated triples i < j < k; empty result marks the instance
  // validated.
  std::vector<JacobiDefect> jacobi_defects() const;
  bool is_validated() const { return validated_; }
  // Validate on demand; throws std::invalid_argument naming `op` if the
  // Jacobi identity fails.
  void require_validated(const std::string& op) const;

  // Descending series g = g^0 >= g^1 = [g, g] >= g^2 = [g, g^1] >= ...
  // reported until it reaches zero or stabilizes; each term as a basis.
  std::vector<SubspaceBasis> lower_central_series() const;
  SubspaceBasis derived_subalgebra() const;  // g^1
  SubspaceBasis center() const;

  bool is_nilpotent() const;
  // Smallest p with g^p = 0; throws std::invalid_argument if not nilpotent.
  int nilindex() const;
  // Dimension steps (dim g^{k}/g^{k+1}) of a nilpotent algebra.
  std::vector<int> nilpotent_type() const;
  // Nilpotent of maximal class: nilindex n-1 (equivalently type
  // {2,1,...,1} with a one-dimensional center for n >= 3).
  bool is_filiform() const;

  // Structure constants in the basis given by the columns of P (new basis
  // expressed in old coordinates).  Throws std::invalid_argument if P is
  // not an invertible n x n matrix.  Validation status carries over.
  LieAlgebra change_basis(const Matrix& p) const;

  bool operator==(const LieAlgebra& rhs) const;
  bool operator!=(const LieAlgebra& rhs) const { return !(*this == rhs); }

 private:
  int n_ = 0;
  std::vector<Vec> table_;  // pair rank (i<j) -> components of [e_i, e_j]
  mutable bool validated_ = false;

  static int pair_rank(int i, int j) {  // 1-based, i < j
    return (i - 1) + (j - 1) * (j - 2) / 2;
  }
  const Vec& entry(int i, int j) const { return table_[pair_rank(i, j)]; }
  Vec& entry(int i, int j) { return table_[pair_rank(i, j)]; }
  // [e_m, v] for a basis index m and coordinate vector v.
  Vec bracket_basis(int m, const Vec& v) const;

  friend std::vector<std::pair<std::pair<int, int>, Vec>> nonzero_brackets(
      const LieAlgebra& g);
};

// All pairs (i < j) with [e_i, e_j] != 0, with their component vectors, in
// pair-rank order.  Used by the cohomology machinery.
std::vector<std::pair<std::pair<int, int>, Vec>> nonzero_brackets(
    const LieAlgebra& g);

// Basis of the derivation algebra: all matrices D with
// D[x,y] = [Dx,y] + [x,Dy].
std::vector<Matrix> derivation_basis(const LieAlgebra& g);
bool is_derivation(const LieAlgebra& g, const Matrix& d);

// Searches for an invertible derivation: first each basis element of
// Der(g), then `trials` seeded random combinations with numerators and
// denominators bounded by 10.  nullopt means none found (inconclusive).
std::optional<Matrix> find_nonsingular_derivation(const LieAlgebra& g,
                                                  int trials,
                                                  std::uint64_t seed);

}  // namespace filaff
