// Chevalley-Eilenberg cochain complex of a Lie algebra with trivial or
// adjoint coefficients: coboundaries, cocycle/coboundary tests, Betti
// numbers, cohomology representatives, and the distinguished scalar
// 2-cocycle family used for filiform algebras.
//
// Basis p-cochains are indexed by increasing index tuples in colex order;
// a coordinate vector lists, for each tuple, the coefficient components.
#pragma once

#include "filaff/lie_algebra.hpp"

#include <map>
#include <vector>

namespace filaff {

enum class Coefficients { Trivial, Adjoint };

int coefficient_dim(Coefficients m, int n);

long long binomial(int n, int k);

// All strictly increasing p-tuples from {1..n} in colex order (sorted by
// last entry, then recursively).
std::vector<std::vector<int>> index_tuples(int n, int p);

// Position of an increasing tuple in the colex enumeration.
int colex_rank(const std::vector<int>& tuple);

// An alternating p-linear map on basis tuples with values in the
// coefficient module (dimension 1 for trivial, n for adjoint).  Stores
// only the tuples that were set; everything else evaluates to zero.
class Cochain {
 public:
  Cochain(int n, int p, Coefficients coeff);

  int ambient_dim() const { return n_; }
  int degree() const { return p_; }
  Coefficients coefficients() const { return coeff_; }
  int value_dim() const { return coefficient_dim(coeff_, n_); }

  // `tuple` must be strictly increasing within 1..n.
  void set(const std::vector<int>& tuple, const Vec& value);
  void set_scalar(const std::vector<int>& tuple, const Rational& value);

  // Any index order; repeated indices give zero; the sorting sign is
  // applied.
  Vec evaluate(const std::vector<int>& indices) const;
  Rational evaluate_scalar(const std::vector<int>& indices) const;

  bool is_zero() const;

  // Flat coordinates: tuple-major in colex order, coefficient component
  // within.
  Vec coordinates() const;
  static Cochain from_coordinates(int n, int p, Coefficients coeff,
                                  const Vec& coords);

  const std::map<std::vector<int>, Vec>& entries() const { return values_; }

  Cochain operator+(const Cochain& rhs) const;
  Cochain operator-(const Cochain& rhs) const;
  Cochain scaled(const Rational& c) const;
  bool operator==(const Cochain& rhs) const;

 private:
  int n_;
  int p_;
  Coefficients coeff_;
  std::map<std::vector<int>, Vec> values_;
};

// The differential applied to one cochain (degree rises by one).
Cochain apply_coboundary(const LieAlgebra& g, const Cochain& c);

// Sparse columns of the matrix of d_p : C^p -> C^{p+1}; column order
// matches Cochain coordinates, rows likewise in degree p+1.
std::vector<SparseVec> coboundary_columns(const LieAlgebra& g, int p,
                                          Coefficients m);

// Dense matrix of d_p (throws std::runtime_error when the dense form
// would be unreasonably large; the sparse column form always works).
Matrix coboundary_matrix(const LieAlgebra& g, int p, Coefficients m);

bool is_cocycle(const LieAlgebra& g, const Cochain& c);
bool is_coboundary(const LieAlgebra& g, const Cochain& c);

struct CohomologyReport {
  int p = 0;
  int cocycle_dim = 0;
  int coboundary_dim = 0;
  int betti = 0;  // cocycle_dim - coboundary_dim
  // Representatives of a basis of H^p: cocycles reduced modulo
  // coboundaries, normalized, pairwise independent.
  std::vector<Cochain> representatives;
};

CohomologyReport cohomology(const LieAlgebra& g, int p, Coefficients m);

// b_0 .. b_n with trivial coefficients, via sparse ranks.
std::vector<int> betti_vector(const LieAlgebra& g);

// The scalar 2-cochain with values (k, 2*ell+3-k) -> (-1)^k for
// k = 2..ell+1; requires 1 <= ell <= (n-1)/2.
Cochain omega_cochain(int n, int ell);

struct ConjectureChecks {
  std::vector<int> betti;
  bool b2_exceeds_quarter_b1_squared = false;  // 4*b_2 > b_1^2
  bool total_at_least_2_pow_center = false;    // sum b_p >= 2^dim z(g)
};

// Both checks on a validated nilpotent algebra.
ConjectureChecks conjecture_checks(const LieAlgebra& g);

}  // namespace filaff
