// Filiform Lie algebras in adapted coordinates: the admissible parameter
// index set, the deformation 2-cocycles psi_{k,s}, construction of the
// algebra from parameters, classification by structure-constant
// conditions (dimensions 3..11), structural properties (a)-(d) with the
// two derived families for dimension >= 12, witness generation, and
// recovery of adapted coordinates from an arbitrary basis.
//
// Adapted basis convention: [e_1, e_i] = e_{i+1} for 2 <= i <= n-1, and
// for 2 <= i < j the bracket [e_i, e_j] lies in span(e_{i+j}, ..., e_n);
// the free parameters alpha_{k,s} are the e_s-components of
// [e_k, e_{k+1}].
#pragma once

#include "filaff/cohomology.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace filaff {

struct IndexPair {
  int k = 0;
  int s = 0;
  bool operator<(const IndexPair& o) const {
    return k != o.k ? k < o.k : s < o.s;
  }
  bool operator==(const IndexPair& o) const { return k == o.k && s == o.s; }
};

using ParamMap = std::map<IndexPair, Rational>;

// Parameters of a filiform algebra in an adapted basis; keys absent from
// the map are zero.  Keys must lie in index_set(n).
struct FiliformParams {
  int n = 0;
  ParamMap alpha;
};

// Admissible parameter positions: 2 <= k <= n/2 with 2k+1 <= s <= n,
// plus (n/2, n) when n is even.  Sorted by k, then s.
std::vector<IndexPair> index_set(int n);
bool in_index_set(int n, const IndexPair& p);

// alpha_{k,s} with absent-means-zero semantics.
Rational alpha_at(const FiliformParams& p, int k, int s);

// The graded model L(n): [e_1, e_i] = e_{i+1}, everything else zero.
LieAlgebra standard_graded(int n);

// The adjoint 2-cochain on L(n) with
//   psi(e_i ^ e_j) = (-1)^{k-i} C(j-k-1, k-i) e_{s + (j-k-1) - (k-i)}
// for 2 <= i <= k < j <= n (zero when the target exceeds n), and zero on
// e_1 ^ e_i.  In particular psi(e_k ^ e_{k+1}) = e_s.
Cochain psi_cochain(int n, int k, int s);

// Structure constants from parameters via the closed form: for
// 2 <= i < j, the e_r-component of [e_i, e_j] is
//   sum_l (-1)^l C(j-i-l-1, l) alpha_{i+l, r-j+i+2l+1}.
LieAlgebra build_algebra(const FiliformParams& p);

// Same algebra assembled as L(n) plus sum alpha_{k,s} psi_{k,s}; kept as
// an independent construction path for consistency testing.
LieAlgebra build_algebra_via_cocycles(const FiliformParams& p);

// The four scalar combinations cited by the classification conditions:
//   a = 3*a_{4,10}(a_{2,6}+a_{3,8}) - 4*a_{3,8}^2
//   b = (2*a_{2,5}^2 - 5*a_{3,7}^2)(4*a_{2,5}^2 - 4*a_{2,5}a_{3,7} + 3*a_{3,7}^2)
//   c = 22*a_{3,8}^2 - 3*a_{2,6}a_{3,8} - 9*a_{2,6}^2
//   d = a_{5,11}(4*a_{3,10}+5*a_{2,8}) - 3*a_{4,11}(a_{2,6}+a_{3,8})
//       + 2*a_{2,7}(3*a_{2,6}-11*a_{3,8})
struct DerivedQuantities {
  Rational a, b, c, d;
};
DerivedQuantities derived_quantities(const FiliformParams& p);

// Class label for validated parameters with 3 <= n <= 11: "A_3", "A_4",
// "A_5" (single classes) or "A_{n,i}".  Throws std::invalid_argument on
// bad n or a Jacobi violation, std::logic_error if no condition row
// matches (the rows partition the validated parameter space).
std::string classify(const FiliformParams& p);

// Structural properties of a validated filiform algebra of dim n >= 7:
//  (a) some codimension-1 subspace U containing [g,g] has [U,[g,g]]
//      inside the 4th term of the descending series
//  (b) the negation of (a)
//  (c) the ((n-4)/2)-th term of the series is abelian (n even; vacuously
//      true for odd n)
//  (d) [[g,g],[g,g]] lies inside the 6th term of the series
struct PropertyFlags {
  bool a = false;
  bool b = false;
  bool c = false;
  bool d = false;
};
PropertyFlags property_flags(const LieAlgebra& g);

// For validated filiform of dim n >= 12: "A1_n" iff (b),(c),(d) all
// hold; "A2_n" iff (b),(c) hold and (d) fails; otherwise "unclassified".
std::string extended_class(const LieAlgebra& g);

// Tries to extend `support` to validated parameters by solving the
// Jacobi residuals (plus the given extra polynomial equations) for the
// listed unknown keys.  The residuals are probed affinely in the
// unknowns; the candidate is verified exactly before being returned, so
// a nonlinear dependence can only lead to nullopt, never to a wrong
// result.
std::optional<FiliformParams> solve_constraints(
    int n, const ParamMap& support, const std::vector<IndexPair>& unknowns,
    const std::vector<Rational (*)(const FiliformParams&)>& extra_equalities);

// Deterministic witness search for a class label ("A_{9,1}", "A_3",
// "A1_12", "A2_13", ...): hand-seeded sparse supports over the value set
// {0, +-1, +-2, +-1/2, +-3} first, then seeded random sparse supports,
// always completing with solve_constraints and verifying the label.
std::optional<FiliformParams> find_witness(const std::string& label,
                                           int budget, std::uint64_t seed);

// Seeded random validated parameters (sparse support + Jacobi
// completion); nullopt if the budget is exhausted.
std::optional<FiliformParams> sample_params(int n, std::uint64_t seed,
                                            int budget);
// Random witnesses of the two extended families (family = 1 or 2).
std::optional<FiliformParams> sample_extended(int n, int family,
                                              std::uint64_t seed, int budget);

struct AdaptedBasis {
  FiliformParams params;
  Matrix transition;  // columns: adapted basis in the input coordinates
};

// Recovers adapted coordinates of a validated filiform algebra: picks a
// generator of ad-rank n-2 (deterministic sweep, then seeded random
// candidates), builds the bracket chain, corrects the chain start by a
// derived-subalgebra element solving the linear adaptedness constraints,
// and verifies build_algebra(params) == change_basis(g, transition).
std::optional<AdaptedBasis> to_adapted(const LieAlgebra& g,
                                       std::uint64_t seed = 1,
                                       int budget = 200);

std::string to_string(const FiliformParams& p);  // "a[2,5]=1 a[3,7]=2"

}  // namespace filaff
