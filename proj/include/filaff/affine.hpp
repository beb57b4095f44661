// Affine scalar 2-cocycles on filiform algebras, the associated central
// extensions, and the left-symmetric product carried by a quotient by
// the center of a one-dimension-higher filiform algebra.
//
// A scalar 2-cocycle on an adapted filiform algebra is affine when it is
// nonzero on z(g) ^ g; with z(g) = span(e_n) this is equivalent to a
// nonzero value at e_1 ^ e_n or e_2 ^ e_n.  Affine classes correspond to
// central extensions 0 -> K -> h -> g -> 0 with h filiform, and every
// such extension induces a left-symmetric product on g compatible with
// its bracket.
#pragma once

#include "filaff/cohomology.hpp"
#include "filaff/filiform.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>

namespace filaff {

struct AffineVerdict {
  bool exists = false;
  std::optional<Cochain> witness;  // affine scalar 2-cocycle when exists
};

// Bilinear product x_i . x_j = sum_k a[(i,j,k)] x_k.  `verified` is set
// once both axioms (left-symmetry of the associator and compatibility
// with the bracket) have been checked exactly.
struct LsaProduct {
  int n = 0;
  std::map<std::tuple<int, int, int>, Rational> a;
  bool verified = false;

  Vec product(int i, int j) const;                 // basis times basis
  Vec product(const Vec& x, const Vec& y) const;   // bilinear extension
};

// 0 -> span(center_vector) -> total -> g -> 0; projection maps total
// onto g, its kernel is the line through center_vector.
struct CentralExtension {
  LieAlgebra total;
  Matrix projection;  // n x (n+1)
  Vec center_vector;  // in total coordinates
};

// ev(u ^ v) for a scalar 2-cochain, extended bilinearly.
Rational scalar_eval(const Cochain& w, const Vec& u, const Vec& v);

// True iff w is nonzero on z(g) ^ g.  Runs both the definition-level
// test (against a computed center basis) and the adapted-slot criterion
// (values at e_1 ^ e_n and e_2 ^ e_n) and insists they agree.
// Throws std::invalid_argument unless w is a scalar 2-cocycle of g.
bool is_affine_cocycle(const LieAlgebra& g, const Cochain& w);

// Linear feasibility: does some scalar 2-cocycle take a nonzero value at
// e_1 ^ e_n or e_2 ^ e_n?  Coboundaries vanish at both slots, so this is
// equivalent to the existence of an affine cohomology class.
AffineVerdict find_affine_class(const LieAlgebra& g);

// The algebra on g + K e_{n+1} with [x, y] = [x, y]_g + w(x ^ y) e_{n+1}.
// For affine w the result is filiform with center spanned by e_{n+1};
// otherwise the center is bigger and std::invalid_argument is thrown.
CentralExtension central_extension(const LieAlgebra& g, const Cochain& w);

// The induced product on the quotient: pick f1 in the total
// algebra with ad-rank n-1 whose projection avoids the derived
// subalgebra, set phi(x) = [f1, lift(x)], invert phi on the complement
// g2 of K pi(f1) containing the derived subalgebra, and define
// x . y = psi([lift(x), phi(y)]).  The result is always verified; a
// candidate failing verification is discarded.  Throws
// std::runtime_error if no candidate works within the budget.
LsaProduct lsa_on_quotient(const CentralExtension& ext,
                           std::uint64_t seed = 1, int budget = 100);

// Exact check of both axioms; false on any violation.
bool verify_lsa(const LieAlgebra& g, const LsaProduct& prod);

// find_affine_class -> central_extension -> lsa_on_quotient; nullopt
// when no affine class exists (which does not rule out affine structures
// of other origins).
std::optional<LsaProduct> affine_structure(const LieAlgebra& g);

}  // namespace filaff
