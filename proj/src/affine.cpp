#include "filaff/affine.hpp"

#include "filaff/linalg.hpp"

#include <random>
#include <stdexcept>

namespace filaff {

Vec LsaProduct::product(int i, int j) const {
  if (i < 1 || j < 1 || i > n || j > n)
    throw std::invalid_argument("LsaProduct: basis index out of range");
  Vec out = zero_vec(n);
  for (int k = 1; k <= n; ++k) {
    const auto it = a.find({i, j, k});
    if (it != a.end()) out[k - 1] = it->second;
  }
  return out;
}

Vec LsaProduct::product(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw std::invalid_argument("LsaProduct: dimension mismatch");
  Vec out = zero_vec(n);
  for (int i = 1; i <= n; ++i) {
    if (is_zero(x[i - 1])) continue;
    for (int j = 1; j <= n; ++j) {
      if (is_zero(y[j - 1])) continue;
      axpy(out, x[i - 1] * y[j - 1], product(i, j));
    }
  }
  return out;
}

Rational scalar_eval(const Cochain& w, const Vec& u, const Vec& v) {
  if (w.degree() != 2 || w.coefficients() != Coefficients::Trivial)
    throw std::invalid_argument("scalar_eval expects a scalar 2-cochain");
  const int n = w.ambient_dim();
  Rational out(0);
  for (const auto& [tuple, value] : w.entries()) {
    const int i = tuple[0], j = tuple[1];
    out += (u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1]) * value[0];
  }
  (void)n;
  return out;
}

bool is_affine_cocycle(const LieAlgebra& g, const Cochain& w) {
  g.require_validated("is_affine_cocycle");
  const int n = g.dim();
  if (w.ambient_dim() != n || w.degree() != 2 ||
      w.coefficients() != Coefficients::Trivial)
    throw std::invalid_argument(
        "is_affine_cocycle expects a scalar 2-cochain on g");
  if (!is_cocycle(g, w))
    throw std::invalid_argument("is_affine_cocycle: not a cocycle");
  if (!g.is_filiform())
    throw std::invalid_argument("is_affine_cocycle requires filiform g");

  // definition: nonzero on z(g) ^ g
  bool by_definition = false;
  for (const auto& z : g.center().vectors)
    for (int j = 1; j <= n && !by_definition; ++j) {
      Vec ej = zero_vec(n);
      ej[j - 1] = 1;
      by_definition = !is_zero(scalar_eval(w, z, ej));
    }
  // adapted-basis criterion: the e_1 ^ e_n and e_2 ^ e_n slots
  const bool by_slots = !is_zero(w.evaluate_scalar({1, n})) ||
                        !is_zero(w.evaluate_scalar({2, n}));
  if (by_definition != by_slots)
    throw std::logic_error(
        "is_affine_cocycle: definition and slot criterion disagree");
  return by_slots;
}

AffineVerdict find_affine_class(const LieAlgebra& g) {
  g.require_validated("find_affine_class");
  if (!g.is_filiform())
    throw std::invalid_argument("find_affine_class requires filiform g");
  const int n = g.dim();
  const Matrix d2 = coboundary_matrix(g, 2, Coefficients::Trivial);
  const SubspaceBasis cocycles = kernel_basis(d2);
  const int slot1 = colex_rank({1, n});
  const int slot2 = colex_rank({2, n});
  for (const auto& v : cocycles.vectors)
    if (!is_zero(v[slot1]) || !is_zero(v[slot2])) {
      AffineVerdict out;
      out.exists = true;
      out.witness = Cochain::from_coordinates(n, 2, Coefficients::Trivial, v);
      return out;
    }
  return {};
}

CentralExtension central_extension(const LieAlgebra& g, const Cochain& w) {
  g.require_validated("central_extension");
  const int n = g.dim();
  if (w.ambient_dim() != n || w.degree() != 2 ||
      w.coefficients() != Coefficients::Trivial)
    throw std::invalid_argument(
        "central_extension expects a scalar 2-cochain on g");
  if (!is_cocycle(g, w))
    throw std::invalid_argument("central_extension: not a cocycle");

  std::vector<StructureEntry> entries;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const Vec b = g.bracket(i, j);
      for (int r = 1; r <= n; ++r)
        if (!is_zero(b[r - 1])) entries.push_back({i, j, r, b[r - 1]});
      const Rational c = w.evaluate_scalar({i, j});
      if (!is_zero(c)) entries.push_back({i, j, n + 1, c});
    }
  LieAlgebra total(n + 1, entries);
  if (!total.jacobi_defects().empty())
    throw std::logic_error("central_extension: cocycle gave a non-algebra");
  if (total.center().dim() != 1)
    throw std::invalid_argument(
        "central_extension: cocycle is not affine, the extension has a "
        "center of dimension > 1");

  Matrix projection(n, n + 1);
  for (int i = 0; i < n; ++i) projection.at(i, i) = 1;
  Vec center_vector = zero_vec(n + 1);
  center_vector[n] = 1;
  return {std::move(total), std::move(projection), std::move(center_vector)};
}

namespace {

// quotient of ext.total by the central line, in the coordinates fixed by
// ext.projection; `section` returns a right inverse of the projection
LieAlgebra quotient_algebra(const CentralExtension& ext, Matrix& section) {
  const int n = ext.projection.rows();
  std::vector<Vec> cols;
  for (int i = 0; i < n; ++i) {
    Vec ei = zero_vec(n);
    ei[i] = 1;
    const auto lift = solve(ext.projection, ei);
    if (!lift)
      throw std::invalid_argument("lsa_on_quotient: projection not onto");
    cols.push_back(*lift);
  }
  section = Matrix::from_columns(cols);
  std::vector<StructureEntry> entries;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const Vec b = ext.projection.apply(
          ext.total.bracket(section.column(i - 1), section.column(j - 1)));
      for (int r = 1; r <= n; ++r)
        if (!is_zero(b[r - 1])) entries.push_back({i, j, r, b[r - 1]});
    }
  return LieAlgebra(n, entries);
}

}  // namespace

LsaProduct lsa_on_quotient(const CentralExtension& ext, std::uint64_t seed,
                           int budget) {
  const LieAlgebra& h = ext.total;
  h.require_validated("lsa_on_quotient");
  const int big = h.dim();
  const int n = big - 1;
  if (ext.projection.rows() != n || ext.projection.cols() != big)
    throw std::invalid_argument("lsa_on_quotient: projection shape mismatch");
  if (!h.is_filiform() || h.center().dim() != 1)
    throw std::invalid_argument(
        "lsa_on_quotient needs a filiform total algebra with a "
        "one-dimensional center");

  Matrix section(big, n);
  const LieAlgebra q = quotient_algebra(ext, section);
  if (!q.jacobi_defects().empty())
    throw std::logic_error("lsa_on_quotient: quotient violates Jacobi");
  const SubspaceBasis derived = q.derived_subalgebra();

  std::mt19937_64 rng(seed);
  const auto candidate = [&](int idx) -> Vec {
    if (idx < big) {
      Vec v = zero_vec(big);
      v[idx] = 1;
      return v;
    }
    Vec v = zero_vec(big);
    for (int i = 0; i < big; ++i)
      v[i] = Rational(static_cast<long>(rng() % 7) - 3);
    return v;
  };

  for (int attempt = 0; attempt < budget; ++attempt) {
    const Vec f1 = candidate(attempt);
    if (is_zero_vec(f1)) continue;
    const Matrix ad_f1 = h.ad(f1);
    if (rank(ad_f1) != n - 1) continue;
    const Vec pf1 = ext.projection.apply(f1);
    RowReducer span(n);
    for (const auto& v : derived.vectors) span.add(v);
    if (!span.add(pf1)) continue;  // projection sits inside the derived part

    // complement g2 of the line through pi(f1) containing the derived
    // subalgebra; note `span` already holds derived + pi(f1)
    std::vector<Vec> g2 = derived.vectors;
    for (int i = 1; i <= n && static_cast<int>(g2.size()) < n - 1; ++i) {
      Vec ei = zero_vec(n);
      ei[i - 1] = 1;
      if (span.add(ei)) g2.push_back(ei);
    }
    if (static_cast<int>(g2.size()) != n - 1) continue;

    // phi(x) = [f1, section(x)]; psi inverts phi restricted to g2
    const Matrix phi = ad_f1 * section;
    const Matrix g2m = Matrix::from_columns(g2);
    const Matrix phi_on_g2 = phi * g2m;

    LsaProduct prod;
    prod.n = n;
    bool ok = true;
    for (int j = 1; j <= n && ok; ++j) {
      const Vec phi_ej = phi.column(j - 1);
      for (int i = 1; i <= n && ok; ++i) {
        const Vec w = h.bracket(section.column(i - 1), phi_ej);
        const auto c = solve(phi_on_g2, w);
        if (!c) {
          ok = false;
          break;
        }
        const Vec value = g2m.apply(*c);
        for (int k = 1; k <= n; ++k)
          if (!is_zero(value[k - 1])) prod.a[{i, j, k}] = value[k - 1];
      }
    }
    if (!ok) continue;
    if (!verify_lsa(q, prod)) continue;
    prod.verified = true;
    return prod;
  }
  throw std::runtime_error(
      "lsa_on_quotient: no suitable generator found within the budget");
}

bool verify_lsa(const LieAlgebra& g, const LsaProduct& prod) {
  const int n = g.dim();
  if (prod.n != n) throw std::invalid_argument("verify_lsa: dimension mismatch");
  // compatibility x.y - y.x = [x,y]
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (sub(prod.product(i, j), prod.product(j, i)) != g.bracket(i, j))
        return false;
  // left-symmetry: associator symmetric in the first two arguments
  const auto basis = [&](int i) {
    Vec v = zero_vec(n);
    v[i - 1] = 1;
    return v;
  };
  const auto assoc = [&](int i, int j, int k) {
    Vec left = prod.product(basis(i), prod.product(j, k));
    Vec right = prod.product(prod.product(i, j), basis(k));
    return sub(left, right);
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (assoc(i, j, k) != assoc(j, i, k)) return false;
  return true;
}

std::optional<LsaProduct> affine_structure(const LieAlgebra& g) {
  const AffineVerdict verdict = find_affine_class(g);
  if (!verdict.exists) return std::nullopt;
  const CentralExtension ext = central_extension(g, *verdict.witness);
  return lsa_on_quotient(ext);
}

}  // namespace filaff
