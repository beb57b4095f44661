#include "filaff/lie_algebra.hpp"

#include <random>
#include <stdexcept>

namespace filaff {

LieAlgebra::LieAlgebra(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  table_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, zero_vec(n));
}

LieAlgebra::LieAlgebra(int n, const std::vector<StructureEntry>& entries)
    : LieAlgebra(n) {
  for (const auto& s : entries) {
    if (s.i < 1 || s.j < 1 || s.k < 1 || s.i > n || s.j > n || s.k > n)
      throw std::invalid_argument("structure entry index out of range");
    if (s.i >= s.j)
      throw std::invalid_argument(
          "structure entries must have i < j (antisymmetry fills the rest)");
    entry(s.i, s.j)[s.k - 1] += s.c;
  }
}

Vec LieAlgebra::bracket(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_)
    throw std::invalid_argument("basis index out of range");
  if (i == j) return zero_vec(n_);
  if (i < j) return entry(i, j);
  return scale(Rational(-1), entry(j, i));
}

Vec LieAlgebra::bracket_basis(int m, const Vec& v) const {
  Vec r = zero_vec(n_);
  for (int t = 1; t <= n_; ++t) {
    if (is_zero(v[t - 1]) || t == m) continue;
    if (m < t)
      axpy(r, v[t - 1], entry(m, t));
    else
      axpy(r, -v[t - 1], entry(t, m));
  }
  return r;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
    throw std::invalid_argument("vector dimension mismatch");
  Vec r = zero_vec(n_);
  for (int i = 1; i < n_; ++i)
    for (int j = i + 1; j <= n_; ++j) {
      const Vec& c = entry(i, j);
      if (is_zero_vec(c)) continue;
      const Rational f = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1];
      axpy(r, f, c);
    }
  return r;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  std::vector<Vec> cols;
  for (int j = 1; j <= n_; ++j) {
    Vec ej = zero_vec(n_);
    ej[j - 1] = 1;
    cols.push_back(bracket(x, ej));
  }
  return Matrix::from_columns(cols);
}

std::vector<JacobiDefect> LieAlgebra::jacobi_defects() const {
  std::vector<JacobiDefect> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      for (int k = j + 1; k <= n_; ++k) {
        // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
        //   = -[e_k,[e_i,e_j]] - [e_i,[e_j,e_k]] + [e_j,[e_i,e_k]]
        Vec d = zero_vec(n_);
        axpy(d, Rational(-1), bracket_basis(k, entry(i, j)));
        axpy(d, Rational(-1), bracket_basis(i, entry(j, k)));
        axpy(d, Rational(1), bracket_basis(j, entry(i, k)));
        if (!is_zero_vec(d)) out.push_back({i, j, k, std::move(d)});
      }
  if (out.empty()) validated_ = true;
  return out;
}

void LieAlgebra::require_validated(const std::string& op) const {
  if (validated_) return;
  if (!jacobi_defects().empty())
    throw std::invalid_argument(
        op + ": structure constants violate the Jacobi identity");
}

std::vector<SubspaceBasis> LieAlgebra::lower_central_series() const {
  std::vector<SubspaceBasis> series;
  SubspaceBasis full{n_, {}};
  for (int i = 0; i < n_; ++i) {
    Vec v = zero_vec(n_);
    v[i] = 1;
    full.vectors.push_back(v);
  }
  series.push_back(full);
  while (true) {
    const SubspaceBasis& prev = series.back();
    if (prev.dim() == 0) break;
    // [g, prev]: spanned by [e_m, b] for all m and b in the basis of prev
    std::vector<Vec> gens;
    for (const auto& b : prev.vectors)
      for (int m = 1; m <= n_; ++m) gens.push_back(bracket_basis(m, b));
    const SubspaceBasis next = image_basis(Matrix::from_columns(gens));
    if (next.dim() == prev.dim()) break;  // stabilized without reaching 0
    series.push_back(next);
  }
  return series;
}

SubspaceBasis LieAlgebra::derived_subalgebra() const {
  std::vector<Vec> gens;
  for (int i = 1; i < n_; ++i)
    for (int j = i + 1; j <= n_; ++j) gens.push_back(entry(i, j));
  return image_basis(Matrix::from_columns(gens));
}

SubspaceBasis LieAlgebra::center() const {
  // z := { x : [x, e_j] = 0 for all j }, one block row per j
  Matrix m(n_ * n_, n_);
  for (int i = 1; i <= n_; ++i) {
    Vec ei = zero_vec(n_);
    ei[i - 1] = 1;
    for (int j = 1; j <= n_; ++j) {
      const Vec b = bracket(ei, [&] {
        Vec ej = zero_vec(n_);
        ej[j - 1] = 1;
        return ej;
      }());
      for (int a = 0; a < n_; ++a) m.at((j - 1) * n_ + a, i - 1) = b[a];
    }
  }
  return kernel_basis(m);
}

bool LieAlgebra::is_nilpotent() const {
  require_validated("is_nilpotent");
  return lower_central_series().back().dim() == 0;
}

int LieAlgebra::nilindex() const {
  require_validated("nilindex");
  const auto series = lower_central_series();
  if (series.back().dim() != 0)
    throw std::invalid_argument("nilindex: algebra is not nilpotent");
  return static_cast<int>(series.size()) - 1;
}

std::vector<int> LieAlgebra::nilpotent_type() const {
  require_validated("nilpotent_type");
  const auto series = lower_central_series();
  if (series.back().dim() != 0)
    throw std::invalid_argument("nilpotent_type: algebra is not nilpotent");
  std::vector<int> type;
  for (std::size_t t = 0; t + 1 < series.size(); ++t)
    type.push_back(series[t].dim() - series[t + 1].dim());
  return type;
}

bool LieAlgebra::is_filiform() const {
  require_validated("is_filiform");
  const auto series = lower_central_series();
  return series.back().dim() == 0 &&
         static_cast<int>(series.size()) - 1 == n_ - 1;
}

LieAlgebra LieAlgebra::change_basis(const Matrix& p) const {
  if (p.rows() != n_ || p.cols() != n_)
    throw std::invalid_argument("change_basis: matrix must be n x n");
  const auto p_inv = inverse(p);
  if (!p_inv)
    throw std::invalid_argument("change_basis: matrix is singular");
  LieAlgebra out(n_);
  for (int a = 1; a < n_; ++a)
    for (int b = a + 1; b <= n_; ++b) {
      const Vec v = bracket(p.column(a - 1), p.column(b - 1));
      out.entry(a, b) = p_inv->apply(v);
    }
  out.validated_ = validated_;
  return out;
}

bool LieAlgebra::operator==(const LieAlgebra& rhs) const {
  return n_ == rhs.n_ && table_ == rhs.table_;
}

std::vector<std::pair<std::pair<int, int>, Vec>> nonzero_brackets(
    const LieAlgebra& g) {
  std::vector<std::pair<std::pair<int, int>, Vec>> out;
  for (int i = 1; i < g.n_; ++i)
    for (int j = i + 1; j <= g.n_; ++j) {
      const Vec& c = g.entry(i, j);
      if (!is_zero_vec(c)) out.push_back({{i, j}, c});
    }
  return out;
}

std::vector<Matrix> derivation_basis(const LieAlgebra& g) {
  const int n = g.dim();
  // unknowns: D[a][b] (0-based), flattened as a*n + b
  const int pairs = n * (n - 1) / 2;
  Matrix sys(pairs * n, n * n);
  int row0 = 0;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j, row0 += n) {
      const Vec bij = g.bracket(i, j);
      for (int a = 0; a < n; ++a) {
        // D[e_i,e_j]:  sum_m bij[m] D[a][m]
        for (int m = 0; m < n; ++m)
          if (!is_zero(bij[m])) sys.at(row0 + a, a * n + m) += bij[m];
        // -[De_i, e_j]: De_i = sum_m D[m][i-1] e_{m+1}
        for (int m = 1; m <= n; ++m) {
          const Vec bmj = g.bracket(m, j);
          if (!is_zero(bmj[a]))
            sys.at(row0 + a, (m - 1) * n + (i - 1)) -= bmj[a];
          const Vec bim = g.bracket(i, m);
          if (!is_zero(bim[a]))
            sys.at(row0 + a, (m - 1) * n + (j - 1)) -= bim[a];
        }
      }
    }
  const SubspaceBasis ker = kernel_basis(sys);
  std::vector<Matrix> basis;
  for (const auto& v : ker.vectors) {
    Matrix d(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) d.at(a, b) = v[a * n + b];
    basis.push_back(d);
  }
  return basis;
}

bool is_derivation(const LieAlgebra& g, const Matrix& d) {
  const int n = g.dim();
  if (d.rows() != n || d.cols() != n) return false;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Vec ei = zero_vec(n), ej = zero_vec(n);
      ei[i - 1] = 1;
      ej[j - 1] = 1;
      const Vec lhs = d.apply(g.bracket(i, j));
      const Vec rhs =
          add(g.bracket(d.apply(ei), ej), g.bracket(ei, d.apply(ej)));
      if (lhs != rhs) return false;
    }
  return true;
}

std::optional<Matrix> find_nonsingular_derivation(const LieAlgebra& g,
                                                  int trials,
                                                  std::uint64_t seed) {
  const auto basis = derivation_basis(g);
  if (basis.empty()) return std::nullopt;
  for (const auto& d : basis)
    if (!is_zero(determinant(d))) return d;
  std::mt19937_64 rng(seed);
  const int n = g.dim();
  for (int t = 0; t < trials; ++t) {
    Matrix d(n, n);
    for (const auto& b : basis) {
      const long num = static_cast<long>(rng() % 21) - 10;
      const long den = static_cast<long>(rng() % 10) + 1;
      const Rational c = make_rational(num, den);
      if (is_zero(c)) continue;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d.at(i, j) += c * b.at(i, j);
    }
    if (!is_zero(determinant(d))) return d;
  }
  return std::nullopt;
}

}  // namespace filaff
