#include "filaff/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace filaff {

int coefficient_dim(Coefficients m, int n) {
  return m == Coefficients::Trivial ? 1 : n;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<int>> index_tuples(int n, int p) {
  if (p < 0) throw std::invalid_argument("negative cochain degree");
  if (p == 0) return {{}};
  if (p > n) return {};
  std::vector<std::vector<int>> out;
  for (int m = p; m <= n; ++m)
    for (auto& t : index_tuples(m - 1, p - 1)) {
      t.push_back(m);
      out.push_back(std::move(t));
    }
  return out;
}

int colex_rank(const std::vector<int>& tuple) {
  long long r = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    r += binomial(tuple[i] - 1, static_cast<int>(i) + 1);
  return static_cast<int>(r);
}

namespace {

void check_tuple(const std::vector<int>& tuple, int n, int p) {
  if (static_cast<int>(tuple.size()) != p)
    throw std::invalid_argument("tuple length does not match cochain degree");
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] < 1 || tuple[i] > n)
      throw std::invalid_argument("tuple index out of range");
    if (i > 0 && tuple[i - 1] >= tuple[i])
      throw std::invalid_argument("tuple must be strictly increasing");
  }
}

// Sort `idx` in place; returns the sign of the permutation, or 0 if an
// index repeats.
int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j] <= idx[j - 1]; --j) {
      if (idx[j] == idx[j - 1]) return 0;
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  return sign;
}

}  // namespace

Cochain::Cochain(int n, int p, Coefficients coeff)
    : n_(n), p_(p), coeff_(coeff) {
  if (n < 1) throw std::invalid_argument("ambient dimension must be positive");
  if (p < 0) throw std::invalid_argument("negative cochain degree");
}

void Cochain::set(const std::vector<int>& tuple, const Vec& value) {
  check_tuple(tuple, n_, p_);
  if (static_cast<int>(value.size()) != value_dim())
    throw std::invalid_argument("value dimension mismatch");
  if (is_zero_vec(value))
    values_.erase(tuple);
  else
    values_[tuple] = value;
}

void Cochain::set_scalar(const std::vector<int>& tuple, const Rational& value) {
  if (coeff_ != Coefficients::Trivial)
    throw std::invalid_argument("set_scalar on a non-scalar cochain");
  set(tuple, Vec{value});
}

Vec Cochain::evaluate(const std::vector<int>& indices) const {
  if (static_cast<int>(indices.size()) != p_)
    throw std::invalid_argument("wrong number of arguments");
  std::vector<int> idx = indices;
  for (int i : idx)
    if (i < 1 || i > n_) throw std::invalid_argument("index out of range");
  const int sign = sort_sign(idx);
  if (sign == 0) return zero_vec(value_dim());
  const auto it = values_.find(idx);
  if (it == values_.end()) return zero_vec(value_dim());
  return sign == 1 ? it->second : scale(Rational(-1), it->second);
}

Rational Cochain::evaluate_scalar(const std::vector<int>& indices) const {
  if (coeff_ != Coefficients::Trivial)
    throw std::invalid_argument("evaluate_scalar on a non-scalar cochain");
  return evaluate(indices)[0];
}

bool Cochain::is_zero() const {
  for (const auto& [t, v] : values_)
    if (!is_zero_vec(v)) return false;
  return true;
}

Vec Cochain::coordinates() const {
  const int dm = value_dim();
  const long long total = binomial(n_, p_) * dm;
  Vec out = zero_vec(static_cast<int>(total));
  for (const auto& [t, v] : values_) {
    const int base = colex_rank(t) * dm;
    for (int a = 0; a < dm; ++a) out[base + a] = v[a];
  }
  return out;
}

Cochain Cochain::from_coordinates(int n, int p, Coefficients coeff,
                                  const Vec& coords) {
  Cochain c(n, p, coeff);
  const int dm = c.value_dim();
  const auto tuples = index_tuples(n, p);
  if (static_cast<long long>(coords.size()) !=
      static_cast<long long>(tuples.size()) * dm)
    throw std::invalid_argument("coordinate vector has wrong length");
  for (const auto& t : tuples) {
    const int base = colex_rank(t) * dm;
    Vec v(coords.begin() + base, coords.begin() + base + dm);
    if (!is_zero_vec(v)) c.set(t, v);
  }
  return c;
}

Cochain Cochain::operator+(const Cochain& rhs) const {
  if (n_ != rhs.n_ || p_ != rhs.p_ || coeff_ != rhs.coeff_)
    throw std::invalid_argument("cochain shape mismatch");
  Cochain out = *this;
  for (const auto& [t, v] : rhs.values_) {
    auto it = out.values_.find(t);
    if (it == out.values_.end()) {
      out.values_[t] = v;
    } else {
      it->second = add(it->second, v);
      if (is_zero_vec(it->second)) out.values_.erase(it);
    }
  }
  return out;
}

Cochain Cochain::operator-(const Cochain& rhs) const {
  return *this + rhs.scaled(Rational(-1));
}

Cochain Cochain::scaled(const Rational& c) const {
  Cochain out(n_, p_, coeff_);
  if (filaff::is_zero(c)) return out;
  for (const auto& [t, v] : values_) out.values_[t] = scale(c, v);
  return out;
}

bool Cochain::operator==(const Cochain& rhs) const {
  if (n_ != rhs.n_ || p_ != rhs.p_ || coeff_ != rhs.coeff_) return false;
  return (*this - rhs).is_zero();
}

Cochain apply_coboundary(const LieAlgebra& g, const Cochain& c) {
  const int n = g.dim();
  if (c.ambient_dim() != n)
    throw std::invalid_argument("cochain/algebra dimension mismatch");
  const int p = c.degree();
  const int dm = c.value_dim();
  Cochain out(n, p + 1, c.coefficients());
  for (const auto& s : index_tuples(n, p + 1)) {
    Vec val = zero_vec(dm);
    // bracket terms: (-1)^{r+s} c([x_r, x_s], rest...)
    for (int a = 0; a + 1 <= p; ++a)
      for (int b = a + 1; b <= p; ++b) {
        const Vec w = g.bracket(s[a], s[b]);
        if (is_zero_vec(w)) continue;
        std::vector<int> rest;
        for (int t = 0; t <= p; ++t)
          if (t != a && t != b) rest.push_back(s[t]);
        const int sgn = ((a + 1) + (b + 1)) % 2 == 0 ? 1 : -1;
        for (int m = 1; m <= n; ++m) {
          if (is_zero(w[m - 1])) continue;
          std::vector<int> args{m};
          args.insert(args.end(), rest.begin(), rest.end());
          const Vec v = c.evaluate(args);
          axpy(val, sgn == 1 ? w[m - 1] : -w[m - 1], v);
        }
      }
    // action terms: (-1)^{t+1} x_t . c(rest...)
    if (c.coefficients() == Coefficients::Adjoint) {
      for (int a = 0; a <= p; ++a) {
        std::vector<int> rest;
        for (int t = 0; t <= p; ++t)
          if (t != a) rest.push_back(s[t]);
        const Vec v = c.evaluate(rest);
        if (is_zero_vec(v)) continue;
        Vec ea = zero_vec(n);
        ea[s[a] - 1] = 1;
        const Vec acted = g.bracket(ea, v);
        axpy(val, a % 2 == 0 ? Rational(1) : Rational(-1), acted);
      }
    }
    if (!is_zero_vec(val)) out.set(s, val);
  }
  return out;
}

std::vector<SparseVec> coboundary_columns(const LieAlgebra& g, int p,
                                          Coefficients m) {
  const int n = g.dim();
  const int dm = coefficient_dim(m, n);
  const auto tuples = index_tuples(n, p);
  std::vector<SparseVec> cols(tuples.size() * dm);
  if (p >= n) return cols;  // image lives in degree p+1 > n: zero map

  // reverse index: basis component -> brackets [e_i,e_j] containing it
  struct PairUse {
    int i, j;
    Rational coef;
  };
  std::vector<std::vector<PairUse>> rev(n + 1);
  for (const auto& [pr, vec] : nonzero_brackets(g))
    for (int comp = 1; comp <= n; ++comp)
      if (!is_zero(vec[comp - 1]))
        rev[comp].push_back({pr.first, pr.second, vec[comp - 1]});

  for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
    const auto& t = tuples[ti];
    // bracket-term targets shared by every coefficient component
    std::map<int, Rational> shared;  // output tuple rank -> coefficient
    for (int ig = 0; ig < p; ++ig) {
      const int gv = t[ig];
      std::vector<int> rest;
      for (int x = 0; x < p; ++x)
        if (x != ig) rest.push_back(t[x]);
      for (const auto& use : rev[gv]) {
        if (std::binary_search(rest.begin(), rest.end(), use.i) ||
            std::binary_search(rest.begin(), rest.end(), use.j))
          continue;
        std::vector<int> s = rest;
        s.push_back(use.i);
        s.push_back(use.j);
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
        const int pr = static_cast<int>(std::lower_bound(s.begin(), s.end(),
                                                         use.i) -
                                        s.begin()) +
                       1;
        const int ps = static_cast<int>(std::lower_bound(s.begin(), s.end(),
                                                         use.j) -
                                        s.begin()) +
                       1;
        // (-1)^{pr+ps} from the differential, (-1)^{ig} from moving the
        // bracket component back into sorted position within t
        const bool neg = ((pr + ps) % 2 != 0) != (ig % 2 != 0);
        Rational add_c = neg ? -use.coef : use.coef;
        auto [it, inserted] = shared.emplace(colex_rank(s), add_c);
        if (!inserted) it->second += add_c;
      }
    }
    for (int a = 0; a < dm; ++a) {
      std::map<int, Rational> col;
      for (const auto& [srank, coef] : shared)
        if (!is_zero(coef)) col[srank * dm + a] = coef;
      if (m == Coefficients::Adjoint) {
        for (int extra = 1; extra <= n; ++extra) {
          if (std::binary_search(t.begin(), t.end(), extra)) continue;
          std::vector<int> s = t;
          s.insert(std::lower_bound(s.begin(), s.end(), extra), extra);
          const int pt = static_cast<int>(std::lower_bound(s.begin(), s.end(),
                                                           extra) -
                                          s.begin()) +
                         1;
          const Vec acted = g.bracket(extra, a + 1);
          if (is_zero_vec(acted)) continue;
          const int srank = colex_rank(s);
          for (int b = 1; b <= n; ++b) {
            if (is_zero(acted[b - 1])) continue;
            const Rational add_c =
                pt % 2 == 1 ? acted[b - 1] : -acted[b - 1];
            auto [it, inserted] = col.emplace(srank * dm + (b - 1), add_c);
            if (!inserted) it->second += add_c;
          }
        }
      }
      SparseVec sv;
      for (const auto& [row, coef] : col)
        if (!is_zero(coef)) sv.emplace_back(row, coef);
      cols[ti * dm + a] = std::move(sv);
    }
  }
  return cols;
}

Matrix coboundary_matrix(const LieAlgebra& g, int p, Coefficients m) {
  const int n = g.dim();
  const int dm = coefficient_dim(m, n);
  const long long rows = binomial(n, p + 1) * dm;
  const long long cols = binomial(n, p) * dm;
  if (rows * cols > 6'000'000)
    throw std::runtime_error(
        "coboundary matrix too large for dense assembly; use the sparse "
        "column form");
  const auto sparse = coboundary_columns(g, p, m);
  Matrix out(static_cast<int>(rows), static_cast<int>(cols));
  for (std::size_t j = 0; j < sparse.size(); ++j)
    for (const auto& [row, coef] : sparse[j])
      out.at(row, static_cast<int>(j)) = coef;
  return out;
}

bool is_cocycle(const LieAlgebra& g, const Cochain& c) {
  g.require_validated("is_cocycle");
  return apply_coboundary(g, c).is_zero();
}

bool is_coboundary(const LieAlgebra& g, const Cochain& c) {
  g.require_validated("is_coboundary");
  if (c.degree() == 0) return c.is_zero();
  const Matrix d = coboundary_matrix(g, c.degree() - 1, c.coefficients());
  return solve(d, c.coordinates()).has_value();
}

CohomologyReport cohomology(const LieAlgebra& g, int p, Coefficients m) {
  g.require_validated("cohomology");
  const int n = g.dim();
  if (p < 0 || p > n) throw std::invalid_argument("degree out of range");
  CohomologyReport rep;
  rep.p = p;
  const Matrix dp = coboundary_matrix(g, p, m);
  const SubspaceBasis z = kernel_basis(dp);
  rep.cocycle_dim = z.dim();
  RowReducer mod_b(static_cast<int>(binomial(n, p) * coefficient_dim(m, n)));
  if (p > 0) {
    const auto prev_cols = coboundary_columns(g, p - 1, m);
    for (const auto& col : prev_cols) {
      Vec dense = sparse_to_dense(col, mod_b.ambient_dim());
      if (mod_b.add(dense)) ++rep.coboundary_dim;
    }
  }
  rep.betti = rep.cocycle_dim - rep.coboundary_dim;
  // representatives: reduce cocycles modulo coboundaries, keep the
  // independent nonzero residues
  for (const auto& v : z.vectors) {
    if (static_cast<int>(rep.representatives.size()) == rep.betti) break;
    const Vec res = mod_b.reduce(v);
    if (is_zero_vec(res)) continue;
    mod_b.add(res);
    rep.representatives.push_back(
        Cochain::from_coordinates(n, p, m, normalize_first_nonzero(res)));
  }
  return rep;
}

std::vector<int> betti_vector(const LieAlgebra& g) {
  g.require_validated("betti_vector");
  const int n = g.dim();
  std::vector<int> betti;
  int prev_rank = 0;
  for (int p = 0; p <= n; ++p) {
    const int rank_p = rank_of_columns(coboundary_columns(g, p, Coefficients::Trivial));
    betti.push_back(static_cast<int>(binomial(n, p)) - rank_p - prev_rank);
    prev_rank = rank_p;
  }
  return betti;
}

Cochain omega_cochain(int n, int ell) {
  if (ell < 1 || 2 * ell + 1 > n)
    throw std::invalid_argument("omega index out of range: need 1 <= ell <= (n-1)/2");
  Cochain c(n, 2, Coefficients::Trivial);
  for (int k = 2; k <= ell + 1; ++k)
    c.set_scalar({k, 2 * ell + 3 - k}, k % 2 == 0 ? Rational(1) : Rational(-1));
  return c;
}

ConjectureChecks conjecture_checks(const LieAlgebra& g) {
  g.require_validated("conjecture_checks");
  if (!g.is_nilpotent())
    throw std::invalid_argument("conjecture_checks: algebra is not nilpotent");
  ConjectureChecks out;
  out.betti = betti_vector(g);
  const long long b1 = out.betti.size() > 1 ? out.betti[1] : 0;
  const long long b2 = out.betti.size() > 2 ? out.betti[2] : 0;
  out.b2_exceeds_quarter_b1_squared = 4 * b2 > b1 * b1;
  long long total = 0;
  for (int b : out.betti) total += b;
  const int z = g.center().dim();
  out.total_at_least_2_pow_center = total >= (1LL << z);
  return out;
}

}  // namespace filaff
