#include "filaff/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace filaff {

namespace {

// |a| < |b| for pivot selection
bool abs_less(const Rational& a, const Rational& b) {
  return cmp(abs(a), abs(b)) < 0;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  RrefResult res{m, {}};
  Matrix& a = res.mat;
  const int nr = a.rows(), nc = a.cols();
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int best = -1;
    for (int i = r; i < nr; ++i) {
      if (is_zero(a.at(i, c))) continue;
      if (best < 0 || abs_less(a.at(i, c), a.at(best, c))) best = i;
    }
    if (best < 0) continue;
    if (best != r)
      for (int j = 0; j < nc; ++j) std::swap(a.at(r, j), a.at(best, j));
    // scale pivot row to leading 1
    {
      const Rational p = a.at(r, c);
      for (int j = c; j < nc; ++j)
        if (!is_zero(a.at(r, j))) a.at(r, j) /= p;
    }
    // clear the column everywhere else
    for (int i = 0; i < nr; ++i) {
      if (i == r) continue;
      const Rational f = a.at(i, c);
      if (is_zero(f)) continue;
      for (int j = c; j < nc; ++j)
        if (!is_zero(a.at(r, j))) a.at(i, j) -= f * a.at(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  return res;
}

int rank(const Matrix& m) { return rref(m).rank(); }

Vec normalize_first_nonzero(const Vec& v) {
  for (const auto& x : v) {
    if (!is_zero(x)) {
      Vec r(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / x;
      return r;
    }
  }
  return v;
}

SubspaceBasis kernel_basis(const Matrix& m) {
  const int nc = m.cols();
  SubspaceBasis out{nc, {}};
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(nc, false);
  for (int p : r.pivots) is_pivot[p] = true;
  for (int f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(nc);
    v[f] = 1;
    for (int t = 0; t < r.rank(); ++t) v[r.pivots[t]] = -r.mat.at(t, f);
    out.vectors.push_back(normalize_first_nonzero(v));
  }
  return out;
}

SubspaceBasis image_basis(const Matrix& m) {
  SubspaceBasis out{m.rows(), {}};
  const RrefResult r = rref(m);
  for (int p : r.pivots) out.vectors.push_back(m.column(p));
  return out;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("solve: rhs size mismatch");
  const int nr = a.rows(), nc = a.cols();
  Matrix aug(nr, nc + 1);
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nc; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, nc) = b[i];
  }
  const RrefResult r = rref(aug);
  for (int p : r.pivots)
    if (p == nc) return std::nullopt;  // pivot in the rhs column
  Vec x = zero_vec(nc);
  for (int t = 0; t < r.rank(); ++t) x[r.pivots[t]] = r.mat.at(t, nc);
  return x;
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of non-square matrix");
  const int n = m.rows();
  Matrix a = m;
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int best = -1;
    for (int i = c; i < n; ++i) {
      if (is_zero(a.at(i, c))) continue;
      if (best < 0 || abs_less(a.at(i, c), a.at(best, c))) best = i;
    }
    if (best < 0) return Rational(0);
    if (best != c) {
      for (int j = 0; j < n; ++j) std::swap(a.at(c, j), a.at(best, j));
      det = -det;
    }
    const Rational p = a.at(c, c);
    det *= p;
    for (int i = c + 1; i < n; ++i) {
      const Rational f = a.at(i, c) / p;
      if (is_zero(f)) continue;
      for (int j = c; j < n; ++j)
        if (!is_zero(a.at(c, j))) a.at(i, j) -= f * a.at(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("inverse of non-square matrix");
  const int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const RrefResult r = rref(aug);
  if (r.rank() < n || r.pivots[n - 1] >= n) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

Vec RowReducer::reduce(Vec v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("reducer ambient dimension mismatch");
  for (const auto& [lead, row] : rows_) {
    if (is_zero(v[lead])) continue;
    const Rational f = v[lead];
    for (int j = lead; j < ambient_; ++j)
      if (!is_zero(row[j])) v[j] -= f * row[j];
  }
  return v;
}

bool RowReducer::add(const Vec& v) {
  Vec res = reduce(v);
  int lead = -1;
  for (int j = 0; j < ambient_; ++j)
    if (!is_zero(res[j])) {
      lead = j;
      break;
    }
  if (lead < 0) return false;
  const Rational p = res[lead];
  for (int j = lead; j < ambient_; ++j)
    if (!is_zero(res[j])) res[j] /= p;
  rows_.emplace(lead, std::move(res));
  return true;
}

SubspaceBasis quotient_representatives(const SubspaceBasis& big,
                                       const SubspaceBasis& small) {
  if (big.ambient_dim != small.ambient_dim)
    throw std::invalid_argument("quotient: ambient dimension mismatch");
  RowReducer big_span(big.ambient_dim);
  for (const auto& v : big.vectors) big_span.add(v);
  for (const auto& v : small.vectors)
    if (!big_span.contains(v))
      throw std::invalid_argument(
          "quotient: second subspace is not contained in the first");
  RowReducer mod(big.ambient_dim);
  for (const auto& v : small.vectors) mod.add(v);
  SubspaceBasis out{big.ambient_dim, {}};
  for (const auto& v : big.vectors) {
    const Vec res = mod.reduce(v);
    if (is_zero_vec(res)) continue;
    mod.add(res);
    out.vectors.push_back(normalize_first_nonzero(res));
  }
  return out;
}

SparseVec sparse_from_dense(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) s.emplace_back(static_cast<int>(i), v[i]);
  return s;
}

Vec sparse_to_dense(const SparseVec& v, int n) {
  Vec d = zero_vec(n);
  for (const auto& [i, x] : v) d[i] = x;
  return d;
}

SparseVec sparse_axpy(const SparseVec& a, const Rational& c,
                      const SparseVec& b) {
  SparseVec r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Rational v = -c * b[j].second;
      if (!is_zero(v)) r.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      Rational v = a[i].second - c * b[j].second;
      if (!is_zero(v)) r.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

SparseVec SparseReducer::reduce(SparseVec v) const {
  // Stored rows only touch indices >= their leading index, so entries that
  // survive at the front are final.
  SparseVec done;
  while (!v.empty()) {
    const auto it = rows_.find(v.front().first);
    if (it == rows_.end()) {
      done.push_back(v.front());
      v.erase(v.begin());
    } else {
      v = sparse_axpy(v, v.front().second, it->second);
    }
  }
  return done;
}

bool SparseReducer::add(SparseVec v) {
  // iterative, front-first elimination
  while (!v.empty()) {
    const auto it = rows_.find(v.front().first);
    if (it == rows_.end()) {
      const Rational p = v.front().second;
      if (p != 1)
        for (auto& [idx, val] : v) val /= p;
      const int lead = v.front().first;
      rows_.emplace(lead, std::move(v));
      return true;
    }
    v = sparse_axpy(v, v.front().second, it->second);
  }
  return false;
}

int rank_of_columns(const std::vector<SparseVec>& columns) {
  SparseReducer red;
  for (const auto& c : columns) red.add(c);
  return red.rank();
}

}  // namespace filaff
