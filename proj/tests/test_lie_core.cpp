// Lie algebra core: brackets, Jacobi checking, series, centers,
// filiform detection, basis changes, derivations.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "filaff/lie_algebra.hpp"

#include <random>

using namespace filaff;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

Vec basis_vec(int n, int i) {
  Vec v = zero_vec(n);
  v[i - 1] = 1;
  return v;
}

// The graded filiform model: [e_1, e_i] = e_{i+1} for 2 <= i <= n-1.
LieAlgebra model_filiform(int n) {
  std::vector<StructureEntry> entries;
  for (int i = 2; i < n; ++i) entries.push_back({1, i, i + 1, q(1)});
  return LieAlgebra(n, entries);
}

// Heisenberg: [e_1, e_2] = e_3.
LieAlgebra heisenberg() { return LieAlgebra(3, {{1, 2, 3, q(1)}}); }

Vec random_vec(std::mt19937_64& rng, int n) {
  Vec v = zero_vec(n);
  for (int i = 0; i < n; ++i) {
    const long num = static_cast<long>(rng() % 9) - 4;
    const long den = static_cast<long>(rng() % 3) + 1;
    v[i] = q(num, den);
  }
  return v;
}

}  // namespace

TEST_CASE("bracket basics") {
  const LieAlgebra g = model_filiform(5);
  CHECK(g.bracket(1, 2) == basis_vec(5, 3));
  CHECK(g.bracket(2, 1) == scale(q(-1), basis_vec(5, 3)));
  CHECK(g.bracket(1, 4) == basis_vec(5, 5));
  CHECK(g.bracket(2, 3) == zero_vec(5));
  CHECK(g.bracket(3, 3) == zero_vec(5));
  CHECK(g.bracket(1, 5) == zero_vec(5));

  // accumulation of duplicate entries
  const LieAlgebra h(3, {{1, 2, 3, q(1)}, {1, 2, 3, q(2)}});
  CHECK(h.bracket(1, 2) == scale(q(3), basis_vec(3, 3)));

  CHECK_THROWS_AS(LieAlgebra(3, {{2, 1, 3, q(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra(3, {{1, 4, 3, q(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra(0), std::invalid_argument);
}

TEST_CASE("bilinear bracket and antisymmetry on random vectors") {
  const LieAlgebra g = model_filiform(6);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 25; ++t) {
    const Vec x = random_vec(rng, 6), y = random_vec(rng, 6);
    CHECK(is_zero_vec(g.bracket(x, x)));
    CHECK(g.bracket(x, y) == scale(q(-1), g.bracket(y, x)));
    // agreement with ad
    CHECK(g.ad(x).apply(y) == g.bracket(x, y));
  }
}

TEST_CASE("jacobi defects") {
  SUBCASE("model algebras are Lie algebras") {
    for (int n = 2; n <= 9; ++n) {
      const LieAlgebra g = model_filiform(n);
      CHECK(g.jacobi_defects().empty());
      CHECK(g.is_validated());
    }
  }
  SUBCASE("a broken table is caught with the exact residual") {
    // sabotage: [e_2, e_3] = e_4 added to the 5-dimensional model breaks
    // the triple (1, 2, 3): [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2]
    //  = [e3,e3] + [e4,e1] + [-e3,e2] = -e5 - 0 = -e5
    std::vector<StructureEntry> entries;
    for (int i = 2; i < 5; ++i) entries.push_back({1, i, i + 1, q(1)});
    entries.push_back({2, 3, 4, q(1)});
    const LieAlgebra g(5, entries);
    const auto defects = g.jacobi_defects();
    REQUIRE(!defects.empty());
    CHECK(defects[0].i == 1);
    CHECK(defects[0].j == 2);
    CHECK(defects[0].k == 3);
    CHECK(defects[0].defect == scale(q(-1), basis_vec(5, 5)));
    CHECK_FALSE(g.is_validated());
    CHECK_THROWS_AS(g.require_validated("test"), std::invalid_argument);
  }
  SUBCASE("brute-force cyclic sums agree") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 20; ++t) {
      const int n = 3 + static_cast<int>(rng() % 4);
      std::vector<StructureEntry> entries;
      for (int c = 0; c < 4; ++c) {
        const int i = 1 + static_cast<int>(rng() % (n - 1));
        const int j = i + 1 + static_cast<int>(rng() % (n - i));
        const int k = 1 + static_cast<int>(rng() % n);
        entries.push_back({i, j, k, q(static_cast<long>(rng() % 5) - 2)});
      }
      const LieAlgebra g(n, entries);
      const auto defects = g.jacobi_defects();
      // recompute each triple directly through the bilinear bracket
      int count = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k) {
            Vec s = g.bracket(g.bracket(basis_vec(n, i), basis_vec(n, j)),
                              basis_vec(n, k));
            s = add(s, g.bracket(g.bracket(basis_vec(n, j), basis_vec(n, k)),
                                 basis_vec(n, i)));
            s = add(s, g.bracket(g.bracket(basis_vec(n, k), basis_vec(n, i)),
                                 basis_vec(n, j)));
            if (!is_zero_vec(s)) {
              bool found = false;
              for (const auto& d : defects)
                if (d.i == i && d.j == j && d.k == k && d.defect == s)
                  found = true;
              CHECK(found);
              ++count;
            }
          }
      CHECK(count == static_cast<int>(defects.size()));
    }
  }
}

TEST_CASE("lower central series, center, filiform detection") {
  SUBCASE("graded filiform model") {
    const LieAlgebra g = model_filiform(5);
    const auto series = g.lower_central_series();
    std::vector<int> dims;
    for (const auto& s : series) dims.push_back(s.dim());
    CHECK(dims == std::vector<int>{5, 3, 2, 1, 0});
    CHECK(g.nilindex() == 4);
    CHECK(g.is_nilpotent());
    CHECK(g.nilpotent_type() == std::vector<int>{2, 1, 1, 1});
    CHECK(g.is_filiform());
    const auto z = g.center();
    REQUIRE(z.dim() == 1);
    CHECK(z.vectors[0] == basis_vec(5, 5));
    CHECK(g.derived_subalgebra().dim() == 3);
  }
  SUBCASE("abelian") {
    const LieAlgebra g(4);
    const auto series = g.lower_central_series();
    REQUIRE(series.size() == 2);
    CHECK(series[1].dim() == 0);
    CHECK(g.nilindex() == 1);
    CHECK(g.center().dim() == 4);
    CHECK_FALSE(g.is_filiform());
    CHECK(g.nilpotent_type() == std::vector<int>{4});
  }
  SUBCASE("heisenberg") {
    const LieAlgebra g = heisenberg();
    std::vector<int> dims;
    for (const auto& s : g.lower_central_series()) dims.push_back(s.dim());
    CHECK(dims == std::vector<int>{3, 1, 0});
    CHECK(g.is_filiform());  // dimension 3: maximal class
    CHECK(g.center().dim() == 1);
  }
  SUBCASE("non-nilpotent input") {
    // [e1,e2] = e2 : solvable, not nilpotent
    const LieAlgebra g(2, {{1, 2, 2, q(1)}});
    CHECK(g.jacobi_defects().empty());
    CHECK_FALSE(g.is_nilpotent());
    CHECK_THROWS_AS(g.nilindex(), std::invalid_argument);
  }
}

TEST_CASE("change of basis") {
  const LieAlgebra g = model_filiform(6);
  SUBCASE("identity is a no-op") {
    CHECK(g.change_basis(Matrix::identity(6)) == g);
  }
  SUBCASE("round trip through a random invertible matrix") {
    REQUIRE(g.jacobi_defects().empty());  // mark the source validated
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
      Matrix p(6, 6);
      do {
        for (int i = 0; i < 6; ++i)
          for (int j = 0; j < 6; ++j)
            p.at(i, j) = q(static_cast<long>(rng() % 7) - 3);
      } while (is_zero(determinant(p)));
      const LieAlgebra h = g.change_basis(p);
      CHECK(h.is_validated());  // validation status carries over
      CHECK(h.jacobi_defects().empty());
      const auto p_inv = inverse(p);
      REQUIRE(p_inv.has_value());
      CHECK(h.change_basis(*p_inv) == g);
      // invariants preserved
      CHECK(h.is_filiform());
      CHECK(h.center().dim() == 1);
    }
  }
  SUBCASE("singular matrix rejected") {
    CHECK_THROWS_AS(g.change_basis(Matrix(6, 6)), std::invalid_argument);
  }
}

TEST_CASE("derivations") {
  SUBCASE("abelian: every matrix is a derivation") {
    const LieAlgebra g(3);
    CHECK(derivation_basis(g).size() == 9);
  }
  SUBCASE("heisenberg derivation algebra has dimension 6") {
    // classical count for the 3-dimensional Heisenberg algebra
    const LieAlgebra g = heisenberg();
    const auto basis = derivation_basis(g);
    CHECK(basis.size() == 6);
    for (const auto& d : basis) CHECK(is_derivation(g, d));
    // independent cross-check: the Leibniz system assembled directly
    int oracle = 0;
    {
      std::vector<Matrix> all;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          Matrix e(3, 3);
          e.at(a, b) = 1;
          all.push_back(e);
        }
      // dimension = 9 - rank of the constraint map D -> defect
      std::vector<Vec> cols;
      for (const auto& e : all) {
        Vec defect;
        for (int i = 1; i <= 3; ++i)
          for (int j = i + 1; j <= 3; ++j) {
            Vec ei = basis_vec(3, i), ej = basis_vec(3, j);
            const Vec lhs = e.apply(g.bracket(i, j));
            const Vec rhs =
                add(g.bracket(e.apply(ei), ej), g.bracket(ei, e.apply(ej)));
            const Vec diff = sub(lhs, rhs);
            defect.insert(defect.end(), diff.begin(), diff.end());
          }
        cols.push_back(defect);
      }
      oracle = 9 - rank(Matrix::from_columns(cols));
    }
    CHECK(static_cast<int>(basis.size()) == oracle);
  }
  SUBCASE("graded model admits an invertible derivation") {
    const LieAlgebra g = model_filiform(5);
    const auto d = find_nonsingular_derivation(g, 50, 7);
    REQUIRE(d.has_value());
    CHECK(is_derivation(g, *d));
    CHECK(!is_zero(determinant(*d)));
  }
  SUBCASE("search can be inconclusive") {
    // with zero random trials and no invertible basis element the search
    // reports nothing, which is not a proof of nonexistence
    const LieAlgebra g(2);
    const auto d = find_nonsingular_derivation(g, 0, 1);
    // basis is all unit matrices E_ab; none with nonzero determinant has
    // to exist among them for this to stay honest either way
    if (d.has_value()) CHECK(!is_zero(determinant(*d)));
  }
  SUBCASE("leibniz violation detected") {
    const LieAlgebra g = heisenberg();
    Matrix d = Matrix::identity(3);  // D[e1,e2] = e3 but [De1,e2]+[e1,De2] = 2e3
    CHECK_FALSE(is_derivation(g, d));
  }
}
