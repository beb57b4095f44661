#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "filaff/filiform.hpp"

#include <random>
#include <set>

using namespace filaff;

namespace {

Vec basis_vec(int n, int i) {
  Vec v = zero_vec(n);
  v[i - 1] = 1;
  return v;
}

// random parameter map over the full admissible set; no Jacobi filtering
FiliformParams random_params(int n, std::mt19937_64& rng) {
  static const std::vector<Rational> vals = {
      Rational(0),    Rational(1),  Rational(-1),   Rational(2),
      Rational(-2),   Rational(3),  Rational(1, 2), Rational(-1, 2)};
  FiliformParams p{n, {}};
  for (const auto& key : index_set(n)) {
    const Rational v = vals[rng() % vals.size()];
    if (!is_zero(v)) p.alpha[key] = v;
  }
  return p;
}

Matrix random_invertible(int n, std::mt19937_64& rng) {
  while (true) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.at(i, j) = Rational(static_cast<long>(rng() % 5) - 2);
    if (!is_zero(determinant(m))) return m;
  }
}

}  // namespace

TEST_CASE("admissible index set") {
  const auto i6 = index_set(6);
  REQUIRE(i6.size() == 3);
  CHECK(i6[0] == IndexPair{2, 5});
  CHECK(i6[1] == IndexPair{2, 6});
  CHECK(i6[2] == IndexPair{3, 6});

  CHECK(index_set(9).size() == 9);
  CHECK(index_set(10).size() == 13);
  CHECK(index_set(11).size() == 16);

  // closed-form count: (n-3)^2/4 for odd n, (n^2-6n+12)/4 for even n
  for (int n = 3; n <= 20; ++n) {
    const auto idx = index_set(n);
    const std::size_t expect = n % 2 == 1
                                   ? (n - 3) * (n - 3) / 4
                                   : (n * n - 6 * n + 12) / 4;
    CHECK(idx.size() == expect);
    for (const auto& key : idx) CHECK(in_index_set(n, key));
    CHECK(std::set<IndexPair>(idx.begin(), idx.end()).size() == idx.size());
  }
  CHECK(!in_index_set(9, {2, 4}));   // s below 2k+1
  CHECK(!in_index_set(9, {5, 9}));   // k above n/2
  CHECK(!in_index_set(9, {2, 10}));  // s above n
  CHECK(in_index_set(10, {5, 10}));  // even-dimension extra slot
  CHECK(!in_index_set(9, {4, 10}));
  CHECK_THROWS_AS(index_set(2), std::invalid_argument);
}

TEST_CASE("deformation cochain values") {
  const Cochain psi25 = psi_cochain(9, 2, 5);
  CHECK(psi25.evaluate({2, 3}) == basis_vec(9, 5));
  CHECK(psi25.evaluate({2, 4}) == basis_vec(9, 6));
  CHECK(is_zero_vec(psi25.evaluate({3, 4})));  // needs i <= k = 2
  CHECK(is_zero_vec(psi25.evaluate({1, 5})));
  // (2,8): target 5 + (8-2-1) - 0 = 10 exceeds the dimension, so zero
  CHECK(is_zero_vec(psi25.evaluate({2, 8})));

  // psi(e_k ^ e_{k+1}) = e_s in general
  for (int n = 6; n <= 11; ++n)
    for (const auto& key : index_set(n)) {
      const Cochain psi = psi_cochain(n, key.k, key.s);
      CHECK(psi.evaluate({key.k, key.k + 1}) == basis_vec(n, key.s));
    }

  // a sign case with i < k: psi_{3,7}(e_2 ^ e_4) on dim 9:
  // (-1)^{3-2} C(4-3-1, 3-2) e_{7+0-1} = -C(0,1) e_6 = 0, and
  // psi_{3,7}(e_2 ^ e_5): (-1)^1 C(1,1) e_{7+1-1} = -e_7
  const Cochain psi37 = psi_cochain(9, 3, 7);
  CHECK(is_zero_vec(psi37.evaluate({2, 4})));
  CHECK(psi37.evaluate({2, 5}) == scale(Rational(-1), basis_vec(9, 7)));
  CHECK(psi37.evaluate({3, 4}) == basis_vec(9, 7));

  CHECK_THROWS_AS(psi_cochain(9, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(psi_cochain(9, 5, 9), std::invalid_argument);
}

TEST_CASE("deformation cochains are adjoint cocycles of the graded model") {
  for (int n = 6; n <= 10; ++n) {
    const LieAlgebra l = standard_graded(n);
    REQUIRE(l.jacobi_defects().empty());
    for (const auto& key : index_set(n))
      CHECK(is_cocycle(l, psi_cochain(n, key.k, key.s)));
  }
}

TEST_CASE("algebra construction from parameters") {
  SUBCASE("zero parameters give the graded model") {
    for (int n = 3; n <= 12; ++n)
      CHECK(build_algebra({n, {}}) == standard_graded(n));
  }

  SUBCASE("single parameter a_{2,5} = 1 in dimension 9") {
    FiliformParams p{9, {{{2, 5}, Rational(1)}}};
    const LieAlgebra g = build_algebra(p);
    REQUIRE(g.jacobi_defects().empty());
    CHECK(g.bracket(2, 3) == basis_vec(9, 5));
    CHECK(g.bracket(2, 4) == basis_vec(9, 6));
    CHECK(g.bracket(2, 5) == basis_vec(9, 7));
    CHECK(g.bracket(2, 6) == basis_vec(9, 8));
    CHECK(g.bracket(2, 7) == basis_vec(9, 9));
    CHECK(is_zero_vec(g.bracket(2, 8)));
    CHECK(is_zero_vec(g.bracket(3, 4)));
    CHECK(is_zero_vec(g.bracket(3, 5)));
    CHECK(g.is_filiform());
  }

  SUBCASE("bad parameter keys are rejected") {
    CHECK_THROWS_AS(build_algebra({9, {{{2, 4}, Rational(1)}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_algebra({9, {{{5, 9}, Rational(1)}}}),
                    std::invalid_argument);
  }

  SUBCASE("closed form agrees with the cocycle-sum construction") {
    std::mt19937_64 rng(2024);
    for (int n = 5; n <= 11; ++n)
      for (int t = 0; t < 12; ++t) {
        const FiliformParams p = random_params(n, rng);
        CHECK(build_algebra(p) == build_algebra_via_cocycles(p));
      }
  }

  SUBCASE("brackets respect the depth filtration") {
    // [e_i, e_j] lies in span(e_{i+j}, ...) for i >= 2, except that the
    // even-dimension slot (n/2, n) contributes to the e_n component at
    // depth i+j-1 = n; dropping it restores the clean bound.
    std::mt19937_64 rng(77);
    for (int n : {9, 10, 11})
      for (int t = 0; t < 6; ++t) {
        FiliformParams p = random_params(n, rng);
        p.alpha.erase({n / 2, n});
        const LieAlgebra g = build_algebra(p);
        for (int i = 2; i < n; ++i)
          for (int j = i + 1; j <= n; ++j) {
            const Vec b = g.bracket(i, j);
            for (int r = 1; r <= n && r < i + j; ++r) CHECK(is_zero(b[r - 1]));
          }
      }
    // with the slot present the e_n component can sit at depth i+j-1
    FiliformParams q{10, {{{5, 10}, Rational(1)}}};
    CHECK(build_algebra(q).bracket(5, 6) == basis_vec(10, 10));
  }
}

TEST_CASE("jacobi constraints by dimension") {
  std::mt19937_64 rng(5150);
  SUBCASE("below dimension 8 every assignment is valid") {
    for (int n = 3; n <= 7; ++n)
      for (int t = 0; t < 10; ++t)
        CHECK(build_algebra(random_params(n, rng)).jacobi_defects().empty());
  }
  SUBCASE("dimension 8: valid iff a_{4,8}(2a_{2,5} + a_{3,7}) = 0") {
    for (int t = 0; t < 40; ++t) {
      const FiliformParams p = random_params(8, rng);
      const Rational gate =
          alpha_at(p, 4, 8) * (2 * alpha_at(p, 2, 5) + alpha_at(p, 3, 7));
      CHECK(build_algebra(p).jacobi_defects().empty() == is_zero(gate));
    }
  }
  SUBCASE("dimension 9: valid iff a_{4,9}(2a_{2,5} + a_{3,7}) = 3a_{3,7}^2") {
    bool saw_valid = false, saw_invalid = false;
    for (int t = 0; t < 60; ++t) {
      const FiliformParams p = random_params(9, rng);
      const Rational gate =
          alpha_at(p, 4, 9) * (2 * alpha_at(p, 2, 5) + alpha_at(p, 3, 7)) -
          3 * alpha_at(p, 3, 7) * alpha_at(p, 3, 7);
      const bool valid = build_algebra(p).jacobi_defects().empty();
      CHECK(valid == is_zero(gate));
      (valid ? saw_valid : saw_invalid) = true;
    }
    CHECK(saw_valid);
    CHECK(saw_invalid);
  }
}

TEST_CASE("derived scalar quantities") {
  FiliformParams p{11, {}};
  p.alpha[{2, 5}] = 1;
  p.alpha[{3, 7}] = 2;
  const auto q = derived_quantities(p);
  CHECK(q.b == Rational(-144));  // (2 - 20)(4 - 8 + 12)
  CHECK(is_zero(q.a));
  CHECK(is_zero(q.c));
  CHECK(is_zero(q.d));

  FiliformParams r{11, {}};
  r.alpha[{4, 10}] = 2;
  r.alpha[{2, 6}] = 1;
  r.alpha[{3, 8}] = -1;
  // a = 3*2*(1 + -1) - 4*1 = -4; c = 22 - 3*1*(-1)*... recompute:
  // c = 22*1 - 3*(1)(-1) - 9*1 = 22 + 3 - 9 = 16
  const auto qr = derived_quantities(r);
  CHECK(qr.a == Rational(-4));
  CHECK(qr.c == Rational(16));
}

TEST_CASE("classification in dimensions 3 to 11") {
  SUBCASE("small dimensions have a single class") {
    CHECK(classify({3, {}}) == "A_3");
    CHECK(classify({4, {}}) == "A_4");
    CHECK(classify({5, {{{2, 5}, Rational(7)}}}) == "A_5");
  }

  SUBCASE("worked examples") {
    CHECK(classify({8, {}}) == "A_{8,4}");
    CHECK(classify({6, {{{3, 6}, Rational(1)}}}) == "A_{6,1}");
    CHECK(classify({6, {{{2, 5}, Rational(1)}}}) == "A_{6,2}");
    CHECK(classify({7, {{{2, 5}, Rational(1)}}}) == "A_{7,1}");
    CHECK(classify({9,
                    {{{2, 5}, Rational(1)},
                     {{3, 7}, Rational(1)},
                     {{4, 9}, Rational(1)}}}) == "A_{9,2}");
  }

  SUBCASE("dimension 11 needs a completed parameter set") {
    const ParamMap support{{{2, 5}, Rational(1)}, {{3, 7}, Rational(2)}};
    std::vector<IndexPair> unknowns;
    for (const auto& key : index_set(11))
      if (!support.count(key)) unknowns.push_back(key);
    const auto sol = solve_constraints(11, support, unknowns, {});
    REQUIRE(sol.has_value());
    CHECK(classify(*sol) == "A_{11,1}");
  }

  SUBCASE("invalid parameters are rejected") {
    // dim 9 with a_{3,7} = 1 and a_{4,9} = 0 violates the constraint
    CHECK_THROWS_AS(classify({9, {{{3, 7}, Rational(1)}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(classify({12, {}}), std::invalid_argument);
  }

  SUBCASE("condition rows partition the validated parameters") {
    for (int n = 6; n <= 11; ++n)
      for (int t = 0; t < 8; ++t) {
        const auto p = sample_params(n, 900 + 31 * n + t, 40);
        REQUIRE(p.has_value());
        const std::string label = classify(*p);  // throws unless exactly
        CHECK(label.substr(0, 2) == "A_");       // one row matched
      }
  }
}

TEST_CASE("witness search") {
  const std::vector<std::string> labels = {
      "A_3",      "A_4",      "A_5",      "A_{6,1}",  "A_{6,2}",
      "A_{7,1}",  "A_{7,2}",  "A_{8,1}",  "A_{8,2}",  "A_{8,3}",
      "A_{8,4}",  "A_{9,1}",  "A_{9,2}",  "A_{9,3}",  "A_{9,4}",
      "A_{9,5}",  "A_{9,6}",  "A_{10,1}", "A_{10,2}", "A_{10,3}",
      "A_{10,4}", "A_{10,5}", "A_{10,6}", "A_{10,7}", "A_{10,8}",
      "A_{10,9}", "A_{11,1}", "A_{11,3}", "A_{11,4}", "A_{11,5}",
      "A_{11,6}", "A_{11,7}", "A_{11,8}", "A_{11,9}", "A_{11,10}"};
  for (const auto& label : labels) {
    const auto w = find_witness(label, 40, 1);
    REQUIRE_MESSAGE(w.has_value(), label);
    CHECK(classify(*w) == label);
  }
  CHECK(!find_witness("A_{9,7}", 10, 1).has_value());
  CHECK(!find_witness("nonsense", 10, 1).has_value());
}

TEST_CASE("random validated sampling") {
  for (int n = 8; n <= 12; ++n) {
    std::set<std::string> seen;
    for (int t = 0; t < 6; ++t) {
      const auto p = sample_params(n, 100 * n + t, 40);
      REQUIRE(p.has_value());
      REQUIRE(build_algebra(*p).jacobi_defects().empty());
      if (n <= 11) seen.insert(classify(*p));
    }
    if (n <= 11) CHECK(seen.size() >= 1);
  }
}

TEST_CASE("structural properties and the extended families") {
  SUBCASE("graded model of dimension 12") {
    const LieAlgebra l = standard_graded(12);
    REQUIRE(l.jacobi_defects().empty());
    const auto f = property_flags(l);
    CHECK(f.a);
    CHECK(!f.b);
    CHECK(f.c);
    CHECK(f.d);
    CHECK(extended_class(l) == "unclassified");
  }

  SUBCASE("a_{2,5} != 0 forces property (b)") {
    const auto p = sample_extended(12, 1, 5, 60);
    REQUIRE(p.has_value());
    const LieAlgebra g = build_algebra(*p);
    const auto f = property_flags(g);
    CHECK(f.b);
    CHECK(f.c);
    CHECK(f.d);
    CHECK(extended_class(g) == "A1_12");
  }

  SUBCASE("family 2 fails property (d)") {
    const auto p = sample_extended(12, 2, 6, 60);
    REQUIRE(p.has_value());
    const LieAlgebra g = build_algebra(*p);
    const auto f = property_flags(g);
    CHECK(f.b);
    CHECK(f.c);
    CHECK(!f.d);
    CHECK(extended_class(g) == "A2_12");
  }

  SUBCASE("witnesses for the extended labels") {
    for (const std::string label : {"A1_12", "A2_12", "A1_13", "A2_13"}) {
      const auto w = find_witness(label, 40, 2);
      REQUIRE_MESSAGE(w.has_value(), label);
      CHECK(extended_class(build_algebra(*w)) == label);
    }
  }

  SUBCASE("contracts") {
    CHECK_THROWS_AS(extended_class(standard_graded(11)),
                    std::invalid_argument);
    CHECK_THROWS_AS(property_flags(standard_graded(6)), std::invalid_argument);
    const LieAlgebra ab(7, {});
    CHECK_THROWS_AS(property_flags(ab), std::invalid_argument);
  }
}

TEST_CASE("adapted coordinates from an arbitrary basis") {
  SUBCASE("already adapted input returns the identity transition") {
    const auto w = find_witness("A_{9,3}", 40, 1);
    REQUIRE(w.has_value());
    const LieAlgebra g = build_algebra(*w);
    const auto ad = to_adapted(g);
    REQUIRE(ad.has_value());
    CHECK(ad->transition == Matrix::identity(9));
    CHECK(ad->params.alpha == w->alpha);
  }

  SUBCASE("scrambled graded model comes back with zero parameters") {
    std::mt19937_64 rng(31337);
    for (int n : {7, 10}) {
      const LieAlgebra l = standard_graded(n);
      REQUIRE(l.jacobi_defects().empty());
      const LieAlgebra h = l.change_basis(random_invertible(n, rng));
      const auto ad = to_adapted(h);
      REQUIRE(ad.has_value());
      CHECK(ad->params.alpha.empty());
      CHECK(h.change_basis(ad->transition) == build_algebra(ad->params));
    }
  }

  SUBCASE("class label is invariant under a change of basis") {
    std::mt19937_64 rng(4242);
    for (const std::string label : {"A_{8,3}", "A_{9,1}", "A_{10,5}"}) {
      const auto w = find_witness(label, 40, 1);
      REQUIRE(w.has_value());
      const LieAlgebra g = build_algebra(*w);
      const LieAlgebra h = g.change_basis(random_invertible(g.dim(), rng));
      const auto ad = to_adapted(h);
      REQUIRE_MESSAGE(ad.has_value(), label);
      CHECK(classify(ad->params) == label);
      CHECK(h.change_basis(ad->transition) == build_algebra(ad->params));
    }
  }

  SUBCASE("non-filiform input is rejected") {
    CHECK_THROWS_AS(to_adapted(LieAlgebra(5, {})), std::invalid_argument);
  }
}

TEST_CASE("parameter printing") {
  CHECK(to_string(FiliformParams{9, {}}) == "0");
  FiliformParams p{9, {}};
  p.alpha[{2, 5}] = 1;
  p.alpha[{3, 7}] = Rational(-1, 2);
  CHECK(to_string(p) == "a[2,5]=1 a[3,7]=-1/2");
}
