#include <wsym/catalog.hpp>
#include <wsym/lie_algebra.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace wsym;

namespace {

// direct sum of two algebras with no cross brackets
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<std::string> names = a.names();
  names.insert(names.end(), b.names().begin(), b.names().end());
  std::vector<BracketSpec> br = a.upper_brackets();
  for (const auto& s : b.upper_brackets()) {
    BracketSpec t{s.i + a.dim(), s.j + a.dim(), {}};
    for (const auto& term : s.terms) t.terms.push_back({term.k + a.dim(), term.coeff});
    br.push_back(t);
  }
  return LieAlgebra::from_brackets(names, br);
}

Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = make_rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 2));
  return v;
}

}  // namespace

TEST(Bracket, KathOlbrichExamples) {
  LieAlgebra g = kath_olbrich_algebra(2);
  EXPECT_EQ(bracket(g, g.basis_vector("e1"), g.basis_vector("f1")), g.basis_vector("z1"));
  EXPECT_TRUE(is_zero(bracket(g, g.basis_vector("e1"), g.basis_vector("e2"))));
}

TEST(Bracket, SelfBracketVanishes) {
  std::mt19937_64 rng(3);
  for (const LieAlgebra& g : {kath_olbrich_algebra(3), sl3_algebra(), heisenberg_algebra(1, 1)})
    for (int t = 0; t < 10; ++t) {
      Vector x = random_vector(rng, g.dim());
      EXPECT_TRUE(is_zero(bracket(g, x, x)));
    }
}

TEST(Bracket, AgreesWithRawKathOlbrichFormulas) {
  for (std::size_t m = 1; m <= 4; ++m) {
    LieAlgebra g = kath_olbrich_algebra(m);
    auto raw = oracle::kath_olbrich_raw(m);
    for (std::size_t a = 0; a < g.dim(); ++a)
      for (std::size_t b = 0; b < g.dim(); ++b) {
        Vector expect = zero_vector(g.dim());
        for (const auto& [k, c] : raw(a, b)) expect[k] += c;
        EXPECT_EQ(bracket(g, g.basis_vector(a), g.basis_vector(b)), expect) << a << "," << b;
      }
  }
}

TEST(Validate, KathOlbrichPassesAndOracleAgrees) {
  for (std::size_t m = 1; m <= 5; ++m) {
    EXPECT_TRUE(oracle::jacobi_holds(oracle::kath_olbrich_raw(m), 3 * m + 2));
    EXPECT_TRUE(validate(kath_olbrich_algebra(m)).passed()) << m;
  }
}

TEST(Validate, HeisenbergPasses) {
  for (std::size_t p = 0; p <= 2; ++p)
    for (std::size_t q = 0; p + q <= 2; ++q)
      if (p + q >= 1) {
        EXPECT_TRUE(validate(heisenberg_algebra(p, q)).passed());
      }
}

TEST(Validate, AntisymmetryViolation) {
  // c^1_{12} = 1 and c^1_{21} = 1
  LieAlgebra bad = LieAlgebra::from_table({"a", "b"}, {{}, {{0, 1}}, {{0, 1}}, {}});
  Report r = validate(bad);
  EXPECT_EQ(r.verdict, Verdict::fail);
  EXPECT_EQ(r.witness["identity"], "antisymmetry");
  EXPECT_EQ(r.witness["indices"], json::array({1, 2}));
}

TEST(Validate, JacobiViolation) {
  // [a,b] = c, [b,c] = a, [c,a] = c is antisymmetric but not a Lie algebra
  LieAlgebra bad = LieAlgebra::from_brackets({"a", "b", "c"}, {{0, 1, {{2, 1}}}, {1, 2, {{0, 1}}}, {0, 2, {{2, -1}}}});
  Report r = validate(bad);
  EXPECT_EQ(r.verdict, Verdict::fail);
  EXPECT_EQ(r.witness["identity"], "jacobi");
}

TEST(FromBrackets, RejectsBadInput) {
  EXPECT_THROW(LieAlgebra::from_brackets({"a", "b"}, {{0, 0, {}}}), std::invalid_argument);
  EXPECT_THROW(LieAlgebra::from_brackets({"a", "b"}, {{0, 2, {}}}), std::invalid_argument);
  EXPECT_THROW(LieAlgebra::from_brackets({"a", "b"}, {{0, 1, {{0, 1}}}, {1, 0, {{0, 1}}}}), std::invalid_argument);
}

TEST(ProductSubspace, Examples) {
  LieAlgebra h = heisenberg_algebra(1, 0);
  Subspace full = Subspace::full(3);
  Subspace gg = product_subspace(h, full, full);
  EXPECT_EQ(gg, Subspace::span(3, {h.basis_vector("z")}));
  LieAlgebra ab = LieAlgebra::abelian(4);
  EXPECT_TRUE(product_subspace(ab, Subspace::full(4), Subspace::full(4)).is_zero());
  EXPECT_EQ(product_subspace(kath_olbrich_algebra(2), Subspace::full(8), Subspace::full(8)).dim(), 6u);
}

TEST(LowerCentralSeries, Examples) {
  auto dims = [](const LieAlgebra& g) {
    std::vector<std::size_t> d;
    for (const auto& s : lower_central_series(g)) d.push_back(s.dim());
    return d;
  };
  EXPECT_EQ(dims(kath_olbrich_algebra(2)), (std::vector<std::size_t>{8, 6, 5, 3, 2, 0}));
  EXPECT_EQ(dims(heisenberg_algebra(1, 0)), (std::vector<std::size_t>{3, 1, 0}));
  EXPECT_EQ(dims(LieAlgebra::abelian(5)), (std::vector<std::size_t>{5, 0}));
}

TEST(LowerCentralSeries, KathOlbrichMatchesRawOracleAndSpanFormula) {
  for (std::size_t m = 1; m <= 5; ++m) {
    LieAlgebra g = kath_olbrich_algebra(m);
    std::vector<std::size_t> dims;
    for (const auto& s : lower_central_series(g)) dims.push_back(s.dim());
    EXPECT_EQ(dims, oracle::lcs_dims_raw(oracle::kath_olbrich_raw(m), g.dim()));
    ASSERT_EQ(dims.size(), 2 * m + 2);
    for (std::size_t r = 1; r <= m; ++r) {
      EXPECT_EQ(dims[2 * r - 1], 3 * (m - r + 1));
      EXPECT_EQ(dims[2 * r], 3 * (m - r) + 2);
    }
  }
}

TEST(LowerCentralSeries, Descending) {
  for (const LieAlgebra& g : {kath_olbrich_algebra(4), sl3_algebra(), heisenberg_space(1, 1, 1, 1).space.algebra()}) {
    const Subspace full = Subspace::full(g.dim());
    for (const auto& s : lower_central_series(g)) EXPECT_TRUE(s.contains(product_subspace(g, full, s)));
  }
}

TEST(NilpotencyStep, Examples) {
  for (std::size_t m = 1; m <= 5; ++m) EXPECT_EQ(nilpotency_step(kath_olbrich_algebra(m)), 2 * m + 1);
  for (std::size_t p = 0; p <= 2; ++p)
    for (std::size_t q = 0; p + q <= 2; ++q)
      if (p + q >= 1) {
        EXPECT_EQ(nilpotency_step(heisenberg_algebra(p, q)), 2u);
      }
  EXPECT_FALSE(nilpotency_step(sl3_algebra()).has_value());
}

TEST(KillingForm, Examples) {
  EXPECT_EQ(killing_form(LieAlgebra::abelian(3)), BilinearForm::zero(3));
  EXPECT_EQ(killing_form(kath_olbrich_algebra(1)), BilinearForm::zero(5));
}

TEST(KillingForm, Sl3MatchesTraceFormula) {
  // B(X, Y) = 6 tr(XY) on sl(3)
  std::vector<Matrix> mats;
  const std::pair<int, int> off[] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
  for (auto [r, c] : off) {
    Matrix e(3, 3);
    e(r, c) = 1;
    mats.push_back(e);
  }
  mats.push_back(Matrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}});
  mats.push_back(Matrix{{0, 0, 0}, {0, 1, 0}, {0, 0, -1}});
  BilinearForm b = killing_form(sl3_algebra());
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) EXPECT_EQ(b.gram()(i, j), 6 * (mats[i] * mats[j]).trace());
}

TEST(KillingForm, SymmetricEntrywise) {
  for (const LieAlgebra& g : {sl3_algebra(), heisenberg_space(1, 1, 1, 1).space.algebra(), sphere_un_space(3, 1, 1).space.algebra()})
    EXPECT_TRUE(killing_form(g).gram().is_symmetric());
}

TEST(SemidirectSum, HeisenbergByU1) {
  auto [names, mats] = unitary_basis(1, 0);
  LieAlgebra acting = matrix_algebra(names, mats);
  Matrix d(3, 3);
  d(2, 1) = 1;
  d(1, 2) = -1;
  LieAlgebra g = semidirect_sum(heisenberg_algebra(1, 0), acting, {d});
  EXPECT_EQ(g.dim(), 4u);
  EXPECT_TRUE(validate(g).passed());
}

TEST(SemidirectSum, HeisenbergByU11) {
  LieAlgebra g = heisenberg_space(1, 1, 1, 1).space.algebra();
  EXPECT_EQ(g.dim(), 9u);
  EXPECT_TRUE(validate(g).passed());
}

TEST(SemidirectSum, ZeroActionIsDirectSum) {
  LieAlgebra ideal = LieAlgebra::from_brackets({"u", "v"}, {});
  LieAlgebra acting = heisenberg_algebra(1, 0);
  LieAlgebra s = semidirect_sum(ideal, acting, {Matrix(2, 2), Matrix(2, 2), Matrix(2, 2)});
  LieAlgebra d = direct_sum(ideal, acting);
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) EXPECT_EQ(bracket(s, s.basis_vector(i), s.basis_vector(j)), bracket(d, d.basis_vector(i), d.basis_vector(j)));
}

TEST(SemidirectSum, RejectsNonDerivation) {
  // scaling by 1 on x1 only does not preserve [x1, y1] = -2 z
  Matrix bad(3, 3);
  bad(1, 1) = 1;
  EXPECT_THROW(semidirect_sum(heisenberg_algebra(1, 0), LieAlgebra::abelian(1), {bad}), std::invalid_argument);
  EXPECT_THROW(semidirect_sum(heisenberg_algebra(1, 0), LieAlgebra::abelian(1), {}), std::invalid_argument);
}

TEST(SemidirectSum, RejectsNonHomomorphism) {
  // [a, b] = b has to map to [D(a), D(b)]
  LieAlgebra acting = LieAlgebra::from_brackets({"a", "b"}, {{0, 1, {{1, 1}}}});
  Matrix da{{1, 0}, {0, 0}}, db{{0, 1}, {0, 0}};
  EXPECT_NO_THROW(semidirect_sum(LieAlgebra::abelian(2), acting, {da, db}));
  EXPECT_THROW(semidirect_sum(LieAlgebra::abelian(2), acting, {da, Matrix{{0, 0}, {1, 0}}}), std::invalid_argument);
}

TEST(MatrixAlgebra, RejectsDependentOrOpen) {
  Matrix a{{0, 1}, {0, 0}}, b{{0, 0}, {1, 0}};
  EXPECT_THROW(matrix_algebra({"a", "b"}, {a, b}), std::invalid_argument);
  EXPECT_THROW(matrix_algebra({"a", "a2"}, {a, Rational(2) * a}), std::invalid_argument);
}
