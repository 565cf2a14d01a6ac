#include <wsym/catalog.hpp>
#include <wsym/homogeneous.hpp>

#include <gtest/gtest.h>

#include <functional>
#include <random>

using namespace wsym;

namespace {

SpaceErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const SpaceError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no SpaceError thrown";
  return SpaceErrorKind::not_complementary;
}

Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = make_rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
  return v;
}

std::vector<CatalogEntry> sample_spaces() {
  std::vector<CatalogEntry> out;
  out.push_back(heisenberg_space(1, 0, 1, 1));
  out.push_back(heisenberg_space(1, 1, 2, -1));
  out.push_back(sphere_un_space(2, 1, 2));
  out.push_back(sphere_un_space(3, -1, 1));
  out.push_back(sp1_spn_space(2, 1, -2));
  out.push_back(kath_olbrich(2));
  out.push_back(sl3_killing_space());
  return out;
}

}  // namespace

TEST(ReductiveSpace, ValidExamples) {
  EXPECT_NO_THROW(kath_olbrich(3));
  EXPECT_NO_THROW(sphere_un_space(2, 1, 2));
  for (std::size_t n = 2; n <= 4; ++n) EXPECT_NO_THROW(sphere_un_space(n, 1, 1));
}

TEST(ReductiveSpace, DegenerateMetric) {
  EXPECT_EQ(kind_of([] { sphere_un_space(2, 1, 0); }), SpaceErrorKind::degenerate_metric);
  LieAlgebra g = kath_olbrich_algebra(1);
  Matrix gram = kath_olbrich_metric(1).gram();
  gram(0, 0) = 0;
  EXPECT_EQ(kind_of([&] { make_reductive_space(g, {}, {unit_vector(5, 0), unit_vector(5, 1), unit_vector(5, 2), unit_vector(5, 3), unit_vector(5, 4)}, BilinearForm(gram)); }),
            SpaceErrorKind::degenerate_metric);
}

TEST(ReductiveSpace, NotComplementary) {
  LieAlgebra g = LieAlgebra::abelian(2);
  EXPECT_EQ(kind_of([&] { make_reductive_space(g, {{1, 0}}, {{2, 0}}, BilinearForm::identity(1)); }), SpaceErrorKind::not_complementary);
  EXPECT_EQ(kind_of([&] { make_reductive_space(g, {}, {{1, 0}}, BilinearForm::identity(1)); }), SpaceErrorKind::not_complementary);
}

TEST(ReductiveSpace, ComplementNotInvariant) {
  // h = span{x1}, m = span{y1, z + x1}: [x1, y1] = -2z leaves m
  LieAlgebra g = heisenberg_algebra(1, 0);
  EXPECT_EQ(kind_of([&] { make_reductive_space(g, {{0, 1, 0}}, {{0, 0, 1}, {1, 1, 0}}, BilinearForm::identity(2)); }),
            SpaceErrorKind::not_ad_invariant_complement);
}

TEST(ReductiveSpace, MetricNotIsotropyInvariant) {
  // corrupt one gram entry of the sphere metric
  CatalogEntry e = sphere_un_space(2, 1, 1);
  Matrix gram = e.space.metric().gram();
  gram(1, 1) = 2;
  EXPECT_EQ(kind_of([&] { make_reductive_space(e.space.algebra(), e.space.h_frame(), e.space.m_frame(), BilinearForm(gram)); }),
            SpaceErrorKind::metric_not_isotropy_invariant);
}

TEST(ReductiveSpace, HNotSubalgebra) {
  LieAlgebra g = heisenberg_algebra(1, 0);
  EXPECT_EQ(kind_of([&] { make_reductive_space(g, {{0, 1, 0}, {0, 0, 1}}, {{1, 0, 0}}, BilinearForm::identity(1)); }),
            SpaceErrorKind::h_not_subalgebra);
}

TEST(ReductiveSpace, ShapeErrors) {
  LieAlgebra g = LieAlgebra::abelian(2);
  EXPECT_THROW(make_reductive_space(g, {}, {{1, 0}, {0, 1}}, BilinearForm::identity(3)), std::invalid_argument);
  EXPECT_THROW(make_reductive_space(g, {}, {{1, 0, 0}, {0, 1}}, BilinearForm::identity(2)), std::invalid_argument);
}

TEST(ReductiveSpace, CatalogInvariantsHold) {
  for (const auto& e : sample_spaces()) {
    const auto& s = e.space;
    EXPECT_EQ(s.dim_m() + s.dim_h(), s.algebra().dim());
    EXPECT_TRUE(s.m().intersect(s.h()).is_zero());
    for (const auto& a : s.h_frame())
      for (const auto& x : s.m_frame()) EXPECT_TRUE(s.m().contains(bracket(s.algebra(), a, x)));
    EXPECT_TRUE(signature(s.metric()).nondegenerate());
    for (const auto& a : s.h_frame()) EXPECT_TRUE(skew_defect(isotropy_operator(s, a), s.metric()).passed()) << e.id;
  }
}

TEST(Project, Examples) {
  CatalogEntry e = heisenberg_space(1, 0, 1, 1);
  const auto& s = e.space;
  const Vector xm = s.m_frame()[1], xh = s.h_frame()[0];
  Projection p = project(s, xm);
  EXPECT_EQ(p.m, xm);
  EXPECT_TRUE(is_zero(p.h));
  p = project(s, xh);
  EXPECT_TRUE(is_zero(p.m));
  EXPECT_EQ(p.h, xh);
  p = project(s, xm + xh);
  EXPECT_EQ(p.m, xm);
  EXPECT_EQ(p.h, xh);
}

TEST(Project, LinearAndIdempotent) {
  std::mt19937_64 rng(41);
  for (const auto& e : sample_spaces()) {
    const auto& s = e.space;
    const std::size_t n = s.algebra().dim();
    for (int t = 0; t < 5; ++t) {
      Vector x = random_vector(rng, n), y = random_vector(rng, n);
      Rational c = make_rational(static_cast<long>(rng() % 7) - 3, 2);
      Projection px = project(s, x), py = project(s, y), pxy = project(s, c * x + y);
      EXPECT_EQ(pxy.m, c * px.m + py.m);
      EXPECT_EQ(pxy.h, c * px.h + py.h);
      EXPECT_EQ(project(s, px.m).m, px.m);
      EXPECT_TRUE(is_zero(project(s, px.m).h));
      EXPECT_EQ(project(s, px.h).h, px.h);
      EXPECT_TRUE(s.m().contains(px.m));
      EXPECT_TRUE(s.h().contains(px.h));
    }
  }
}

TEST(IsotropyOperator, Examples) {
  CatalogEntry e = sphere_un_space(3, 1, 1);
  const auto& s = e.space;
  EXPECT_EQ(isotropy_operator(s, zero_vector(s.algebra().dim())), Matrix(s.dim_m(), s.dim_m()));
  EXPECT_THROW(isotropy_operator(s, s.m_frame()[0]), std::invalid_argument);
  // u(1) = span{i E_22} in u(2) fixes Im C and rotates C
  CatalogEntry two = sphere_un_space(2, 1, 1);
  ASSERT_EQ(two.space.dim_h(), 1u);
  Matrix op = isotropy_operator(two.space, two.space.h_frame()[0]);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(op(0, j), 0);
  EXPECT_EQ(op(1, 1), 0);
  EXPECT_EQ(op(2, 2), 0);
  EXPECT_NE(op(1, 2), 0);
  EXPECT_EQ(op(1, 2), -op(2, 1));
}

TEST(IsotropyOperator, LinearAndHomomorphism) {
  for (const auto& e : sample_spaces()) {
    const auto& s = e.space;
    const auto& hf = s.h_frame();
    for (std::size_t a = 0; a < hf.size(); ++a)
      for (std::size_t b = 0; b < hf.size(); ++b) {
        EXPECT_EQ(isotropy_operator(s, hf[a] + Rational(3) * hf[b]),
                  isotropy_operator(s, hf[a]) + Rational(3) * isotropy_operator(s, hf[b]));
        EXPECT_EQ(isotropy_operator(s, bracket(s.algebra(), hf[a], hf[b])),
                  commutator(isotropy_operator(s, hf[a]), isotropy_operator(s, hf[b])))
            << e.id << " " << a << "," << b;
      }
  }
}
