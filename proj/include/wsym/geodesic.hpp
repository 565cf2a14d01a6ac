#pragma once

#include <wsym/forms.hpp>
#include <wsym/homogeneous.hpp>
#include <wsym/report.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace wsym {

/// Outcome of evaluating <[X,Z]_m, X_m> = k <X_m, Z> over the m frame.
struct LemmaResidual {
  Rational k;
  Vector residual;  // L - k R, in the order of the m frame
  bool consistent = true;
};

/*
 * A geodesic vector X = X_m + A with its constant k. The orbit exp(tX)p is a
 * geodesic, affinely parametrized by t when k = 0 and by exp(-kt) otherwise.
 */
struct GeodesicCertificate {
  Vector X;  // in g
  Vector A;  // in g, lies in h
  Rational k;
  bool null_flag = false;  // <X_m, X_m> == 0
};

namespace detail {

/// L_j = <[X, m_j]_m, X_m> from the cached bracket tables; x, xh are m and h coordinates.
inline Vector lemma_lhs(const ReductiveSpace& s, const Vector& x, const Vector& xh, const Vector& gx) {
  const std::size_t d = s.dim_m();
  Vector l = zero_vector(d);
  for (std::size_t j = 0; j < d; ++j) {
    Rational acc = 0;
    for (std::size_t u = 0; u < d; ++u)
      if (x[u] != 0) acc += x[u] * dot(s.m_bracket(u, j), gx);
    for (std::size_t a = 0; a < xh.size(); ++a)
      if (xh[a] != 0) acc += xh[a] * dot(s.isotropy_generator(a).column(j), gx);
    l[j] = acc;
  }
  return l;
}

}  // namespace detail

inline LemmaResidual geodesic_lemma_residual(const ReductiveSpace& s, const Vector& x) {
  if (x.size() != s.algebra().dim()) throw std::invalid_argument("geodesic_lemma_residual: vector has wrong length");
  const Vector xm = s.m_coords(x);
  const Vector gx = s.metric().gram() * xm;  // R_j = <X_m, m_j>
  const Vector l = detail::lemma_lhs(s, xm, s.h_coords(x), gx);

  LemmaResidual out;
  out.k = 0;
  std::size_t first = gx.size();
  for (std::size_t j = 0; j < gx.size(); ++j)
    if (gx[j] != 0) {
      first = j;
      break;
    }
  if (first < gx.size()) out.k = l[first] / gx[first];
  out.residual = l - out.k * gx;
  out.consistent = is_zero(out.residual);
  return out;
}

/// Re-checks a certificate from raw brackets and projections, without the solver's tables.
inline bool certificate_holds(const ReductiveSpace& s, const GeodesicCertificate& c) {
  const auto& g = s.algebra();
  if (c.X.size() != g.dim() || c.A.size() != g.dim()) return false;
  if (!s.h().contains(c.A)) return false;
  const Projection px = project(s, c.X);
  const Vector xm = s.m_coords(px.m);
  if (c.null_flag != (s.inner(xm, xm) == 0)) return false;
  if (c.k != 0 && !c.null_flag) return false;
  for (const auto& z : s.m_frame()) {
    const Vector zm = s.m_coords(z);
    const Vector lhs = s.m_coords(project(s, bracket(g, c.X, z)).m);
    if (s.inner(lhs, xm) != c.k * s.inner(xm, zm)) return false;
  }
  return true;
}

/*
 * Solves for (A in h, k) with <[Xm + A, Z]_m, Xm> = k <Xm, Z> for every Z in
 * the m frame. The system is linear in (A, k) jointly; free variables of the
 * exact solve are set to zero.
 */
inline std::optional<GeodesicCertificate> solve_geodesic_vector(const ReductiveSpace& s, const Vector& xm_g) {
  if (xm_g.size() != s.algebra().dim()) throw std::invalid_argument("solve_geodesic_vector: vector has wrong length");
  if (!s.m().contains(xm_g)) throw std::invalid_argument("solve_geodesic_vector: X is not in m");
  const std::size_t d = s.dim_m(), nh = s.dim_h();
  const Vector x = s.m_coords(xm_g);
  const Vector gx = s.metric().gram() * x;
  const Vector base = detail::lemma_lhs(s, x, zero_vector(nh), gx);

  Matrix system(d, nh + 1);
  Vector rhs(d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t a = 0; a < nh; ++a) system(j, a) = dot(s.isotropy_generator(a).column(j), gx);
    system(j, nh) = -gx[j];
    rhs[j] = -base[j];
  }
  auto sol = solve(system, rhs);
  if (!sol) return std::nullopt;

  GeodesicCertificate c;
  c.A = s.from_h_coords(Vector(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(nh)));
  c.X = xm_g + c.A;
  c.k = (*sol)[nh];
  c.null_flag = s.inner(x, x) == 0;
  if (c.k != 0 && !c.null_flag)
    throw std::logic_error("geodesic vector with k != 0 on a non-null curve; contradicts the Geodesic Lemma");
  return c;
}

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::size_t count = 100;
};

struct GOReport {
  std::string space_id;
  std::uint64_t seed = 0;
  std::size_t samples_tested = 0;
  std::vector<Vector> failures;  // m coordinates of vectors without a certificate
  std::vector<GeodesicCertificate> certificates;

  bool passed() const { return failures.empty(); }

  Report to_report() const {
    Report r;
    r.check = "go";
    r.verdict = passed() ? Verdict::pass : Verdict::fail;
    r.seed = seed;
    r.samples = samples_tested;
    std::size_t k_nonzero = 0, nulls = 0;
    for (const auto& c : certificates) {
      if (c.k != 0) ++k_nonzero;
      if (c.null_flag) ++nulls;
    }
    json fails = json::array();
    for (const auto& f : failures) fails.push_back(detail::vector_json(f));
    r.witness = {{"space", space_id},
                 {"failures", fails},
                 {"certificates", {{"count", certificates.size()}, {"k_nonzero", k_nonzero}, {"null", nulls}}},
                 {"note", passed() ? "no counterexample found among sampled vectors" : "vectors without a geodesic certificate found"}};
    return r;
  }
};

/// Vectors in m coordinates: the frame, pairwise frame sums, then `count` seeded samples with entries in {-3, -5/2, ..., 3}.
inline std::vector<Vector> survey_samples(std::size_t dim_m, const SamplerConfig& cfg) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim_m; ++i) out.push_back(unit_vector(dim_m, i));
  for (std::size_t i = 0; i < dim_m; ++i)
    for (std::size_t j = i + 1; j < dim_m; ++j) out.push_back(unit_vector(dim_m, i) + unit_vector(dim_m, j));
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t s = 0; s < cfg.count; ++s) {
    Vector v(dim_m);
    for (auto& x : v) x = make_rational(static_cast<long>(rng() % 13) - 6, 2);
    out.push_back(std::move(v));
  }
  return out;
}

inline GOReport go_survey(const ReductiveSpace& s, const SamplerConfig& cfg, std::string space_id = "space") {
  GOReport rep;
  rep.space_id = std::move(space_id);
  rep.seed = cfg.seed;
  for (const auto& c : survey_samples(s.dim_m(), cfg)) {
    ++rep.samples_tested;
    auto cert = solve_geodesic_vector(s, s.from_m_coords(c));
    if (cert) rep.certificates.push_back(std::move(*cert));
    else rep.failures.push_back(c);
  }
  return rep;
}

struct SkewCheck {
  Vector zeta;
  bool skew = false;
};

struct TwoStepReport {
  bool n_in_m = false;
  bool definite = false;
  std::optional<Signature> restricted_signature;  // metric on [n,n], when [n,n] lies in m
  bool conclusion_two_step = false;
  std::size_t step = 0;
  std::size_t dim_n = 0, dim_nn = 0;
  std::vector<SkewCheck> skew_checks;

  bool hypotheses_hold() const { return n_in_m && definite; }

  Report to_report() const {
    Report r;
    r.check = "two-step";
    r.verdict = (hypotheses_hold() && !conclusion_two_step) ? Verdict::fail : Verdict::pass;
    json skews = json::array();
    bool all_skew = true;
    for (const auto& c : skew_checks) {
      skews.push_back({{"zeta", detail::vector_json(c.zeta)}, {"skew", c.skew}});
      all_skew = all_skew && c.skew;
    }
    r.witness = {{"hypothesis_n_in_m", n_in_m},
                 {"hypothesis_definite", definite},
                 {"conclusion_two_step", conclusion_two_step},
                 {"nilpotency_step", step},
                 {"dim_n", dim_n},
                 {"dim_nn", dim_nn},
                 {"restricted_signature", restricted_signature ? to_json(*restricted_signature) : json(nullptr)},
                 {"skew_checks", skews},
                 {"all_skew", all_skew}};
    return r;
  }
};

/*
 * Hypotheses n in m and a definite metric on [n,n]; conclusion [n,[n,n]] = 0.
 * Also runs the skewness of ad(zeta)|[n,n] for zeta in the orthocomplement
 * of [n,n] inside m, intersected with n.
 */
inline TwoStepReport two_step_criterion(const ReductiveSpace& s, const Subspace& n) {
  const auto& g = s.algebra();
  if (n.ambient_dim() != g.dim()) throw std::invalid_argument("two_step_criterion: subspace ambient dimension mismatch");
  if (!n.contains(product_subspace(g, Subspace::full(g.dim()), n)))
    throw std::invalid_argument("two_step_criterion: n is not an ideal of g");
  auto step = nilpotency_step(g, n);
  if (!step) throw std::invalid_argument("two_step_criterion: n is not nilpotent");

  TwoStepReport rep;
  rep.step = *step;
  rep.dim_n = n.dim();
  const Subspace nn = product_subspace(g, n, n);
  rep.dim_nn = nn.dim();
  rep.conclusion_two_step = product_subspace(g, n, nn).is_zero();
  rep.n_in_m = s.m().contains(n);

  if (s.m().contains(nn)) {
    std::vector<Vector> cols;
    for (const auto& b : nn.basis()) cols.push_back(s.m_coords(b));
    BilinearForm restricted = nn.is_zero() ? BilinearForm::zero(0) : s.metric().congruent(Matrix::from_columns(cols, s.dim_m()));
    rep.restricted_signature = signature(restricted);
    rep.definite = nn.is_zero() || rep.restricted_signature->definite();

    if (rep.n_in_m) {
      const Subspace nn_m = Subspace::span(s.dim_m(), cols);
      std::vector<Vector> a_g;
      const Subspace perp = orthocomplement(s.metric(), nn_m);
      for (const auto& v : perp.basis()) a_g.push_back(s.from_m_coords(v));
      const Subspace zetas = Subspace::span(g.dim(), a_g).intersect(n);
      for (const auto& zeta : zetas.basis()) {
        Matrix op(nn.dim(), nn.dim());
        for (std::size_t j = 0; j < nn.dim(); ++j) {
          auto c = nn.coordinates(bracket(g, zeta, nn.basis()[j]));
          if (!c) throw std::logic_error("two_step_criterion: [n,n] is not ad(n)-stable");
          for (std::size_t i = 0; i < nn.dim(); ++i) op(i, j) = (*c)[i];
        }
        rep.skew_checks.push_back({zeta, nn.is_zero() || skew_defect(op, restricted).passed()});
      }
    }
  }

  if (rep.hypotheses_hold() && !rep.conclusion_two_step)
    throw std::logic_error("two_step_criterion: hypotheses hold but [n,[n,n]] != 0");
  return rep;
}

/// Affine parameter s = exp(-k t) of a null homogeneous geodesic.
inline double reparametrize_null(const Rational& k, double t) {
  if (k == 0) throw std::invalid_argument("reparametrize_null: k = 0, t is already affine");
  return std::exp(-k.get_d() * t);
}

}  // namespace wsym
