#pragma once

#include <wsym/catalog.hpp>
#include <wsym/geodesic.hpp>
#include <wsym/homogeneous.hpp>
#include <wsym/quaternion.hpp>
#include <wsym/report.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace wsym {

/// Linear map on m (in the m frame) meant to reverse one tangent vector isometrically.
struct ReversalWitness {
  Matrix W;
  std::string description;
};

enum class WitnessExample { heisenberg, sphere_un, sp1_spn };

inline WitnessExample parse_witness_example(const std::string& raw) {
  const std::string id = normalize_catalog_id(raw);
  if (id == "heisenberg") return WitnessExample::heisenberg;
  if (id == "sphere-un") return WitnessExample::sphere_un;
  if (id == "sp1-spn") return WitnessExample::sp1_spn;
  throw std::invalid_argument("no weak-symmetry witness recipe for '" + raw + "'");
}

/// Splitting of m = (Im-factor) (+) (vector factor) for a witness example.
struct TangentLayout {
  std::size_t im_dim = 0;
  std::size_t vec_dim = 0;
  Vector vec_signs;  // signature of the vector-factor form <,>_2 on the frame

  std::size_t dim() const { return im_dim + vec_dim; }

  /// Gram of a <,>_1 (+) b <,>_2 in the m frame.
  BilinearForm metric(const Rational& a, const Rational& b) const {
    Vector d;
    for (std::size_t i = 0; i < im_dim; ++i) d.push_back(a);
    for (std::size_t i = 0; i < vec_dim; ++i) d.push_back(b * vec_signs[i]);
    return BilinearForm::diagonal(d);
  }
};

inline TangentLayout tangent_layout(WitnessExample ex, const Params& p) {
  TangentLayout t;
  switch (ex) {
    case WitnessExample::heisenberg: {
      const std::size_t pp = detail::natural_param(p, "p", 1), qq = detail::natural_param(p, "q", 0);
      if (pp + qq < 1) throw std::invalid_argument("heisenberg: need p + q >= 1");
      t.im_dim = 1;
      t.vec_dim = 2 * (pp + qq);
      for (std::size_t l = 0; l < pp + qq; ++l) {
        t.vec_signs.push_back(l < pp ? 1 : -1);
        t.vec_signs.push_back(l < pp ? 1 : -1);
      }
      break;
    }
    case WitnessExample::sphere_un: {
      const std::size_t n = detail::natural_param(p, "n", 2);
      if (n < 2) throw std::invalid_argument("sphere-un: need n >= 2");
      t.im_dim = 1;
      t.vec_dim = 2 * (n - 1);
      t.vec_signs.assign(t.vec_dim, Rational(1));
      break;
    }
    case WitnessExample::sp1_spn: {
      const std::size_t n = detail::natural_param(p, "n", 2);
      if (n < 2) throw std::invalid_argument("sp1-spn: need n >= 2");
      t.im_dim = 3;
      t.vec_dim = 4 * (n - 1);
      t.vec_signs.assign(t.vec_dim, Rational(1));
      break;
    }
  }
  return t;
}

/// Checks W xi = -xi and W^T G W = G for the space's metric; xi in m coordinates.
inline Report verify_witness(const ReductiveSpace& s, const ReversalWitness& w, const Vector& xi) {
  if (xi.size() != s.dim_m()) throw std::invalid_argument("verify_witness: xi must be given in m coordinates");
  if (w.W.rows() != s.dim_m() || w.W.cols() != s.dim_m()) throw std::invalid_argument("verify_witness: witness has wrong shape");
  const bool isometry = s.metric().congruent(w.W) == s.metric();
  const bool reversal = w.W * xi == -xi;
  Report r;
  r.check = "weak-symmetry-witness";
  r.verdict = isometry && reversal ? Verdict::pass : Verdict::fail;
  r.witness = {{"isometry", isometry}, {"reversal", reversal}, {"description", w.description}};
  return r;
}

namespace detail {

/// Conjugation x -> u x u^{-1} on Im H, as a 3x3 matrix.
inline Matrix conjugation_matrix(const Quaternion& u) {
  Matrix c(3, 3);
  const Quaternion inv = u.inverse();
  for (int e = 1; e <= 3; ++e) {
    const Quaternion img = u * Quaternion::unit(e) * inv;
    c(0, e - 1) = img.x;
    c(1, e - 1) = img.y;
    c(2, e - 1) = img.z;
  }
  return c;
}

/// A nonzero pure imaginary quaternion orthogonal to v (so conjugation by it negates v).
inline Quaternion orthogonal_imaginary(const Quaternion& v) {
  for (int e = 1; e <= 3; ++e) {
    const auto c = Quaternion::unit(e).coords();
    if (c[1] * v.x + c[2] * v.y + c[3] * v.z == 0) return Quaternion::unit(e);
  }
  // v has no zero coordinate: v x i
  return Quaternion::imag(0, v.z, -v.y);
}

inline Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

/// Multiplication by the complex unit on C^k = R^{2k}: (x, y) -> (-y, x).
inline Matrix complex_unit(std::size_t k) {
  Matrix j(2 * k, 2 * k);
  for (std::size_t l = 0; l < k; ++l) {
    j(2 * l, 2 * l + 1) = -1;
    j(2 * l + 1, 2 * l) = 1;
  }
  return j;
}

}  // namespace detail

/*
 * Witness recipes. Complex cases: the conjugation differential
 * (v, w) -> (-v, sqrt(-1) w) followed by the isotropy scalar sqrt(-1),
 * giving (v, w) -> (-v, -w) for every xi. Quaternionic case:
 * d(g1, g2)(v, w) = (g1 v g1^{-1}, g2 w) with g1 orthogonal to v and g2 the
 * reflection in the quaternionic line through w.
 */
inline ReversalWitness witness_for(const std::string& example_id, const Params& params, const Vector& xi) {
  const WitnessExample ex = parse_witness_example(example_id);
  const TangentLayout t = tangent_layout(ex, params);
  if (xi.size() != t.dim()) throw std::invalid_argument("witness_for: xi must be given in m coordinates");

  if (ex != WitnessExample::sp1_spn) {
    const std::size_t k = t.vec_dim / 2;
    Matrix dphi = detail::block_diagonal(Matrix{{-1}}, detail::complex_unit(k));
    Matrix scalar = detail::block_diagonal(Matrix{{1}}, detail::complex_unit(k));
    return {scalar * dphi, "complex unit in the isotropy group composed with d(conjugation); (v,w) -> (-v,-w)"};
  }

  const Quaternion v = Quaternion::imag(xi[0], xi[1], xi[2]);
  const std::size_t slots = t.vec_dim / 4;
  std::vector<Quaternion> w(slots);
  for (std::size_t s = 0; s < slots; ++s) w[s] = {xi[3 + 4 * s], xi[4 + 4 * s], xi[5 + 4 * s], xi[6 + 4 * s]};

  const Quaternion g1 = v.is_zero() ? Quaternion::unit(1) : detail::orthogonal_imaginary(v);
  Matrix first = detail::conjugation_matrix(g1);

  Rational wnorm = 0;
  for (const auto& q : w) wnorm += q.norm2();
  Matrix second = Matrix::identity(t.vec_dim);
  if (wnorm != 0) {
    // y -> y - 2 w h(w, y) / |w|^2, h(w, y) = sum conj(w_s) y_s
    for (std::size_t col = 0; col < t.vec_dim; ++col) {
      std::vector<Quaternion> y(slots, Quaternion::real(0));
      y[col / 4] = Quaternion::unit(static_cast<int>(col % 4));
      Quaternion hw = Quaternion::real(0);
      for (std::size_t s = 0; s < slots; ++s) hw = hw + w[s].conj() * y[s];
      for (std::size_t s = 0; s < slots; ++s) {
        const auto img = (y[s] - (Rational(2) / wnorm) * (w[s] * hw)).coords();
        for (int c = 0; c < 4; ++c) second(4 * s + c, col) = img[c];
      }
    }
  }
  auto coords = g1.coords();
  std::string desc = "d(g1,g2) with g1 = " + to_string(coords[1]) + "i+" + to_string(coords[2]) + "j+" + to_string(coords[3]) +
                     "k" + (wnorm == 0 ? ", g2 = identity (w = 0)" : ", g2 = reflection in the quaternionic line through w");
  return {detail::block_diagonal(first, second), desc};
}

/// W preserves <,>_1 and <,>_2 separately and every a<,>_1 + b<,>_2 with (a, b) in {+-1, +-2}^2.
inline Report family_isometry_check(const std::string& example_id, const Params& params, const Matrix& w) {
  const TangentLayout t = tangent_layout(parse_witness_example(example_id), params);
  if (w.rows() != t.dim() || w.cols() != t.dim()) throw std::invalid_argument("family_isometry_check: witness has wrong shape");
  Report r;
  r.check = "metric-family-independence";
  const bool block1 = t.metric(1, 0).congruent(w) == t.metric(1, 0);
  const bool block2 = t.metric(0, 1).congruent(w) == t.metric(0, 1);
  json failures = json::array();
  std::size_t checked = 0;
  const long grid[] = {-2, -1, 1, 2};
  for (long a : grid)
    for (long b : grid) {
      ++checked;
      const BilinearForm g = t.metric(a, b);
      if (!(g.congruent(w) == g)) failures.push_back({a, b});
    }
  r.verdict = block1 && block2 && failures.empty() ? Verdict::pass : Verdict::fail;
  r.witness = {{"im_block_preserved", block1}, {"vector_block_preserved", block2}, {"grid_points", checked}, {"grid_failures", failures}};
  return r;
}

inline Report metric_family_independence(const std::string& example_id, const Params& params, const Vector& xi) {
  return family_isometry_check(example_id, params, witness_for(example_id, params, xi).W);
}

/// Seeded tangent vectors (entries in {-3, -5/2, ..., 3}), each given a witness that is then verified.
inline Report weak_symmetry_survey(const std::string& example_id, const Params& params, const SamplerConfig& cfg) {
  const CatalogEntry entry = make_catalog_entry(example_id, params);
  const ReductiveSpace& s = entry.space;
  std::mt19937_64 rng(cfg.seed);
  Report r;
  r.check = "weak-symmetry";
  r.seed = cfg.seed;
  r.samples = cfg.count;
  json failures = json::array();
  std::size_t xi_dependent = 0;
  Matrix first;
  for (std::size_t n = 0; n < cfg.count; ++n) {
    Vector xi(s.dim_m());
    for (auto& x : xi) x = make_rational(static_cast<long>(rng() % 13) - 6, 2);
    ReversalWitness w = witness_for(example_id, params, xi);
    if (n == 0) first = w.W;
    else if (!(w.W == first)) ++xi_dependent;
    Report v = verify_witness(s, w, xi);
    Report f = family_isometry_check(example_id, params, w.W);
    if (!v.passed() || !f.passed())
      failures.push_back({{"xi", detail::vector_json(xi)}, {"verify", v.witness}, {"family", f.witness}});
  }
  r.verdict = failures.empty() ? Verdict::pass : Verdict::fail;
  r.witness = {{"space", entry.id}, {"failures", failures}, {"witness_varies_with_xi", xi_dependent > 0}};
  return r;
}

}  // namespace wsym
