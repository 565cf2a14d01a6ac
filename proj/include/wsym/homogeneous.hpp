#pragma once

#include <wsym/forms.hpp>
#include <wsym/lie_algebra.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wsym {

enum class SpaceErrorKind {
  not_complementary,
  not_ad_invariant_complement,
  degenerate_metric,
  metric_not_isotropy_invariant,
  h_not_subalgebra,
};

inline const char* to_string(SpaceErrorKind k) {
  switch (k) {
    case SpaceErrorKind::not_complementary: return "not-complementary";
    case SpaceErrorKind::not_ad_invariant_complement: return "not-ad-invariant-complement";
    case SpaceErrorKind::degenerate_metric: return "degenerate-metric";
    case SpaceErrorKind::metric_not_isotropy_invariant: return "metric-not-isotropy-invariant";
    case SpaceErrorKind::h_not_subalgebra: return "h-not-subalgebra";
  }
  return "unknown";
}

class SpaceError : public std::invalid_argument {
 public:
  SpaceError(SpaceErrorKind kind, const std::string& detail)
      : std::invalid_argument(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}
  SpaceErrorKind kind() const { return kind_; }

 private:
  SpaceErrorKind kind_;
};

/*
 * Reductive homogeneous space g = m (+) h with an invariant metric on m.
 * The frames are kept as given: the metric's Gram matrix refers to the
 * m_frame order. All four invariants are verified by make().
 */
class ReductiveSpace {
 public:
  static ReductiveSpace make(LieAlgebra g, std::vector<Vector> h_frame, std::vector<Vector> m_frame, BilinearForm metric) {
    ReductiveSpace s;
    const std::size_t n = g.dim();
    for (const auto& v : h_frame)
      if (v.size() != n) throw std::invalid_argument("h basis vector has wrong length");
    for (const auto& v : m_frame)
      if (v.size() != n) throw std::invalid_argument("m basis vector has wrong length");
    if (metric.dim() != m_frame.size())
      throw std::invalid_argument("metric dimension " + std::to_string(metric.dim()) + " differs from dim m = " +
                                  std::to_string(m_frame.size()));

    std::vector<Vector> all = m_frame;
    all.insert(all.end(), h_frame.begin(), h_frame.end());
    if (all.size() != n) throw SpaceError(SpaceErrorKind::not_complementary, "dim m + dim h != dim g");
    auto inv = inverse(Matrix::from_columns(all, n));
    if (!inv) throw SpaceError(SpaceErrorKind::not_complementary, "m and h intersect nontrivially");

    s.g_ = std::move(g);
    s.h_frame_ = std::move(h_frame);
    s.m_frame_ = std::move(m_frame);
    s.metric_ = std::move(metric);
    s.to_frame_ = std::move(*inv);
    s.h_ = Subspace::span(n, s.h_frame_);
    s.m_ = Subspace::span(n, s.m_frame_);

    for (std::size_t a = 0; a < s.h_frame_.size(); ++a)
      for (std::size_t b = a + 1; b < s.h_frame_.size(); ++b)
        if (!s.h_.contains(bracket(s.g_, s.h_frame_[a], s.h_frame_[b])))
          throw SpaceError(SpaceErrorKind::h_not_subalgebra,
                           "[h_" + std::to_string(a + 1) + ", h_" + std::to_string(b + 1) + "] not in h");

    s.iso_.reserve(s.h_frame_.size());
    for (std::size_t a = 0; a < s.h_frame_.size(); ++a) {
      Matrix op(s.dim_m(), s.dim_m());
      for (std::size_t j = 0; j < s.dim_m(); ++j) {
        Vector c = bracket(s.g_, s.h_frame_[a], s.m_frame_[j]);
        if (!s.m_.contains(c))
          throw SpaceError(SpaceErrorKind::not_ad_invariant_complement,
                           "[h_" + std::to_string(a + 1) + ", m_" + std::to_string(j + 1) + "] not in m");
        Vector cm = s.m_coords(c);
        for (std::size_t i = 0; i < s.dim_m(); ++i) op(i, j) = cm[i];
      }
      s.iso_.push_back(std::move(op));
    }

    if (!signature(s.metric_).nondegenerate()) throw SpaceError(SpaceErrorKind::degenerate_metric, "metric on m is degenerate");

    for (std::size_t a = 0; a < s.iso_.size(); ++a) {
      Report r = skew_defect(s.iso_[a], s.metric_);
      if (!r.passed())
        throw SpaceError(SpaceErrorKind::metric_not_isotropy_invariant,
                         "ad(h_" + std::to_string(a + 1) + ")|m is not metric-skew at " + r.witness["pair"].dump());
    }

    // [m_u, m_j]_m in m coordinates, used by the geodesic equations
    s.mm_.assign(s.dim_m(), std::vector<Vector>(s.dim_m()));
    for (std::size_t u = 0; u < s.dim_m(); ++u)
      for (std::size_t j = 0; j < s.dim_m(); ++j) s.mm_[u][j] = s.m_coords(bracket(s.g_, s.m_frame_[u], s.m_frame_[j]));
    return s;
  }

  const LieAlgebra& algebra() const { return g_; }
  const Subspace& h() const { return h_; }
  const Subspace& m() const { return m_; }
  const std::vector<Vector>& h_frame() const { return h_frame_; }
  const std::vector<Vector>& m_frame() const { return m_frame_; }
  const BilinearForm& metric() const { return metric_; }
  std::size_t dim_m() const { return m_frame_.size(); }
  std::size_t dim_h() const { return h_frame_.size(); }

  /// Coordinates of the m-component of x in the m frame.
  Vector m_coords(const Vector& x) const {
    Vector all = to_frame_ * x;
    return Vector(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(dim_m()));
  }

  Vector h_coords(const Vector& x) const {
    Vector all = to_frame_ * x;
    return Vector(all.begin() + static_cast<std::ptrdiff_t>(dim_m()), all.end());
  }

  Vector from_m_coords(const Vector& c) const { return combine(m_frame_, c); }
  Vector from_h_coords(const Vector& c) const { return combine(h_frame_, c); }

  /// Metric on m, arguments given in m coordinates.
  Rational inner(const Vector& xc, const Vector& yc) const { return metric_(xc, yc); }

  /// Matrix of ad(h_a)|m in the m frame.
  const Matrix& isotropy_generator(std::size_t a) const { return iso_.at(a); }

  /// m coordinates of [m_u, m_j]_m.
  const Vector& m_bracket(std::size_t u, std::size_t j) const { return mm_[u][j]; }

 private:
  ReductiveSpace() = default;

  Vector combine(const std::vector<Vector>& frame, const Vector& c) const {
    if (c.size() != frame.size()) throw std::invalid_argument("coordinate vector has wrong length");
    Vector x = zero_vector(g_.dim());
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) x = x + c[i] * frame[i];
    return x;
  }

  LieAlgebra g_;
  std::vector<Vector> h_frame_, m_frame_;
  Subspace h_, m_;
  BilinearForm metric_;
  Matrix to_frame_;
  std::vector<Matrix> iso_;
  std::vector<std::vector<Vector>> mm_;
};

inline ReductiveSpace make_reductive_space(LieAlgebra g, std::vector<Vector> h_frame, std::vector<Vector> m_frame,
                                           BilinearForm metric) {
  return ReductiveSpace::make(std::move(g), std::move(h_frame), std::move(m_frame), std::move(metric));
}

struct Projection {
  Vector m;
  Vector h;
};

/// Unique split x = x_m + x_h.
inline Projection project(const ReductiveSpace& s, const Vector& x) {
  if (x.size() != s.algebra().dim()) throw std::invalid_argument("project: vector has wrong length");
  Vector xm = s.from_m_coords(s.m_coords(x));
  return {xm, x - xm};
}

/// Matrix of X -> [A, X]_m on m, in the m frame.
inline Matrix isotropy_operator(const ReductiveSpace& s, const Vector& a) {
  if (a.size() != s.algebra().dim()) throw std::invalid_argument("isotropy_operator: vector has wrong length");
  if (!s.h().contains(a)) throw std::invalid_argument("isotropy_operator: A is not in h");
  const Vector c = s.h_coords(a);
  Matrix op(s.dim_m(), s.dim_m());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) op = op + c[i] * s.isotropy_generator(i);
  return op;
}

}  // namespace wsym
