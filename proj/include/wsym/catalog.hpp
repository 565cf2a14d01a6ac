#pragma once

#include <wsym/homogeneous.hpp>
#include <wsym/lie_algebra.hpp>
#include <wsym/quaternion.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wsym {

using Params = std::map<std::string, Rational>;

struct CatalogEntry {
  std::string id;
  Params params;
  ReductiveSpace space;
  std::optional<Subspace> nilradical;
  std::string provenance;
};

namespace detail {

inline void require_nonzero_metric(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw SpaceError(SpaceErrorKind::degenerate_metric, "metric coefficients a and b must be nonzero");
}

inline std::vector<Vector> unit_range(std::size_t dim, std::size_t from, std::size_t to) {
  std::vector<Vector> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(unit_vector(dim, i));
  return out;
}

inline const char* const kImagNames[3] = {"i", "j", "k"};

}  // namespace detail

/*
 * Heisenberg-type algebra Im C (+) C^{p,q} over R, basis z, x_1, y_1, ...,
 * with [(v,w),(v',w')] = 2 Im h(w,w') on z, h(w,w') = sum eps_l w_l conj(w'_l).
 */
inline LieAlgebra heisenberg_algebra(std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  std::vector<std::string> names{"z"};
  for (std::size_t l = 1; l <= n; ++l) {
    names.push_back("x" + std::to_string(l));
    names.push_back("y" + std::to_string(l));
  }
  std::vector<BracketSpec> brackets;
  for (std::size_t l = 0; l < n; ++l) {
    const long eps = l < p ? 1 : -1;
    // w = e_l, w' = i e_l: Im(1 * conj(i)) = -1
    brackets.push_back({1 + 2 * l, 2 + 2 * l, {{0, make_rational(-2 * eps)}}});
  }
  return LieAlgebra::from_brackets(std::move(names), brackets);
}

/// u(p,q) = {A : A^* J + J A = 0}, J = diag(1..1, -1..-1), realized on C^n = R^{2n}.
inline std::pair<std::vector<std::string>, std::vector<Matrix>> unitary_basis(std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  auto eps = [p](std::size_t l) { return l < p ? 1L : -1L; };
  std::vector<std::string> names;
  std::vector<Matrix> mats;
  // A = J S with S running over the skew-Hermitian basis i E_jj, E_kj - E_jk, i(E_jk + E_kj)
  for (std::size_t j = 0; j < n; ++j) {
    Matrix re(n, n), im(n, n);
    im(j, j) = eps(j);
    names.push_back("d" + std::to_string(j + 1));
    mats.push_back(realify_complex(re, im));
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      Matrix re(n, n), im(n, n);
      re(k, j) = eps(k);
      re(j, k) = -eps(j);
      names.push_back("r" + std::to_string(j + 1) + "_" + std::to_string(k + 1));
      mats.push_back(realify_complex(re, im));
      Matrix re2(n, n), im2(n, n);
      im2(j, k) = eps(j);
      im2(k, j) = eps(k);
      names.push_back("s" + std::to_string(j + 1) + "_" + std::to_string(k + 1));
      mats.push_back(realify_complex(re2, im2));
    }
  return {names, mats};
}

/// G_{p,q} = H_{p,q} x| U(p,q) acting on Im C + C^{p,q}; h = u(p,q), m = the Heisenberg ideal.
inline CatalogEntry heisenberg_space(std::size_t p, std::size_t q, const Rational& a, const Rational& b) {
  if (p + q < 1) throw std::invalid_argument("heisenberg: need p + q >= 1");
  detail::require_nonzero_metric(a, b);
  const std::size_t n = p + q, dn = 1 + 2 * n;
  LieAlgebra ideal = heisenberg_algebra(p, q);
  auto [unames, umats] = unitary_basis(p, q);
  LieAlgebra acting = matrix_algebra(unames, umats);
  std::vector<Matrix> action;
  for (const auto& u : umats) {
    Matrix d(dn, dn);
    for (std::size_t i = 0; i < 2 * n; ++i)
      for (std::size_t j = 0; j < 2 * n; ++j) d(1 + i, 1 + j) = u(i, j);
    action.push_back(std::move(d));
  }
  LieAlgebra g = semidirect_sum(ideal, acting, action);

  Vector diag{a};
  for (std::size_t l = 0; l < n; ++l) {
    const Rational s = l < p ? b : Rational(-b);
    diag.push_back(s);
    diag.push_back(s);
  }
  const std::size_t dim = g.dim();
  auto m = detail::unit_range(dim, 0, dn);
  auto h = detail::unit_range(dim, dn, dim);
  ReductiveSpace space = make_reductive_space(std::move(g), h, m, BilinearForm::diagonal(diag));
  Subspace nil = Subspace::span(dim, m);
  return {"heisenberg",
          {{"p", Rational(static_cast<long>(p))}, {"q", Rational(static_cast<long>(q))}, {"a", a}, {"b", b}},
          std::move(space),
          std::move(nil),
          "Heisenberg-type group H_{p,q;C} x| U(p,q;C) over U(p,q;C)"};
}

/*
 * U(n)/U(n-1) = S^{2n-1}. Basis of u(n) ordered m first: i E_11, then
 * E_k1 - E_1k and i(E_1k + E_k1) for k >= 2 (so the first column of the
 * k-th pair is 1 resp. i in slot k); h = u(n-1) in the lower-right corner.
 */
inline CatalogEntry sphere_un_space(std::size_t n, const Rational& a, const Rational& b) {
  if (n < 2) throw std::invalid_argument("sphere-un: need n >= 2");
  detail::require_nonzero_metric(a, b);
  std::vector<std::string> names;
  std::vector<Matrix> mats;
  auto diag_elem = [&](std::size_t j) {
    Matrix re(n, n), im(n, n);
    im(j, j) = 1;
    names.push_back("d" + std::to_string(j + 1));
    mats.push_back(realify_complex(re, im));
  };
  auto pair_elems = [&](std::size_t j, std::size_t k) {
    Matrix re(n, n), im(n, n);
    re(k, j) = 1;
    re(j, k) = -1;
    names.push_back("r" + std::to_string(j + 1) + "_" + std::to_string(k + 1));
    mats.push_back(realify_complex(re, im));
    Matrix re2(n, n), im2(n, n);
    im2(j, k) = 1;
    im2(k, j) = 1;
    names.push_back("s" + std::to_string(j + 1) + "_" + std::to_string(k + 1));
    mats.push_back(realify_complex(re2, im2));
  };
  diag_elem(0);
  for (std::size_t k = 1; k < n; ++k) pair_elems(0, k);
  const std::size_t dm = mats.size();
  for (std::size_t j = 1; j < n; ++j) diag_elem(j);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) pair_elems(j, k);

  LieAlgebra g = matrix_algebra(names, mats);
  Vector diag{a};
  for (std::size_t i = 1; i < dm; ++i) diag.push_back(b);
  const std::size_t dim = g.dim();
  auto m = detail::unit_range(dim, 0, dm);
  auto h = detail::unit_range(dim, dm, dim);
  ReductiveSpace space = make_reductive_space(std::move(g), h, m, BilinearForm::diagonal(diag));
  return {"sphere-un",
          {{"n", Rational(static_cast<long>(n))}, {"a", a}, {"b", b}},
          std::move(space),
          std::nullopt,
          "U(n) acting on S^{2n-1}, isotropy U(n-1)"};
}

/*
 * Sp(1) x Sp(n) on S^{4n-1}, (g1, g2) x = g2 x g1^{-1}. Elements (q, Y) are
 * realized as diag(L(q), Y) on R^4 (+) R^{4n}. Isotropy at e_1 is
 * {(q, diag(q, B))}; the complement is m = {(0, v E_11)} (+) first-column
 * off-diagonal part, so the tangent vector of (0, Y) is Y e_1.
 */
inline CatalogEntry sp1_spn_space(std::size_t n, const Rational& a, const Rational& b) {
  if (n < 2) throw std::invalid_argument("sp1-spn: need n >= 2");
  detail::require_nonzero_metric(a, b);
  using QMat = std::vector<std::vector<Quaternion>>;
  const Quaternion zero = Quaternion::real(0);
  auto blank = [&] { return QMat(n, std::vector<Quaternion>(n, zero)); };
  auto element = [&](const Quaternion& q1, const QMat& y) {
    Matrix big(4 + 4 * n, 4 + 4 * n);
    Matrix l = left_multiplication(q1);
    Matrix r = realify_quaternion(y);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) big(i, j) = l(i, j);
    for (std::size_t i = 0; i < 4 * n; ++i)
      for (std::size_t j = 0; j < 4 * n; ++j) big(4 + i, 4 + j) = r(i, j);
    return big;
  };

  std::vector<std::string> names;
  std::vector<Matrix> mats;
  // m: Im H slot
  for (int u = 1; u <= 3; ++u) {
    QMat y = blank();
    y[0][0] = Quaternion::unit(u);
    names.push_back(std::string("v_") + detail::kImagNames[u - 1]);
    mats.push_back(element(zero, y));
  }
  // m: H^{n-1} slots, w_s = c0 + c1 i + c2 j + c3 k
  for (std::size_t s = 1; s < n; ++s)
    for (int u = 0; u <= 3; ++u) {
      QMat y = blank();
      if (u == 0) {
        y[s][0] = Quaternion::real(1);
        y[0][s] = Quaternion::real(-1);
      } else {
        y[s][0] = Quaternion::unit(u);
        y[0][s] = Quaternion::unit(u);
      }
      names.push_back("w" + std::to_string(s + 1) + "_" + (u == 0 ? std::string("1") : detail::kImagNames[u - 1]));
      mats.push_back(element(zero, y));
    }
  const std::size_t dm = mats.size();
  // h: diagonal sp(1)
  for (int u = 1; u <= 3; ++u) {
    QMat y = blank();
    y[0][0] = Quaternion::unit(u);
    names.push_back(std::string("delta_") + detail::kImagNames[u - 1]);
    mats.push_back(element(Quaternion::unit(u), y));
  }
  // h: sp(n-1) on slots 2..n
  for (std::size_t r = 1; r < n; ++r)
    for (int u = 1; u <= 3; ++u) {
      QMat y = blank();
      y[r][r] = Quaternion::unit(u);
      names.push_back("c" + std::to_string(r + 1) + "_" + detail::kImagNames[u - 1]);
      mats.push_back(element(zero, y));
    }
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s)
      for (int u = 0; u <= 3; ++u) {
        QMat y = blank();
        if (u == 0) {
          y[s][r] = Quaternion::real(1);
          y[r][s] = Quaternion::real(-1);
        } else {
          y[s][r] = Quaternion::unit(u);
          y[r][s] = Quaternion::unit(u);
        }
        names.push_back("o" + std::to_string(r + 1) + "_" + std::to_string(s + 1) + "_" +
                        (u == 0 ? std::string("1") : detail::kImagNames[u - 1]));
        mats.push_back(element(zero, y));
      }

  LieAlgebra g = matrix_algebra(names, mats);
  Vector diag{a, a, a};
  for (std::size_t i = 3; i < dm; ++i) diag.push_back(b);
  const std::size_t dim = g.dim();
  auto m = detail::unit_range(dim, 0, dm);
  auto h = detail::unit_range(dim, dm, dim);
  ReductiveSpace space = make_reductive_space(std::move(g), h, m, BilinearForm::diagonal(diag));
  return {"sp1-spn",
          {{"n", Rational(static_cast<long>(n))}, {"a", a}, {"b", b}},
          std::move(space),
          std::nullopt,
          "Sp(1) x Sp(n) acting on S^{4n-1}, isotropy Delta Sp(1) x Sp(n-1)"};
}

/*
 * R^m (+) C^{m+1} with [e_i,f_j] = z_{i+j-1}, [z_k,e_i] = f_{i+k},
 * [z_k,f_j] = -e_{k+j} (out-of-range indices vanish). Basis order
 * z_1..z_m, e_1..e_{m+1}, f_1..f_{m+1}.
 */
inline LieAlgebra kath_olbrich_algebra(std::size_t m) {
  if (m < 1) throw std::invalid_argument("kath-olbrich: need m >= 1");
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= m; ++k) names.push_back("z" + std::to_string(k));
  for (std::size_t i = 1; i <= m + 1; ++i) names.push_back("e" + std::to_string(i));
  for (std::size_t i = 1; i <= m + 1; ++i) names.push_back("f" + std::to_string(i));
  auto z = [](std::size_t k) { return k - 1; };
  auto e = [m](std::size_t i) { return m + i - 1; };
  auto f = [m](std::size_t i) { return 2 * m + i; };

  std::vector<BracketSpec> brackets;
  for (std::size_t i = 1; i <= m + 1; ++i)
    for (std::size_t j = 1; j <= m + 1; ++j)
      if (i + j - 1 <= m) brackets.push_back({e(i), f(j), {{z(i + j - 1), 1}}});
  for (std::size_t k = 1; k <= m; ++k)
    for (std::size_t i = 1; i <= m + 1; ++i) {
      if (i + k <= m + 1) brackets.push_back({z(k), e(i), {{f(i + k), 1}}});
      if (k + i <= m + 1) brackets.push_back({z(k), f(i), {{e(k + i), -1}}});
    }
  return LieAlgebra::from_brackets(std::move(names), brackets);
}

/// <z_k, z_l> = delta_{k+l,m+1}, <e_i,e_j> = <f_i,f_j> = delta_{i+j,m+2}, all other pairs 0.
inline BilinearForm kath_olbrich_metric(std::size_t m) {
  const std::size_t dim = 3 * m + 2;
  Matrix gram(dim, dim);
  for (std::size_t k = 1; k <= m; ++k)
    for (std::size_t l = 1; l <= m; ++l)
      if (k + l == m + 1) gram(k - 1, l - 1) = 1;
  for (std::size_t i = 1; i <= m + 1; ++i)
    for (std::size_t j = 1; j <= m + 1; ++j)
      if (i + j == m + 2) {
        gram(m + i - 1, m + j - 1) = 1;
        gram(2 * m + i, 2 * m + j) = 1;
      }
  return BilinearForm(std::move(gram));
}

/// Bi-invariant nilpotent group: h = 0, m = g.
inline CatalogEntry kath_olbrich(std::size_t m) {
  LieAlgebra g = kath_olbrich_algebra(m);
  const std::size_t dim = g.dim();
  ReductiveSpace space = make_reductive_space(std::move(g), {}, detail::unit_range(dim, 0, dim), kath_olbrich_metric(m));
  return {"kath-olbrich",
          {{"m", Rational(static_cast<long>(m))}},
          std::move(space),
          Subspace::full(dim),
          "bi-invariant (2m+1)-step nilpotent group R^m + C^{m+1}"};
}

inline LieAlgebra sl3_algebra() {
  std::vector<std::string> names{"E12", "E13", "E21", "E23", "E31", "E32", "H1", "H2"};
  std::vector<Matrix> mats;
  const std::pair<int, int> off[] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
  for (auto [r, c] : off) {
    Matrix e(3, 3);
    e(r, c) = 1;
    mats.push_back(std::move(e));
  }
  mats.push_back(Matrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}});
  mats.push_back(Matrix{{0, 0, 0}, {0, 1, 0}, {0, 0, -1}});
  return matrix_algebra(std::move(names), mats);
}

/// SL(3,R) with its Killing form as bi-invariant metric.
inline CatalogEntry sl3_killing_space() {
  LieAlgebra g = sl3_algebra();
  BilinearForm b = killing_form(g);
  const std::size_t dim = g.dim();
  ReductiveSpace space = make_reductive_space(std::move(g), {}, detail::unit_range(dim, 0, dim), std::move(b));
  return {"sl3-killing", {}, std::move(space), std::nullopt, "SL(3,R) with the Killing form metric"};
}

/// Canonical id: lower case, '_' mapped to '-'.
inline std::string normalize_catalog_id(std::string id) {
  std::transform(id.begin(), id.end(), id.begin(), [](unsigned char c) { return c == '_' ? '-' : static_cast<char>(std::tolower(c)); });
  if (id == "sphere-u" || id == "sphere") return "sphere-un";
  if (id == "sl3" || id == "sl3-r") return "sl3-killing";
  if (id == "ko") return "kath-olbrich";
  return id;
}

inline const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids{"heisenberg", "sphere-un", "sp1-spn", "kath-olbrich", "sl3-killing"};
  return ids;
}

namespace detail {

inline std::size_t natural_param(const Params& p, const std::string& name, long fallback) {
  auto it = p.find(name);
  Rational v = it == p.end() ? Rational(fallback) : it->second;
  if (v.get_den() != 1 || v < 0) throw std::invalid_argument("parameter '" + name + "' must be a non-negative integer");
  return static_cast<std::size_t>(v.get_num().get_ui());
}

inline Rational rational_param(const Params& p, const std::string& name, long fallback) {
  auto it = p.find(name);
  return it == p.end() ? Rational(fallback) : it->second;
}

}  // namespace detail

/// Builds a catalog entry by id; missing parameters take the smallest sensible defaults.
inline CatalogEntry make_catalog_entry(const std::string& raw_id, const Params& p) {
  const std::string id = normalize_catalog_id(raw_id);
  using detail::natural_param;
  using detail::rational_param;
  if (id == "heisenberg")
    return heisenberg_space(natural_param(p, "p", 1), natural_param(p, "q", 0), rational_param(p, "a", 1), rational_param(p, "b", 1));
  if (id == "sphere-un") return sphere_un_space(natural_param(p, "n", 2), rational_param(p, "a", 1), rational_param(p, "b", 1));
  if (id == "sp1-spn") return sp1_spn_space(natural_param(p, "n", 2), rational_param(p, "a", 1), rational_param(p, "b", 1));
  if (id == "kath-olbrich") return kath_olbrich(natural_param(p, "m", 1));
  if (id == "sl3-killing") return sl3_killing_space();
  throw std::invalid_argument("unknown catalog id '" + raw_id + "'");
}

}  // namespace wsym
