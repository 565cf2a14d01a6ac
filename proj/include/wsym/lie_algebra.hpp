#pragma once

#include <wsym/bilinear_form.hpp>
#include <wsym/linalg.hpp>
#include <wsym/report.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wsym {

/// One structure constant c^k_{ij}.
struct Term {
  std::size_t k;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// [b_i, b_j] = sum of terms, as listed in an algebra definition.
struct BracketSpec {
  std::size_t i;
  std::size_t j;
  std::vector<Term> terms;
};

/*
 * Finite-dimensional real Lie algebra given by exact structure constants
 * over a named basis. The table holds every ordered pair (i, j); the
 * normal constructors fill c[j][i] = -c[i][j] from the listed brackets,
 * while from_table() accepts arbitrary data so validate() can inspect it.
 */
class LieAlgebra {
 public:
  LieAlgebra() = default;

  static LieAlgebra from_brackets(std::vector<std::string> names, const std::vector<BracketSpec>& brackets) {
    LieAlgebra g(std::move(names));
    std::vector<bool> seen(g.dim_ * g.dim_, false);
    for (const auto& b : brackets) {
      if (b.i >= g.dim_ || b.j >= g.dim_) throw std::invalid_argument("bracket index out of range");
      if (b.i == b.j) throw std::invalid_argument("bracket of a basis element with itself: " + g.names_[b.i]);
      if (seen[b.i * g.dim_ + b.j]) throw std::invalid_argument("duplicate bracket [" + g.names_[b.i] + "," + g.names_[b.j] + "]");
      seen[b.i * g.dim_ + b.j] = seen[b.j * g.dim_ + b.i] = true;
      std::map<std::size_t, Rational> acc;
      for (const auto& t : b.terms) {
        if (t.k >= g.dim_) throw std::invalid_argument("bracket term index out of range");
        acc[t.k] += t.coeff;
      }
      for (const auto& [k, c] : acc) {
        if (c == 0) continue;
        g.cell(b.i, b.j).push_back({k, c});
        g.cell(b.j, b.i).push_back({k, -c});
      }
    }
    return g;
  }

  /// Unchecked full table, table[i * dim + j] = [b_i, b_j].
  static LieAlgebra from_table(std::vector<std::string> names, std::vector<std::vector<Term>> table) {
    LieAlgebra g(std::move(names));
    if (table.size() != g.dim_ * g.dim_) throw std::invalid_argument("structure table has wrong size");
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
      std::map<std::size_t, Rational> acc;
      for (const auto& t : table[idx]) {
        if (t.k >= g.dim_) throw std::invalid_argument("bracket term index out of range");
        acc[t.k] += t.coeff;
      }
      for (const auto& [k, c] : acc)
        if (c != 0) g.table_[idx].push_back({k, c});
    }
    return g;
  }

  static LieAlgebra abelian(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    return LieAlgebra(std::move(names));
  }

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }

  std::size_t index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw std::invalid_argument("unknown basis element '" + name + "'");
    return static_cast<std::size_t>(it - names_.begin());
  }

  Vector basis_vector(std::size_t i) const { return unit_vector(dim_, i); }
  Vector basis_vector(const std::string& name) const { return basis_vector(index_of(name)); }

  /// Nonzero structure constants of [b_i, b_j], sorted by k.
  const std::vector<Term>& structure(std::size_t i, std::size_t j) const { return table_.at(i * dim_ + j); }

  /// Listed form: brackets with i < j and a nonzero value.
  std::vector<BracketSpec> upper_brackets() const {
    std::vector<BracketSpec> out;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (!structure(i, j).empty()) out.push_back({i, j, structure(i, j)});
    return out;
  }

 private:
  explicit LieAlgebra(std::vector<std::string> names) : dim_(names.size()), names_(std::move(names)), table_(dim_ * dim_) {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (names_[i] == names_[j]) throw std::invalid_argument("duplicate basis name '" + names_[i] + "'");
  }

  std::vector<Term>& cell(std::size_t i, std::size_t j) { return table_[i * dim_ + j]; }

  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<Term>> table_;
};

inline Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y) {
  if (x.size() != g.dim() || y.size() != g.dim()) throw std::invalid_argument("bracket argument dimension mismatch");
  Vector r = zero_vector(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (y[j] == 0) continue;
      const auto& terms = g.structure(i, j);
      if (terms.empty()) continue;
      const Rational xy = x[i] * y[j];
      for (const auto& t : terms) r[t.k] += xy * t.coeff;
    }
  }
  return r;
}

/// Matrix of ad(x): column j holds [x, b_j].
inline Matrix ad_matrix(const LieAlgebra& g, const Vector& x) {
  Matrix m(g.dim(), g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) {
    Vector c = bracket(g, x, g.basis_vector(j));
    for (std::size_t i = 0; i < g.dim(); ++i) m(i, j) = c[i];
  }
  return m;
}

namespace detail {

inline json vector_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

}  // namespace detail

/// Exact antisymmetry and Jacobi check over all basis pairs and triples.
inline Report validate(const LieAlgebra& g) {
  Report r;
  r.check = "validate";
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector s = bracket(g, g.basis_vector(i), g.basis_vector(j)) + bracket(g, g.basis_vector(j), g.basis_vector(i));
      if (!is_zero(s)) {
        r.verdict = Verdict::fail;
        r.witness = {{"identity", "antisymmetry"},
                     {"pair", {g.names()[i], g.names()[j]}},
                     {"indices", {i + 1, j + 1}},
                     {"defect", detail::vector_json(s)}};
        return r;
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector bij = bracket(g, g.basis_vector(i), g.basis_vector(j));
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector s = bracket(g, bij, g.basis_vector(k)) +
                   bracket(g, bracket(g, g.basis_vector(j), g.basis_vector(k)), g.basis_vector(i)) +
                   bracket(g, bracket(g, g.basis_vector(k), g.basis_vector(i)), g.basis_vector(j));
        if (!is_zero(s)) {
          r.verdict = Verdict::fail;
          r.witness = {{"identity", "jacobi"},
                       {"triple", {g.names()[i], g.names()[j], g.names()[k]}},
                       {"indices", {i + 1, j + 1, k + 1}},
                       {"defect", detail::vector_json(s)}};
          return r;
        }
      }
    }
  r.witness = {{"dim", n}, {"triples_checked", n < 3 ? 0 : n * (n - 1) * (n - 2) / 6}};
  return r;
}

/// span{[u, v] : u in U, v in V}.
inline Subspace product_subspace(const LieAlgebra& g, const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != g.dim() || v.ambient_dim() != g.dim())
    throw std::invalid_argument("subspace ambient dimension does not match the algebra");
  std::vector<Vector> products;
  for (const auto& a : u.basis())
    for (const auto& b : v.basis()) {
      Vector c = bracket(g, a, b);
      if (!is_zero(c)) products.push_back(std::move(c));
    }
  return Subspace::span(g.dim(), products);
}

/// [s^0, s^1, ...] with s^0 = s and s^{k+1} = [s, s^k], stopping at the first repeat.
inline std::vector<Subspace> lower_central_series(const LieAlgebra& g, const Subspace& s) {
  std::vector<Subspace> series{s};
  while (!series.back().is_zero()) {
    Subspace next = product_subspace(g, s, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

inline std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  return lower_central_series(g, Subspace::full(g.dim()));
}

/// Smallest s with s-th term zero; nullopt when the series stalls at a nonzero term.
inline std::optional<std::size_t> nilpotency_step(const LieAlgebra& g, const Subspace& s) {
  auto series = lower_central_series(g, s);
  if (!series.back().is_zero()) return std::nullopt;
  return series.size() - 1;
}

inline std::optional<std::size_t> nilpotency_step(const LieAlgebra& g) {
  return nilpotency_step(g, Subspace::full(g.dim()));
}

/// B(x, y) = trace(ad x ad y).
inline BilinearForm killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Matrix> ad;
  for (std::size_t i = 0; i < n; ++i) ad.push_back(ad_matrix(g, g.basis_vector(i)));
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational t = 0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (ad[i](r, c) != 0 && ad[j](c, r) != 0) t += ad[i](r, c) * ad[j](c, r);
      b(i, j) = t;
      b(j, i) = t;
    }
  return BilinearForm(std::move(b));
}

/*
 * ideal (+) acting with [(n,a),(n',a')] = ([n,n'] + a.n' - a'.n, [a,a']).
 * action[a] is the matrix of the a-th acting basis element on the ideal
 * (column convention). Derivation and homomorphism identities are checked.
 */
inline LieAlgebra semidirect_sum(const LieAlgebra& ideal, const LieAlgebra& acting, const std::vector<Matrix>& action) {
  const std::size_t n = ideal.dim(), k = acting.dim();
  if (action.size() != k) throw std::invalid_argument("semidirect_sum: need one action matrix per acting basis element");
  for (const auto& d : action)
    if (d.rows() != n || d.cols() != n) throw std::invalid_argument("semidirect_sum: action matrix has wrong shape");

  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Vector bi = ideal.basis_vector(i), bj = ideal.basis_vector(j);
        Vector lhs = action[a] * bracket(ideal, bi, bj);
        Vector rhs = bracket(ideal, action[a] * bi, bj) + bracket(ideal, bi, action[a] * bj);
        if (lhs != rhs)
          throw std::invalid_argument("semidirect_sum: action of '" + acting.names()[a] +
                                      "' violates the derivation identity D[x,y] = [Dx,y] + [x,Dy] on (" +
                                      ideal.names()[i] + "," + ideal.names()[j] + ")");
      }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      Matrix image(n, n);
      for (const auto& t : acting.structure(a, b)) image = image + t.coeff * action[t.k];
      if (!(image == commutator(action[a], action[b])))
        throw std::invalid_argument("semidirect_sum: action violates the homomorphism identity D([a,b]) = [D(a),D(b)] on (" +
                                    acting.names()[a] + "," + acting.names()[b] + ")");
    }

  std::vector<std::string> names = ideal.names();
  names.insert(names.end(), acting.names().begin(), acting.names().end());
  std::vector<BracketSpec> brackets;
  for (const auto& b : ideal.upper_brackets()) brackets.push_back(b);
  for (const auto& b : acting.upper_brackets()) {
    BracketSpec s{b.i + n, b.j + n, {}};
    for (const auto& t : b.terms) s.terms.push_back({t.k + n, t.coeff});
    brackets.push_back(std::move(s));
  }
  // [n_i, a_j] = -a_j . n_i
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < k; ++a) {
      BracketSpec s{i, n + a, {}};
      for (std::size_t r = 0; r < n; ++r)
        if (action[a](r, i) != 0) s.terms.push_back({r, -action[a](r, i)});
      if (!s.terms.empty()) brackets.push_back(std::move(s));
    }
  return LieAlgebra::from_brackets(std::move(names), brackets);
}

/*
 * Linear Lie algebra spanned by the given matrices; structure constants are
 * read off by expressing each commutator in the basis. Throws if the span
 * is not closed under commutators or the matrices are dependent.
 */
inline LieAlgebra matrix_algebra(std::vector<std::string> names, const std::vector<Matrix>& basis) {
  const std::size_t d = basis.size();
  if (names.size() != d) throw std::invalid_argument("matrix_algebra: one name per matrix");
  if (d == 0) return LieAlgebra::from_brackets(std::move(names), {});
  const std::size_t rows = basis[0].rows(), cols = basis[0].cols();
  auto flatten = [&](const Matrix& m) {
    if (m.rows() != rows || m.cols() != cols) throw std::invalid_argument("matrix_algebra: shape mismatch");
    Vector v;
    v.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) v.push_back(m(i, j));
    return v;
  };
  std::vector<Vector> flat;
  for (const auto& m : basis) flat.push_back(flatten(m));

  // rows of the flattened basis where it is invertible
  Echelon e = reduced_echelon(flat, rows * cols);
  if (e.rows.size() != d) throw std::invalid_argument("matrix_algebra: basis matrices are linearly dependent");
  Matrix square(d, d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t c = 0; c < d; ++c) square(p, c) = flat[c][e.pivots[p]];
  const Matrix inv = *inverse(square);

  std::vector<BracketSpec> brackets;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      Vector c = flatten(commutator(basis[a], basis[b]));
      if (is_zero(c)) continue;
      Vector picked(d);
      for (std::size_t p = 0; p < d; ++p) picked[p] = c[e.pivots[p]];
      Vector coords = inv * picked;
      Vector back = zero_vector(rows * cols);
      for (std::size_t t = 0; t < d; ++t)
        if (coords[t] != 0) back = back + coords[t] * flat[t];
      if (back != c) throw std::invalid_argument("matrix_algebra: span not closed under [" + names[a] + "," + names[b] + "]");
      BracketSpec s{a, b, {}};
      for (std::size_t t = 0; t < d; ++t)
        if (coords[t] != 0) s.terms.push_back({t, coords[t]});
      brackets.push_back(std::move(s));
    }
  return LieAlgebra::from_brackets(std::move(names), brackets);
}

}  // namespace wsym
