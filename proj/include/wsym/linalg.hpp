#pragma once

#include <wsym/rational.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace wsym {

/// Reduced row echelon form of a list of rows: nonzero rows plus their pivot columns.
struct Echelon {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;
};

namespace detail {

inline std::vector<Integer> integer_row(const Vector& row) {
  Integer l = 1;
  for (const auto& x : row)
    if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    Integer t = l / row[j].get_den();
    out[j] = t * row[j].get_num();
  }
  return out;
}

}  // namespace detail

/*
 * Fraction-free (Bareiss) forward elimination on integer-scaled rows,
 * followed by normalization to reduced row echelon form over Q.
 * Every intermediate entry of the forward pass is a minor of the input,
 * so the divisions by the previous pivot are exact.
 */
inline Echelon reduced_echelon(const std::vector<Vector>& input, std::size_t cols) {
  std::vector<std::vector<Integer>> m;
  m.reserve(input.size());
  for (const auto& r : input) {
    if (r.size() != cols) throw std::invalid_argument("row length mismatch in elimination");
    if (!is_zero(r)) m.push_back(detail::integer_row(r));
  }

  Integer prev = 1;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    const Integer pivot = m[rank][c];
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      const Integer lead = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = pivot * m[i][j] - lead * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = pivot;
    pivots.push_back(c);
    ++rank;
  }

  Echelon e;
  e.pivots = pivots;
  e.rows.resize(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    e.rows[i].resize(cols);
    for (std::size_t j = 0; j < cols; ++j) e.rows[i][j] = Rational(m[i][j]);
  }
  for (std::size_t i = rank; i-- > 0;) {
    const Rational inv = 1 / e.rows[i][pivots[i]];
    for (auto& x : e.rows[i]) x *= inv;
    for (std::size_t k = 0; k < i; ++k) {
      const Rational f = e.rows[k][pivots[i]];
      if (f == 0) continue;
      for (std::size_t j = pivots[i]; j < cols; ++j) e.rows[k][j] -= f * e.rows[i][j];
    }
  }
  return e;
}

inline std::size_t rank(const Matrix& a) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  return reduced_echelon(rows, a.cols()).rows.size();
}

/// Basis of {x : A x = 0}, one vector per free column.
inline std::vector<Vector> kernel(const Matrix& a) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  Echelon e = reduced_echelon(rows, a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(a.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Particular solution of A x = b with all free variables set to 0, or nullopt if inconsistent.
inline std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Vector r = a.row(i);
    r.push_back(b[i]);
    rows.push_back(std::move(r));
  }
  Echelon e = reduced_echelon(rows, a.cols() + 1);
  Vector x = zero_vector(a.cols());
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == a.cols()) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][a.cols()];
  }
  return x;
}

inline std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vector r = a.row(i);
    for (std::size_t j = 0; j < n; ++j) r.push_back(i == j ? Rational(1) : Rational(0));
    rows.push_back(std::move(r));
  }
  Echelon e = reduced_echelon(rows, 2 * n);
  if (e.rows.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rows[i][n + j];
  return inv;
}

/// Linear subspace of Q^n held in reduced echelon form, so equal subspaces compare equal.
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors) {
    Subspace s;
    s.ambient_ = ambient;
    Echelon e = reduced_echelon(vectors, ambient);
    s.basis_ = std::move(e.rows);
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  static Subspace zero(std::size_t ambient) { return span(ambient, {}); }

  static Subspace full(std::size_t ambient) {
    std::vector<Vector> id;
    for (std::size_t i = 0; i < ambient; ++i) id.push_back(unit_vector(ambient, i));
    return span(ambient, id);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Coefficients of v in the echelon basis, or nullopt if v is not in the subspace.
  std::optional<Vector> coordinates(const Vector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("subspace ambient dimension mismatch");
    Vector c(dim());
    Vector rest = v;
    for (std::size_t i = 0; i < dim(); ++i) {
      c[i] = v[pivots_[i]];
      if (c[i] == 0) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (basis_[i][j] != 0) rest[j] -= c[i] * basis_[i][j];
    }
    if (!wsym::is_zero(rest)) return std::nullopt;
    return c;
  }

  bool contains(const Vector& v) const { return coordinates(v).has_value(); }

  bool contains(const Subspace& other) const {
    check_ambient(other);
    for (const auto& b : other.basis_)
      if (!contains(b)) return false;
    return true;
  }

  Subspace operator+(const Subspace& other) const {
    check_ambient(other);
    std::vector<Vector> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, all);
  }

  Subspace intersect(const Subspace& other) const {
    check_ambient(other);
    if (is_zero() || other.is_zero()) return zero(ambient_);
    // columns u_1..u_r, -v_1..-v_s; a kernel vector (a, b) gives sum a_i u_i in both
    std::vector<Vector> cols = basis_;
    for (const auto& v : other.basis_) cols.push_back(-v);
    Matrix a = Matrix::from_columns(cols, ambient_);
    std::vector<Vector> common;
    for (const auto& k : kernel(a)) {
      Vector x = zero_vector(ambient_);
      for (std::size_t i = 0; i < dim(); ++i)
        if (k[i] != 0) x = x + k[i] * basis_[i];
      common.push_back(std::move(x));
    }
    return span(ambient_, common);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  void check_ambient(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("subspace ambient dimension mismatch");
  }

  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace wsym
