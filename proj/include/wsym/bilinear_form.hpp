#pragma once

#include <wsym/linalg.hpp>

#include <stdexcept>
#include <utility>

namespace wsym {

struct Signature {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  std::size_t dim() const { return n_plus + n_minus + n_zero; }
  bool nondegenerate() const { return n_zero == 0; }
  /// Nondegenerate and one-signed. A degenerate form is never definite.
  bool definite() const { return n_zero == 0 && (n_plus == dim() || n_minus == dim()); }

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Symmetric bilinear form given by its Gram matrix in a fixed basis.
class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(Matrix gram) : gram_(std::move(gram)) {
    if (!gram_.square()) throw std::invalid_argument("gram matrix must be square");
    if (!gram_.is_symmetric()) throw std::invalid_argument("gram matrix must be symmetric");
  }

  static BilinearForm zero(std::size_t n) { return BilinearForm(Matrix(n, n)); }
  static BilinearForm identity(std::size_t n) { return BilinearForm(Matrix::identity(n)); }

  static BilinearForm diagonal(const Vector& d) {
    Matrix g(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) g(i, i) = d[i];
    return BilinearForm(std::move(g));
  }

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }

  Rational operator()(const Vector& x, const Vector& y) const {
    if (x.size() != dim() || y.size() != dim()) throw std::invalid_argument("form argument dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j)
        if (y[j] != 0 && gram_(i, j) != 0) s += x[i] * gram_(i, j) * y[j];
    }
    return s;
  }

  /// Gram matrix of the form in the basis given by the columns of `basis` (P^T G P).
  BilinearForm congruent(const Matrix& basis) const { return BilinearForm(basis.transpose() * gram_ * basis); }

  friend bool operator==(const BilinearForm& a, const BilinearForm& b) { return a.gram_ == b.gram_; }

 private:
  Matrix gram_;
};

/*
 * Diagonal of a congruence diagonalization P^T G P. Simultaneous row/column
 * elimination; when every remaining diagonal entry vanishes but some a_ij
 * does not, the basis change e_i -> e_i + e_j puts 2 a_ij on the diagonal.
 */
inline Vector congruence_diagonal(const BilinearForm& form) {
  Matrix a = form.gram();
  const std::size_t n = a.rows();
  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };

  Vector diag;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p) == 0) ++p;
    if (p == n) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) {
        for (std::size_t r = k; r < n; ++r) diag.push_back(Rational(0));
        return diag;
      }
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      p = pi;
    }
    swap_index(k, p);
    const Rational d = a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      const Rational f = a(r, k) / d;
      for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= f * a(k, c);
      a(r, k) = 0;
    }
    for (std::size_t c = k + 1; c < n; ++c) a(k, c) = 0;
    diag.push_back(d);
  }
  return diag;
}

inline Signature signature(const BilinearForm& form) {
  Signature s;
  for (const auto& d : congruence_diagonal(form)) {
    if (d > 0) ++s.n_plus;
    else if (d < 0) ++s.n_minus;
    else ++s.n_zero;
  }
  return s;
}

}  // namespace wsym
