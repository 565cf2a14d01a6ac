#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace wsym::expdemo {

using RealMatrix = Eigen::MatrixXd;

/// Decision tolerance for eigenvalue sign, reality and separation tests.
inline constexpr double kTolerance = 1e-9;

enum class ExpImage { yes, no, unknown };

inline const char* to_string(ExpImage v) {
  switch (v) {
    case ExpImage::yes: return "yes";
    case ExpImage::no: return "no";
    case ExpImage::unknown: return "unknown";
  }
  return "unknown";
}

inline void require_finite(const RealMatrix& x) {
  if (!x.allFinite()) throw std::invalid_argument("matrix has non-finite entries");
}

/*
 * Scaling and squaring: X / 2^s has 1-norm at most 1/2, the Taylor series
 * is summed to machine precision, then squared s times. exp(0) = I exactly.
 */
inline RealMatrix matrix_exp(const RealMatrix& x) {
  require_finite(x);
  if (x.rows() != x.cols()) throw std::invalid_argument("matrix_exp: matrix must be square");
  const Eigen::Index n = x.rows();
  const double norm = x.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const RealMatrix a = x / std::ldexp(1.0, squarings);

  RealMatrix result = RealMatrix::Identity(n, n);
  RealMatrix term = RealMatrix::Identity(n, n);
  for (int k = 1; k <= 30; ++k) {
    term = term * a / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() <= 1e-18 * result.cwiseAbs().maxCoeff()) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

/*
 * Membership of g in exp(sl(n,R)) for spectra with distinct eigenvalues:
 * a negative real eigenvalue is then a single Jordan block of odd
 * multiplicity, which admits no real logarithm. Clustered spectra are
 * reported as unknown.
 */
inline ExpImage in_exp_image(const RealMatrix& g, bool det_one) {
  require_finite(g);
  if (g.rows() != g.cols() || g.rows() == 0) throw std::invalid_argument("in_exp_image: matrix must be square");
  const double det = g.determinant();
  if (std::abs(det) <= kTolerance) throw std::invalid_argument("in_exp_image: matrix is not invertible");
  if (det_one && std::abs(det - 1.0) > kTolerance) throw std::invalid_argument("in_exp_image: determinant is not 1");

  Eigen::EigenSolver<RealMatrix> solver(g, false);
  if (solver.info() != Eigen::Success) return ExpImage::unknown;
  const auto ev = solver.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    for (Eigen::Index j = i + 1; j < ev.size(); ++j)
      if (std::abs(ev[i] - ev[j]) <= kTolerance * scale) return ExpImage::unknown;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (std::abs(ev[i].imag()) <= kTolerance * scale && ev[i].real() < -kTolerance * scale) return ExpImage::no;
  return ExpImage::yes;
}

inline std::vector<std::complex<double>> eigenvalues(const RealMatrix& g) {
  Eigen::EigenSolver<RealMatrix> solver(g, false);
  const auto ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace wsym::expdemo
