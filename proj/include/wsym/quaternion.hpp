#pragma once

#include <wsym/rational.hpp>

#include <array>

namespace wsym {

/// q = w + x i + y j + z k over Q, with i j = k, j k = i, k i = j.
struct Quaternion {
  Rational w, x, y, z;

  static Quaternion real(const Rational& r) { return {r, 0, 0, 0}; }
  static Quaternion imag(const Rational& x, const Rational& y, const Rational& z) { return {0, x, y, z}; }
  static Quaternion unit(int index) {
    Quaternion q{0, 0, 0, 0};
    (index == 0 ? q.w : index == 1 ? q.x : index == 2 ? q.y : q.z) = 1;
    return q;
  }

  Quaternion conj() const { return {w, -x, -y, -z}; }
  Rational norm2() const { return w * w + x * x + y * y + z * z; }
  Quaternion inverse() const {
    const Rational n = norm2();
    return {w / n, -x / n, -y / n, -z / n};
  }
  std::array<Rational, 4> coords() const { return {w, x, y, z}; }
  bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) { return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) { return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Quaternion operator*(const Rational& c, const Quaternion& a) { return {c * a.w, c * a.x, c * a.y, c * a.z}; }
  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

/// 4x4 real matrix of h -> q h on H = R^4 (basis 1, i, j, k).
inline Matrix left_multiplication(const Quaternion& q) {
  Matrix m(4, 4);
  for (int c = 0; c < 4; ++c) {
    auto col = (q * Quaternion::unit(c)).coords();
    for (int r = 0; r < 4; ++r) m(r, c) = col[r];
  }
  return m;
}

/// Complex n x n matrix as a real 2n x 2n matrix on (x_1, y_1, ..., x_n, y_n).
inline Matrix realify_complex(const Matrix& re, const Matrix& im) {
  const std::size_t n = re.rows();
  Matrix r(2 * n, 2 * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      r(2 * a, 2 * b) = re(a, b);
      r(2 * a, 2 * b + 1) = -im(a, b);
      r(2 * a + 1, 2 * b) = im(a, b);
      r(2 * a + 1, 2 * b + 1) = re(a, b);
    }
  return r;
}

/// Quaternionic n x n matrix (acting on the left of column vectors) as a real 4n x 4n matrix.
inline Matrix realify_quaternion(const std::vector<std::vector<Quaternion>>& q) {
  const std::size_t n = q.size();
  Matrix r(4 * n, 4 * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (q[a][b].is_zero()) continue;
      Matrix block = left_multiplication(q[a][b]);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r(4 * a + i, 4 * b + j) = block(i, j);
    }
  return r;
}

}  // namespace wsym
