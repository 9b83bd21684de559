#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>

namespace wronskia {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline double norm_inf(const Vec3& a) {
  return std::max({std::abs(a.x), std::abs(a.y), std::abs(a.z)});
}

/// Determinant of the 3x3 matrix with rows r0, r1, r2, by cofactor expansion.
/// Single kernel shared by every determinant call site so that identical
/// inputs give bitwise identical results.
inline double det3(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
  return r0.x * (r1.y * r2.z - r1.z * r2.y) -
         r0.y * (r1.x * r2.z - r1.z * r2.x) +
         r0.z * (r1.x * r2.y - r1.y * r2.x);
}

/// Row-major 3x3 matrix.
struct Mat3 {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  static Mat3 identity() { return Mat3{}; }

  double operator()(int r, int c) const { return m[static_cast<size_t>(3 * r + c)]; }
  double& operator()(int r, int c) { return m[static_cast<size_t>(3 * r + c)]; }

  Vec3 row(int r) const { return {(*this)(r, 0), (*this)(r, 1), (*this)(r, 2)}; }

  Vec3 operator*(const Vec3& v) const {
    return {dot(row(0), v), dot(row(1), v), dot(row(2), v)};
  }

  double det() const { return det3(row(0), row(1), row(2)); }
};

/// Solves A v = b for a 3x3 system via Cramer's rule. Caller guarantees
/// det(A) is safely nonzero.
inline Vec3 solve3(const Mat3& A, const Vec3& b) {
  const double d = A.det();
  Mat3 ax = A, ay = A, az = A;
  for (int r = 0; r < 3; ++r) {
    ax(r, 0) = b[r];
    ay(r, 1) = b[r];
    az(r, 2) = b[r];
  }
  return {ax.det() / d, ay.det() / d, az.det() / d};
}

/// Order-independent summation: always reduces over the same binary tree,
/// so the result does not depend on how the inputs were produced.
inline double pairwise_sum(std::span<const double> xs) {
  const size_t n = xs.size();
  if (n <= 8) {
    double s = 0.0;
    for (double v : xs) s += v;
    return s;
  }
  const size_t half = n / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

inline double pairwise_mean(std::span<const double> xs) {
  return xs.empty() ? 0.0 : pairwise_sum(xs) / static_cast<double>(xs.size());
}

}  // namespace wronskia
