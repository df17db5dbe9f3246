#pragma once

// Fixed-size 3x3 matrices and 3-vectors. Integer instantiations use
// overflow-checked arithmetic so exact products fail loudly instead of
// wrapping.

#include <array>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <type_traits>

namespace rsac {

namespace detail {

template <typename T>
constexpr T checked_add(T a, T b) {
  if constexpr (std::is_integral_v<T>) {
    T out{};
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer matrix overflow");
    return out;
  } else {
    return a + b;
  }
}

template <typename T>
constexpr T checked_mul(T a, T b) {
  if constexpr (std::is_integral_v<T>) {
    T out{};
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer matrix overflow");
    return out;
  } else {
    return a * b;
  }
}

}  // namespace detail

template <typename T>
struct Vec3 {
  std::array<T, 3> v{};

  constexpr T& operator[](std::size_t i) { return v[i]; }
  constexpr const T& operator[](std::size_t i) const { return v[i]; }

  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;

  constexpr Vec3 operator-() const { return {{-v[0], -v[1], -v[2]}}; }
  constexpr Vec3 operator+(const Vec3& o) const { return {{v[0] + o[0], v[1] + o[1], v[2] + o[2]}}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {{v[0] - o[0], v[1] - o[1], v[2] - o[2]}}; }
  constexpr Vec3 operator*(T s) const { return {{v[0] * s, v[1] * s, v[2] * s}}; }
  constexpr Vec3 operator/(T s) const { return {{v[0] / s, v[1] / s, v[2] / s}}; }
};

template <typename T>
struct Mat3 {
  std::array<std::array<T, 3>, 3> a{};

  static constexpr Mat3 identity() {
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i) m.a[i][i] = T{1};
    return m;
  }

  constexpr T& operator()(std::size_t r, std::size_t c) { return a[r][c]; }
  constexpr const T& operator()(std::size_t r, std::size_t c) const { return a[r][c]; }

  friend constexpr bool operator==(const Mat3&, const Mat3&) = default;

  constexpr Mat3 operator*(const Mat3& o) const {
    Mat3 out;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        T acc{};
        for (std::size_t k = 0; k < 3; ++k)
          acc = detail::checked_add(acc, detail::checked_mul(a[i][k], o.a[k][j]));
        out.a[i][j] = acc;
      }
    return out;
  }

  constexpr Vec3<T> operator*(const Vec3<T>& x) const {
    Vec3<T> out;
    for (std::size_t i = 0; i < 3; ++i) {
      T acc{};
      for (std::size_t k = 0; k < 3; ++k)
        acc = detail::checked_add(acc, detail::checked_mul(a[i][k], x[k]));
      out[i] = acc;
    }
    return out;
  }

  constexpr Mat3 operator*(T s) const {
    Mat3 out;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) out.a[i][j] = detail::checked_mul(a[i][j], s);
    return out;
  }

  constexpr Mat3 operator+(const Mat3& o) const {
    Mat3 out;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) out.a[i][j] = detail::checked_add(a[i][j], o.a[i][j]);
    return out;
  }

  constexpr Mat3 operator-(const Mat3& o) const { return *this + o * T{-1}; }

  constexpr Mat3 transposed() const {
    Mat3 out;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) out.a[i][j] = a[j][i];
    return out;
  }

  constexpr T trace() const { return a[0][0] + a[1][1] + a[2][2]; }

  constexpr T determinant() const {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  }

  // Sum of the principal 2x2 minors.
  constexpr T minor_sum() const {
    return a[0][0] * a[1][1] - a[0][1] * a[1][0] + a[0][0] * a[2][2] - a[0][2] * a[2][0] +
           a[1][1] * a[2][2] - a[1][2] * a[2][1];
  }

  template <typename U>
  constexpr Mat3<U> cast() const {
    Mat3<U> out;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) out.a[i][j] = static_cast<U>(a[i][j]);
    return out;
  }
};

using IntMat3 = Mat3<std::int64_t>;
using IntVec3 = Vec3<std::int64_t>;
using RealMat3 = Mat3<double>;
using RealVec3 = Vec3<double>;

template <typename T>
constexpr Mat3<T> power(Mat3<T> base, unsigned exponent) {
  Mat3<T> out = Mat3<T>::identity();
  while (exponent > 0) {
    if (exponent & 1u) out = out * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return out;
}

inline double dot(const RealVec3& x, const RealVec3& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

inline RealVec3 cross(const RealVec3& x, const RealVec3& y) {
  return {{x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]}};
}

inline double norm(const RealVec3& x) { return std::sqrt(dot(x, x)); }

inline RealVec3 to_real(const IntVec3& x) {
  return {{static_cast<double>(x[0]), static_cast<double>(x[1]), static_cast<double>(x[2])}};
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Vec3<T>& x) {
  return os << '(' << x[0] << ", " << x[1] << ", " << x[2] << ')';
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Mat3<T>& m) {
  os << '[';
  for (std::size_t i = 0; i < 3; ++i) {
    os << (i ? "; " : "") << m(i, 0) << ' ' << m(i, 1) << ' ' << m(i, 2);
  }
  return os << ']';
}

// The recurrence matrices.
inline constexpr IntMat3 kM{{{{0, 1, 2}, {0, -1, 2}, {1, 0, 0}}}};
inline constexpr IntMat3 kA{{{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}}};
inline constexpr IntMat3 kB{{{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}}};
// Reversal permutation; S MA S and S MB S are the same family in another basis.
inline constexpr IntMat3 kS{{{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}}};

inline constexpr IntMat3 kMA = kM * kA;
inline constexpr IntMat3 kMB = kM * kB;
inline constexpr IntMat3 kAM = kA * kM;

// Initial vector of the matrix recurrence.
inline constexpr IntVec3 kSeedVector{{1, -1, 1}};

}  // namespace rsac
