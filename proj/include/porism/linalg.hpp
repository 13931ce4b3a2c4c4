#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "porism/scalar.hpp"

namespace porism {

using Vec3 = std::array<Scalar, 3>;

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(const Scalar& s, const Vec3& v);
Scalar dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& v);
std::string to_string(const Vec3& v);

/// Dense row-major 3x3 matrix over Scalar.
class Mat3 {
 public:
  Mat3() = default;
  explicit Mat3(const std::array<Scalar, 9>& entries) : e_(entries) {}

  static Mat3 identity();
  static Mat3 diagonal(const Scalar& a, const Scalar& b, const Scalar& c);
  static Mat3 outer(const Vec3& u, const Vec3& v);
  static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2);

  const Scalar& operator()(std::size_t r, std::size_t c) const { return e_[3 * r + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return e_[3 * r + c]; }
  const std::array<Scalar, 9>& entries() const { return e_; }

  Vec3 row(std::size_t r) const { return {e_[3 * r], e_[3 * r + 1], e_[3 * r + 2]}; }
  Vec3 col(std::size_t c) const { return {e_[c], e_[3 + c], e_[6 + c]}; }

  Mat3 transpose() const;
  Scalar det() const;
  Scalar trace() const { return e_[0] + e_[4] + e_[8]; }
  /// Adjugate; A * adj(A) = det(A) I. Used in place of the inverse wherever
  /// only the projective class matters.
  Mat3 adjugate() const;
  Mat3 inverse() const;
  bool is_symmetric() const;
  bool is_zero() const;

  friend Mat3 operator+(const Mat3& a, const Mat3& b);
  friend Mat3 operator-(const Mat3& a, const Mat3& b);
  friend Mat3 operator*(const Mat3& a, const Mat3& b);
  friend Mat3 operator*(const Scalar& s, const Mat3& m);
  friend Vec3 operator*(const Mat3& m, const Vec3& v);
  friend bool operator==(const Mat3& a, const Mat3& b) = default;

 private:
  std::array<Scalar, 9> e_{};
};

/// Scales a nonzero vector of rationals to the primitive integer vector with
/// its first nonzero entry positive. Returns the input unchanged if all zero.
std::vector<Scalar> primitive(std::span<const Scalar> v);
Vec3 primitive(const Vec3& v);
Mat3 primitive(const Mat3& m);

/// True iff a = s * b for some nonzero s (both assumed nonzero).
bool proportional(std::span<const Scalar> a, std::span<const Scalar> b);
bool proportional(const Vec3& a, const Vec3& b);
bool proportional(const Mat3& a, const Mat3& b);

/// Rank of an arbitrary rows x cols matrix by exact elimination.
std::size_t rank(std::vector<std::vector<Scalar>> rows, std::size_t cols);

/// Basis of the right null space of a rows x cols matrix, exact.
std::vector<std::vector<Scalar>> nullspace(std::vector<std::vector<Scalar>> rows,
                                           std::size_t cols);

/// Null space of a 3x3 matrix as Vec3 basis vectors.
std::vector<Vec3> nullspace(const Mat3& m);

}  // namespace porism
