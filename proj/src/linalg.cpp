#include "porism/linalg.hpp"

#include <stdexcept>

namespace porism {

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 operator*(const Scalar& s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }
Scalar dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

std::string to_string(const Vec3& v) {
  return "(" + v[0].str() + ", " + v[1].str() + ", " + v[2].str() + ")";
}

Mat3 Mat3::identity() { return diagonal(1, 1, 1); }

Mat3 Mat3::diagonal(const Scalar& a, const Scalar& b, const Scalar& c) {
  Mat3 m;
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

Mat3 Mat3::outer(const Vec3& u, const Vec3& v) {
  Mat3 m;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = u[r] * v[c];
  }
  return m;
}

Mat3 Mat3::from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
  return Mat3({r0[0], r0[1], r0[2], r1[0], r1[1], r1[2], r2[0], r2[1], r2[2]});
}

Mat3 Mat3::transpose() const {
  Mat3 t;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Scalar Mat3::det() const {
  const auto& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Mat3 Mat3::adjugate() const {
  const auto& m = *this;
  Mat3 a;
  a(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  a(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
  a(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  a(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
  a(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  a(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
  a(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  a(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
  a(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return a;
}

Mat3 Mat3::inverse() const {
  const Scalar d = det();
  if (d.is_zero()) throw std::domain_error("Mat3::inverse of a singular matrix");
  return d.reciprocal() * adjugate();
}

bool Mat3::is_symmetric() const {
  const auto& m = *this;
  return m(0, 1) == m(1, 0) && m(0, 2) == m(2, 0) && m(1, 2) == m(2, 1);
}

bool Mat3::is_zero() const {
  for (const auto& x : e_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (std::size_t i = 0; i < 9; ++i) r.e_[i] = a.e_[i] + b.e_[i];
  return r;
}

Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (std::size_t i = 0; i < 9; ++i) r.e_[i] = a.e_[i] - b.e_[i];
  return r;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Scalar s;
      for (std::size_t k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  }
  return r;
}

Mat3 operator*(const Scalar& s, const Mat3& m) {
  Mat3 r;
  for (std::size_t i = 0; i < 9; ++i) r.e_[i] = s * m.e_[i];
  return r;
}

Vec3 operator*(const Mat3& m, const Vec3& v) {
  return {dot(m.row(0), v), dot(m.row(1), v), dot(m.row(2), v)};
}

std::vector<Scalar> primitive(std::span<const Scalar> v) {
  mpz_class lcm_den = 1;
  bool any = false;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    any = true;
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.raw().get_den_mpz_t());
  }
  std::vector<Scalar> out(v.begin(), v.end());
  if (!any) return out;

  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  mpz_class g = 0;
  for (const auto& x : v) {
    mpq_class scaled = x.raw() * lcm_den;
    mpz_class n = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(std::move(n));
  }
  int first_sign = 0;
  for (const auto& n : ints) {
    if (sgn(n) != 0) {
      first_sign = sgn(n);
      break;
    }
  }
  if (first_sign < 0) g = -g;
  for (std::size_t i = 0; i < ints.size(); ++i) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), ints[i].get_mpz_t(), g.get_mpz_t());
    out[i] = Scalar(q);
  }
  return out;
}

Vec3 primitive(const Vec3& v) {
  const auto p = primitive(std::span<const Scalar>(v));
  return {p[0], p[1], p[2]};
}

Mat3 primitive(const Mat3& m) {
  const auto p = primitive(std::span<const Scalar>(m.entries()));
  std::array<Scalar, 9> e;
  for (std::size_t i = 0; i < 9; ++i) e[i] = p[i];
  return Mat3(e);
}

bool proportional(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) return false;
  // a_i b_j == a_j b_i for all pairs, plus matching zero pattern.
  std::size_t pivot = a.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return false;
    if (pivot == a.size() && !a[i].is_zero()) pivot = i;
  }
  if (pivot == a.size()) return true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] * b[pivot] != a[pivot] * b[i]) return false;
  }
  return true;
}

bool proportional(const Vec3& a, const Vec3& b) {
  return proportional(std::span<const Scalar>(a), std::span<const Scalar>(b));
}

bool proportional(const Mat3& a, const Mat3& b) {
  return proportional(std::span<const Scalar>(a.entries()),
                      std::span<const Scalar>(b.entries()));
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Scalar inv = rows[r][c].reciprocal();
    for (std::size_t k = c; k < cols; ++k) rows[r][k] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Scalar f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(std::vector<std::vector<Scalar>> rows, std::size_t cols) {
  return rref(rows, cols).size();
}

std::vector<std::vector<Scalar>> nullspace(std::vector<std::vector<Scalar>> rows,
                                           std::size_t cols) {
  const auto pivots = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    basis.push_back(primitive(std::span<const Scalar>(v)));
  }
  return basis;
}

std::vector<Vec3> nullspace(const Mat3& m) {
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t r = 0; r < 3; ++r) {
    const auto row = m.row(r);
    rows.emplace_back(row.begin(), row.end());
  }
  std::vector<Vec3> out;
  for (const auto& v : nullspace(std::move(rows), 3)) out.push_back({v[0], v[1], v[2]});
  return out;
}

}  // namespace porism
