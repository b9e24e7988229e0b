#pragma once

// Small exact integer matrices: determinants, Hermite normal form,
// unimodular completions. Sizes stay tiny (rows <= 4, any column count),
// so the algorithms favour clarity over asymptotics.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "polyclass/common.hpp"
#include "polyclass/point.hpp"

namespace polyclass {

using bigint = boost::multiprecision::cpp_int;

struct IntMat {
  int rows = 0, cols = 0;
  std::vector<i64> a;  // row-major

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static IntMat from_rows(const std::vector<Point>& pts) {
    IntMat m(int(pts.size()), pts.empty() ? 0 : pts[0].dim);
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) m(i, j) = pts[size_t(i)][j];
    return m;
  }
  static IntMat from_cols(const std::vector<Point>& pts) {
    IntMat m(pts.empty() ? 0 : pts[0].dim, int(pts.size()));
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) m(i, j) = pts[size_t(j)][i];
    return m;
  }

  i64 operator()(int i, int j) const { return a[size_t(i) * cols + j]; }
  i64& operator()(int i, int j) { return a[size_t(i) * cols + j]; }

  bool operator==(const IntMat&) const = default;

  Point col(int j) const {
    Point p = Point::zero(rows);
    for (int i = 0; i < rows; ++i) p[i] = (*this)(i, j);
    return p;
  }
  Point row(int i) const {
    Point p = Point::zero(cols);
    for (int j = 0; j < cols; ++j) p[j] = (*this)(i, j);
    return p;
  }

  void swap_rows(int i, int j) {
    for (int k = 0; k < cols; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void negate_row(int i) {
    for (int k = 0; k < cols; ++k) (*this)(i, k) = checked_neg((*this)(i, k));
  }
  // row i -= q * row j
  void submul_row(int i, int j, i64 q) {
    for (int k = 0; k < cols; ++k)
      (*this)(i, k) = checked_sub((*this)(i, k), checked_mul(q, (*this)(j, k)));
  }
};

inline IntMat operator*(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows) throw geometry_error("matrix shape mismatch");
  IntMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      i64 v = x(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        r(i, j) = checked_add(r(i, j), checked_mul(v, y(k, j)));
    }
  return r;
}

inline Point operator*(const IntMat& m, const Point& p) {
  if (m.cols != p.dim) throw geometry_error("matrix/point shape mismatch");
  Point r = Point::zero(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    i64 s = 0;
    for (int j = 0; j < m.cols; ++j) s = checked_add(s, checked_mul(m(i, j), p[j]));
    r[i] = s;
  }
  return r;
}

/// Exact determinant of a square matrix (cofactor expansion in big integers;
/// matrices here are at most 4x4).
inline bigint determinant(const IntMat& m) {
  if (m.rows != m.cols) throw geometry_error("determinant of non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  std::vector<bigint> b(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[size_t(i) * n + j] = m(i, j);

  // fraction-free Gaussian elimination (Bareiss)
  bigint prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (b[size_t(k) * n + k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (b[size_t(i) * n + k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(b[size_t(k) * n + j], b[size_t(piv) * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        bigint t = b[size_t(i) * n + j] * b[size_t(k) * n + k] -
                   b[size_t(i) * n + k] * b[size_t(k) * n + j];
        b[size_t(i) * n + j] = t / prev;
      }
    prev = b[size_t(k) * n + k];
  }
  return sign * b[size_t(n - 1) * n + (n - 1)];
}

// Signed determinant of three 3-d points as rows; exact in 128 bits.
inline i128 det3(const Point& a, const Point& b, const Point& c) {
  return i128(a[0]) * (i128(b[1]) * c[2] - i128(b[2]) * c[1]) -
         i128(a[1]) * (i128(b[0]) * c[2] - i128(b[2]) * c[0]) +
         i128(a[2]) * (i128(b[0]) * c[1] - i128(b[1]) * c[0]);
}

struct HnfResult {
  IntMat h;  // h = u * m
  IntMat u;  // unimodular
  int rank = 0;
};

/// Left Hermite normal form: h = u*m with u unimodular, h in row-style HNF
/// (pivots positive, entries above a pivot reduced into [0, pivot)). For a
/// nonsingular square input this is the classic upper-triangular form with
/// positive diagonal and off-diagonal entries reduced modulo the diagonal
/// entry of their column.
inline HnfResult hermite_normal_form_any(const IntMat& m) {
  HnfResult res{m, IntMat::identity(m.rows), 0};
  IntMat& h = res.h;
  IntMat& u = res.u;
  int r = 0;
  for (int j = 0; j < h.cols && r < h.rows; ++j) {
    // clear column j below row r with euclidean row operations
    while (true) {
      int piv = -1;
      for (int i = r; i < h.rows; ++i)
        if (h(i, j) != 0 && (piv < 0 || std::abs(h(i, j)) < std::abs(h(piv, j)))) piv = i;
      if (piv < 0) break;
      if (piv != r) {
        h.swap_rows(r, piv);
        u.swap_rows(r, piv);
      }
      bool done = true;
      for (int i = r + 1; i < h.rows; ++i) {
        if (h(i, j) == 0) continue;
        i64 q = h(i, j) / h(r, j);
        h.submul_row(i, r, q);
        u.submul_row(i, r, q);
        if (h(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, j) == 0) continue;
    if (h(r, j) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (int i = 0; i < r; ++i) {
      i64 q = floor_div(h(i, j), h(r, j));
      if (q != 0) {
        h.submul_row(i, r, q);
        u.submul_row(i, r, q);
      }
    }
    ++r;
  }
  res.rank = r;
  return res;
}

/// Spec'd entry point: requires full column rank (nonsingular when square).
inline HnfResult hermite_normal_form(const IntMat& m) {
  HnfResult res = hermite_normal_form_any(m);
  if (res.rank < m.cols) throw geometry_error("hermite_normal_form: rank-deficient input");
  return res;
}

/// Inverse of a unimodular integer matrix.
inline IntMat unimodular_inverse(const IntMat& m) {
  if (m.rows != m.cols) throw geometry_error("inverse of non-square matrix");
  int n = m.rows;
  bigint det = determinant(m);
  if (det != 1 && det != -1) throw geometry_error("matrix is not unimodular");
  int s = (det == 1) ? 1 : -1;
  IntMat inv(n, n);
  // adjugate / det for n <= 3
  if (n == 1) {
    inv(0, 0) = s;
  } else if (n == 2) {
    inv(0, 0) = s * m(1, 1);
    inv(0, 1) = -s * m(0, 1);
    inv(1, 0) = -s * m(1, 0);
    inv(1, 1) = s * m(0, 0);
  } else if (n == 3) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        i64 cof = checked_sub(checked_mul(m(r0, c0), m(r1, c1)),
                              checked_mul(m(r0, c1), m(r1, c0)));
        inv(j, i) = s * cof;  // transpose for adjugate
      }
  } else {
    throw geometry_error("unimodular_inverse: unsupported size");
  }
  return inv;
}

/// A unimodular matrix u with u * v = e1, for primitive v.
inline IntMat map_primitive_to_e1(const Point& v) {
  IntMat m(v.dim, 1);
  for (int i = 0; i < v.dim; ++i) m(i, 0) = v[i];
  HnfResult r = hermite_normal_form(m);
  // h = u*v must be (g,0,..)^T with g = content(v) = 1
  if (r.h(0, 0) != 1) throw geometry_error("map_primitive_to_e1: vector not primitive");
  return r.u;
}

/// Lattice basis of the plane { x in Z^3 : <n, x> = 0 } for primitive n,
/// together with a point at lattice height 1. Returns matrix B (3x3) whose
/// columns are (w, b1, b2) with <n,w> = 1 and <n,bi> = 0; B is unimodular,
/// so (alpha, beta, gamma) = B^{-1} x gives intrinsic plane coordinates
/// (beta, gamma) for any x with alpha = <n, x>.
inline IntMat plane_frame(const Point& n) {
  // u * n = e1  =>  columns of u^T: <n, u^T e_j> = (u n)^T e_j = delta_1j
  IntMat u = map_primitive_to_e1(n);
  IntMat b(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b(i, j) = u(j, i);
  return b;
}

}  // namespace polyclass
