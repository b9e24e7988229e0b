#pragma once

// Lattice points of dimension 1..3 with exact checked arithmetic.

#include <array>
#include <compare>
#include <functional>
#include <initializer_list>
#include <ostream>

#include "polyclass/common.hpp"

namespace polyclass {

struct Point {
  std::array<i64, 3> c{0, 0, 0};
  int dim = 3;

  Point() = default;
  Point(i64 x, i64 y) : c{x, y, 0}, dim(2) {}
  Point(i64 x, i64 y, i64 z) : c{x, y, z}, dim(3) {}
  static Point zero(int d) {
    Point p;
    p.dim = d;
    return p;
  }
  static Point of_dim(int d, std::initializer_list<i64> v) {
    Point p;
    p.dim = d;
    int i = 0;
    for (i64 x : v) p.c[i++] = x;
    return p;
  }

  i64 operator[](int i) const { return c[i]; }
  i64& operator[](int i) { return c[i]; }

  bool operator==(const Point& o) const { return dim == o.dim && c == o.c; }
  // Lexicographic; the tie-break order used everywhere keys or fans need one.
  auto operator<=>(const Point& o) const {
    for (int i = 0; i < dim; ++i)
      if (c[i] != o.c[i]) return c[i] <=> o.c[i];
    return dim <=> o.dim;
  }

  Point operator+(const Point& o) const {
    Point r = *this;
    for (int i = 0; i < dim; ++i) r.c[i] = checked_add(c[i], o.c[i]);
    return r;
  }
  Point operator-(const Point& o) const {
    Point r = *this;
    for (int i = 0; i < dim; ++i) r.c[i] = checked_sub(c[i], o.c[i]);
    return r;
  }
  Point operator-() const {
    Point r = *this;
    for (int i = 0; i < dim; ++i) r.c[i] = checked_neg(c[i]);
    return r;
  }
  Point operator*(i64 k) const {
    Point r = *this;
    for (int i = 0; i < dim; ++i) r.c[i] = checked_mul(c[i], k);
    return r;
  }

  bool is_zero() const {
    for (int i = 0; i < dim; ++i)
      if (c[i] != 0) return false;
    return true;
  }

  i64 content() const {
    i64 g = 0;
    for (int i = 0; i < dim; ++i) g = gcd_i64(g, c[i]);
    return g;
  }
};

inline i128 dot(const Point& a, const Point& b) {
  i128 s = 0;
  for (int i = 0; i < a.dim; ++i) s += i128(a.c[i]) * b.c[i];
  return s;
}

// dot() narrowed to i64; throws if the exact value does not fit.
inline i64 dot64(const Point& a, const Point& b) {
  i128 s = dot(a, b);
  if (s > INT64_MAX || s < INT64_MIN) throw overflow_error("dot product overflow");
  return i64(s);
}

inline i128 cross2(const Point& a, const Point& b) {
  return i128(a[0]) * b[1] - i128(a[1]) * b[0];
}

inline Point cross3(const Point& a, const Point& b) {
  Point r;
  r.dim = 3;
  r[0] = checked_sub(checked_mul(a[1], b[2]), checked_mul(a[2], b[1]));
  r[1] = checked_sub(checked_mul(a[2], b[0]), checked_mul(a[0], b[2]));
  r[2] = checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]));
  return r;
}

// v / gcd(v); the direction of v as a primitive lattice vector.
inline Point primitive(const Point& v) {
  if (v.is_zero()) throw geometry_error("primitive() of zero vector");
  i64 g = v.content();
  Point r = v;
  for (int i = 0; i < v.dim; ++i) r.c[i] /= g;
  return r;
}

inline std::ostream& operator<<(std::ostream& os, const Point& p) {
  os << '(';
  for (int i = 0; i < p.dim; ++i) os << (i ? "," : "") << p.c[i];
  return os << ')';
}

struct PointHash {
  size_t operator()(const Point& p) const {
    u64 h = fnv1a(&p.c, sizeof(p.c));
    return size_t(h ^ u64(p.dim));
  }
};

}  // namespace polyclass
