#pragma once

// Named polytopes used across the test suites.

#include <vector>

#include "polyclass/polytope.hpp"

namespace fixtures {

using polyclass::Point;
using polyclass::Polytope;

inline Polytope unit_tetrahedron() {
  return Polytope::hull({Point(0, 0, 0), Point(1, 0, 0), Point(0, 1, 0), Point(0, 0, 1)});
}

inline Polytope cube() {
  std::vector<Point> pts;
  for (int x : {-1, 1})
    for (int y : {-1, 1})
      for (int z : {-1, 1}) pts.push_back(Point(x, y, z));
  return Polytope::hull(pts);
}

inline Polytope reflexive_simplex() {
  return Polytope::hull({Point(-1, -1, -1), Point(1, 0, 0), Point(0, 1, 0), Point(0, 0, 1)});
}

inline Polytope octahedron() {
  return Polytope::hull({Point(1, 0, 0), Point(-1, 0, 0), Point(0, 1, 0), Point(0, -1, 0),
                         Point(0, 0, 1), Point(0, 0, -1)});
}

// conv{0, 2e1, 3e2, 18e3}: the unique volume maximiser among 2-point
// 3-polytopes.
inline Polytope s32() {
  return Polytope::hull({Point(0, 0, 0), Point(2, 0, 0), Point(0, 3, 0), Point(0, 0, 18)});
}

inline Polytope s31() {
  return Polytope::hull({Point(0, 0, 0), Point(2, 0, 0), Point(0, 3, 0), Point(0, 0, 12)});
}

// conv{-1,-1,-1; e1; e2; m*e3} has delta-vector (1,m,m,m).
inline Polytope sharp_simplex(polyclass::i64 m) {
  return Polytope::hull({Point(-1, -1, -1), Point(1, 0, 0), Point(0, 1, 0), Point(0, 0, m)});
}

// the dual-volume maximiser of the 2-point classification
inline Polytope dual_max() {
  return Polytope::hull({Point(-1, -1, -1), Point(0, -1, -1), Point(-1, 0, -1), Point(7, 7, 8)});
}

inline Polytope triangle_3delta2() {
  return Polytope::hull({Point(0, 0), Point(3, 0), Point(0, 3)});
}

// Table 2: the five minimal 2-point tetrahedra.
inline std::vector<Polytope> minimal_2pt_tetrahedra() {
  return {
      Polytope::hull({Point(0, 0, 0), Point(1, 0, 0), Point(0, 1, 0), Point(5, 5, 8)}),
      Polytope::hull({Point(0, 0, 0), Point(1, 0, 0), Point(0, 1, 0), Point(6, 9, 10)}),
      Polytope::hull({Point(0, 0, 0), Point(1, 0, 0), Point(0, 1, 0), Point(5, 7, 24)}),
      Polytope::hull({Point(0, 0, 0), Point(1, 0, 0), Point(0, 2, 0), Point(5, 2, 6)}),
      Polytope::hull({Point(0, 0, 0), Point(1, 0, 0), Point(0, 2, 0), Point(5, 2, 12)}),
  };
}

// interior point pairs of the Table 2 tetrahedra, in the same order
inline std::vector<std::pair<Point, Point>> minimal_2pt_interiors() {
  return {
      {Point(1, 1, 1), Point(2, 2, 3)}, {Point(1, 1, 1), Point(2, 3, 3)},
      {Point(1, 1, 3), Point(2, 3, 9)}, {Point(1, 1, 1), Point(2, 1, 2)},
      {Point(1, 1, 2), Point(2, 1, 4)},
  };
}

}  // namespace fixtures
