#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "polyclass/io.hpp"
#include "polyclass/polytope.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace polyclass;
using namespace fixtures;

TEST_CASE("hull of the unit tetrahedron") {
  Polytope p = unit_tetrahedron();
  CHECK(p.dim() == 3);
  CHECK(p.vertices().size() == 4);
  CHECK(p.facets().size() == 4);
  CHECK(p.is_simplex());
}

TEST_CASE("hull drops redundant points") {
  std::vector<Point> pts;
  for (int x : {-1, 1})
    for (int y : {-1, 1})
      for (int z : {-1, 1}) pts.push_back(Point(x, y, z));
  pts.push_back(Point(0, 0, 0));
  Polytope p = Polytope::hull(pts);
  CHECK(p.vertices().size() == 8);
  CHECK(p.facets().size() == 6);
  for (const Point& v : p.vertices()) CHECK(!(v == Point(0, 0, 0)));
}

TEST_CASE("S32 facet description") {
  Polytope p = s32();
  bool found_x = false, found_slant = false;
  for (const auto& f : p.facets()) {
    if (f.normal == Point(-1, 0, 0) && f.offset == 0) found_x = true;
    if (f.normal == Point(9, 6, 1) && f.offset == 18) found_slant = true;
  }
  CHECK(found_x);
  CHECK(found_slant);
}

TEST_CASE("hull invariants on fixtures") {
  for (const Polytope& p :
       {unit_tetrahedron(), cube(), reflexive_simplex(), octahedron(), s32(), dual_max()}) {
    // every vertex satisfies every facet, with equality on >= 3 of them
    for (const Point& v : p.vertices()) {
      int tight = 0;
      for (const auto& f : p.facets()) {
        auto d = dot(f.normal, v);
        REQUIRE(d <= f.offset);
        if (d == f.offset) ++tight;
      }
      CHECK(tight >= 3);
    }
    for (const auto& f : p.facets()) CHECK(f.normal.content() == 1);
  }
}

TEST_CASE("lattice point counts") {
  CHECK(unit_tetrahedron().lattice_points().size() == 4);
  CHECK(s32().lattice_points().size() == 55);
  CHECK(triangle_3delta2().lattice_points().size() == 10);
}

TEST_CASE("interior lattice points") {
  Polytope t = Polytope::hull({Point(0, 0, 0), Point(1, 0, 0), Point(0, 1, 0), Point(5, 5, 8)});
  auto ints = t.interior_lattice_points();
  REQUIRE(ints.size() == 2);
  CHECK(ints[0] == Point(1, 1, 1));
  CHECK(ints[1] == Point(2, 2, 3));

  CHECK(unit_tetrahedron().interior_lattice_points().empty());
  CHECK(s32().interior_lattice_points().size() == 2);
}

TEST_CASE("normalized volume") {
  CHECK(unit_tetrahedron().normalized_volume() == 1);
  CHECK(s32().normalized_volume() == 108);
  Polytope hollow = Polytope::hull({Point(0, 0), Point(5, 0), Point(0, 1)});
  CHECK(hollow.normalized_volume() == 5);
}

TEST_CASE("boundary volume") {
  CHECK(s32().boundary_volume() == 102);
  CHECK(unit_tetrahedron().boundary_volume() == 4);
  // independent facet-by-facet lattice-area oracle
  for (const Polytope& p : {reflexive_simplex(), s32(), cube(), octahedron(), dual_max()})
    CHECK(p.boundary_volume() == oracles::boundary_volume_oracle(p));
}

TEST_CASE("f-vector") {
  auto fv = unit_tetrahedron().f_vector();
  CHECK(fv.v == 4);
  CHECK(fv.e == 6);
  CHECK(fv.f == 4);
  auto fc = cube().f_vector();
  CHECK(fc.v == 8);
  CHECK(fc.e == 12);
  CHECK(fc.f == 6);
}

TEST_CASE("dual volume") {
  // reflexive: the dual is again a lattice polytope
  Polytope r = reflexive_simplex();
  Polytope dual = Polytope::hull({Point(1, 1, 1), Point(1, 1, -3), Point(1, -3, 1), Point(-3, 1, 1)});
  CHECK(r.dual_volume() == Rational(dual.normalized_volume()));

  CHECK(cube().dual_volume() == Rational(8));
  CHECK(dual_max().dual_volume() == Rational(243, 2));

  CHECK_THROWS_AS(unit_tetrahedron().dual_volume(), geometry_error);
}

TEST_CASE("counting identity: interior + boundary = total") {
  for (const Polytope& p : {unit_tetrahedron(), cube(), reflexive_simplex(), s32(), dual_max()}) {
    auto all = p.lattice_points();
    auto in = p.interior_lattice_points();
    long boundary = 0;
    for (const Point& q : all) boundary += !p.contains_strict(q);
    CHECK(long(all.size()) == long(in.size()) + boundary);
  }
}

TEST_CASE("interior counting agrees with brute force") {
  for (const Polytope& p : {unit_tetrahedron(), cube(), reflexive_simplex(), s32(), dual_max()}) {
    long brute = oracles::interior_count_brute(p);
    CHECK(long(p.interior_lattice_points().size()) == brute);
    CHECK(p.interior_count_capped(100) == brute);
  }
  CHECK(s32().interior_count_capped(1) == 2);  // capped early exit
}

TEST_CASE("Pick's theorem on random polygons") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<i64> d(-8, 8);
  int done = 0;
  while (done < 200) {
    std::vector<Point> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(Point(d(rng), d(rng)));
    Polytope p = Polytope::hull(pts);
    if (p.dim() != 2) continue;
    ++done;
    long interior = long(p.interior_lattice_points().size());
    long total = long(p.lattice_points().size());
    long boundary = total - interior;
    CHECK(p.normalized_volume() == 2 * interior + boundary - 2);
  }
}

TEST_CASE("Euler relation on random 3-polytopes") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<i64> d(-6, 6);
  int done = 0;
  while (done < 200) {
    std::vector<Point> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(Point(d(rng), d(rng), d(rng)));
    Polytope p = Polytope::hull(pts);
    if (p.dim() != 3) continue;
    ++done;
    auto fv = p.f_vector();
    CHECK(fv.v - fv.e + fv.f == 2);
  }
}

TEST_CASE("interior monotonicity under inclusion") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<i64> d(-6, 6);
  int done = 0;
  while (done < 100) {
    std::vector<Point> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(Point(d(rng), d(rng), d(rng)));
    Polytope q = Polytope::hull(pts);
    if (q.dim() != 3) continue;
    std::vector<Point> more = pts;
    for (int i = 0; i < 3; ++i) more.push_back(Point(d(rng), d(rng), d(rng)));
    Polytope p = Polytope::hull(more);
    if (p.dim() != 3) continue;
    ++done;
    auto qi = q.interior_lattice_points();
    auto pi = p.interior_lattice_points();
    for (const Point& x : qi) CHECK(std::binary_search(pi.begin(), pi.end(), x));
  }
}

TEST_CASE("low-dimensional polytopes project to their induced lattice") {
  // 3*Delta_2 embedded in the plane x+y+z = 3
  Polytope t = Polytope::hull({Point(3, 0, 0), Point(0, 3, 0), Point(0, 0, 3)});
  CHECK(t.dim() == 2);
  CHECK(t.ambient_dim() == 3);
  CHECK(t.lattice_points().size() == 10);
  CHECK(t.relative_interior_points().size() == 1);
  CHECK(t.intrinsic().normalized_volume() == 9);
  CHECK_THROWS_AS(t.interior_lattice_points(), geometry_error);
  CHECK_THROWS_AS(t.normalized_volume(), geometry_error);

  // a segment with 3 lattice points
  Polytope seg = Polytope::hull({Point(0, 0, 0), Point(2, 4, 6)});
  CHECK(seg.dim() == 1);
  CHECK(seg.lattice_points().size() == 3);
  CHECK(seg.relative_interior_points().size() == 1);
  CHECK(seg.relative_interior_points()[0] == Point(1, 2, 3));
}

TEST_CASE("hull errors") {
  CHECK_THROWS_AS(Polytope::hull({}), geometry_error);
  CHECK_THROWS_AS(Polytope::hull({Point(i64(1) << 31, 0, 0)}), overflow_error);
}

TEST_CASE("volume invariance under unimodular maps") {
  // spot-check with hand-built shears; the full 1000-map test runs in the
  // normal-form suite where the map generator lives
  Polytope p = s32();
  IntMat shear = IntMat::identity(3);
  shear(0, 1) = 3;
  shear(2, 0) = -2;
  Polytope q = p.transform(shear, Point(5, -3, 2));
  CHECK(q.normalized_volume() == 108);
  CHECK(q.lattice_points().size() == 55);
  CHECK(q.interior_lattice_points().size() == 2);
  CHECK(q.boundary_volume() == 102);
}

TEST_CASE("text format round trip") {
  auto pts = parse_vertex_line("0,0,0; 2,0,0 ;0,3,0;0,0,18  # S^3_2", 1);
  REQUIRE(pts.size() == 4);
  CHECK(pts[3] == Point(0, 0, 18));
  CHECK(format_vertices(pts) == "0,0,0;2,0,0;0,3,0;0,0,18");
  CHECK(parse_vertex_line("# just a comment", 2).empty());
  CHECK_THROWS_AS(parse_vertex_line("1,2;x,4", 3), io_error);
}
