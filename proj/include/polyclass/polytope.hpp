#pragma once

// Exact convex geometry for lattice polytopes of dimension <= 3.
//
// Hulls are built incrementally with exact integer orientation predicates
// (no floating point anywhere). Polytopes of lower dimension than their
// ambient space carry a lattice-preserving projection onto Z^dim and a
// full-dimensional intrinsic copy, so counting and volume are always
// measured in the induced lattice.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "polyclass/common.hpp"
#include "polyclass/matrix.hpp"
#include "polyclass/point.hpp"
#include "polyclass/rational.hpp"

namespace polyclass {

// Coordinates are capped so that 3x3 difference determinants stay well
// inside 128 bits.
inline constexpr i64 kCoordLimit = i64(1) << 30;

struct Facet {
  Point normal;  // primitive, outward
  i64 offset;    // P = { x : <normal, x> <= offset }
  std::vector<int> cycle;  // vertex indices, boundary cycle (3-d facets only)
};

namespace detail {

// orientation of d against plane through a,b,c (positive = same side as
// cross(b-a, c-a))
inline i128 orient3(const Point& a, const Point& b, const Point& c, const Point& d) {
  return det3(b - a, c - a, d - a);
}

inline bool collinear(const Point& a, const Point& b, const Point& c) {
  if (a.dim == 2) return cross2(b - a, c - a) == 0;
  Point u = b - a, v = c - a;
  return (i128(u[1]) * v[2] - i128(u[2]) * v[1]) == 0 &&
         (i128(u[2]) * v[0] - i128(u[0]) * v[2]) == 0 &&
         (i128(u[0]) * v[1] - i128(u[1]) * v[0]) == 0;
}

// Monotone chain, returns hull vertices in counter-clockwise order.
inline std::vector<Point> hull2d(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<Point> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {  // lower
    while (k >= 2 && cross2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
    while (k >= t && cross2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

struct Tri {
  int a, b, c;
  Point n;     // primitive outward normal
  i64 off;
  bool alive = true;
};

}  // namespace detail

class Polytope {
 public:
  /// Convex hull of a non-empty set of lattice points (all of the same
  /// ambient dimension). Handles every intrinsic dimension 0..ambient.
  static Polytope hull(std::vector<Point> pts) {
    if (pts.empty()) throw geometry_error("convex hull of empty point set");
    int ambient = pts[0].dim;
    for (const Point& p : pts) {
      if (p.dim != ambient) throw geometry_error("mixed dimensions in hull input");
      for (int i = 0; i < ambient; ++i)
        if (p[i] > kCoordLimit || p[i] < -kCoordLimit)
          throw overflow_error("coordinate exceeds exactness guard");
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Polytope p;
    p.ambient_ = ambient;
    int d = affine_dim(pts);
    p.dim_ = d;
    if (d == ambient) {
      p.build_full_dim(std::move(pts));
    } else {
      p.build_low_dim(std::move(pts));
    }
    return p;
  }

  int dim() const { return dim_; }
  int ambient_dim() const { return ambient_; }
  bool full_dim() const { return dim_ == ambient_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const {
    require_full("facets");
    return facets_;
  }
  const Polytope& intrinsic() const {
    if (full_dim()) return *this;
    return *intrinsic_;
  }

  bool is_simplex() const { return int(vertices_.size()) == dim_ + 1; }
  bool is_simplicial() const {
    require_full("is_simplicial");
    if (dim_ < 3) return true;
    for (const Facet& f : facets_)
      if (f.cycle.size() != 3) return false;
    return true;
  }

  /// Membership (closed polytope).
  bool contains(const Point& x) const {
    if (dim_ == 0) return x == vertices_[0];
    if (full_dim()) {
      for (const Facet& f : facets_)
        if (dot(f.normal, x) > f.offset) return false;
      return true;
    }
    auto y = try_project(x);
    return y && intrinsic_->contains(*y);
  }

  bool contains_strict(const Point& x) const {
    require_full("contains_strict");
    if (dim_ == 0) return false;
    for (const Facet& f : facets_)
      if (dot(f.normal, x) >= f.offset) return false;
    return true;
  }

  /// All lattice points of the polytope, sorted lexicographically.
  std::vector<Point> lattice_points() const {
    if (!full_dim()) {
      std::vector<Point> out;
      if (dim_ == 0) return {vertices_[0]};
      for (const Point& y : intrinsic_->lattice_points()) out.push_back(lift(y));
      std::sort(out.begin(), out.end());
      return out;
    }
    std::vector<Point> out;
    scan(false, [&](const Point& q) {
      out.push_back(q);
      return true;
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Lattice points in the strict interior; requires a full-dimensional
  /// polytope (use relative_interior_points for lower dimensions).
  std::vector<Point> interior_lattice_points() const {
    if (!full_dim())
      throw geometry_error("interior of a low-dimensional polytope; project first");
    std::vector<Point> out;
    if (dim_ == 0) return out;
    scan(true, [&](const Point& q) {
      out.push_back(q);
      return true;
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Lattice points in the relative interior (any dimension).
  std::vector<Point> relative_interior_points() const {
    if (dim_ == 0) return {vertices_[0]};
    if (full_dim()) return interior_lattice_points();
    std::vector<Point> out;
    for (const Point& y : intrinsic_->interior_lattice_points()) out.push_back(lift(y));
    std::sort(out.begin(), out.end());
    return out;
  }

  /// |interior points| if it does not exceed `cap`, otherwise cap+1.
  /// The early exit keeps candidate filtering in the growth engine cheap.
  long interior_count_capped(long cap) const {
    require_full("interior_count_capped");
    if (dim_ == 0) return 0;
    long count = 0;
    scan(true, [&](const Point&) {
      ++count;
      return count <= cap;
    });
    return count;
  }

  /// Normalized volume dim! * vol, an integer for lattice polytopes.
  i64 normalized_volume() const {
    require_full("normalized_volume");
    if (dim_ == 0) throw geometry_error("volume of a point");
    const Point& v0 = vertices_[0];
    if (dim_ == 1) return std::abs(checked_sub(vertices_[1][0], v0[0]));
    i128 total = 0;
    if (dim_ == 2) {
      for (size_t i = 1; i + 1 < vertices_.size(); ++i) {
        i128 c = cross2(vertices_[i] - v0, vertices_[i + 1] - v0);
        total += c < 0 ? -c : c;
      }
      // vertices_ of a polygon are stored in boundary order (see build)
    } else {
      for (const Facet& f : facets_) {
        const auto& cy = f.cycle;
        for (size_t i = 1; i + 1 < cy.size(); ++i) {
          i128 d = det3(vertices_[size_t(cy[0])] - v0, vertices_[size_t(cy[i])] - v0,
                        vertices_[size_t(cy[i + 1])] - v0);
          total += d < 0 ? -d : d;
        }
      }
    }
    if (total > INT64_MAX) throw overflow_error("volume overflow");
    return i64(total);
  }

  /// Sum of facet areas, each measured in the 2-d lattice induced on the
  /// facet plane (3-d polytopes).
  i64 boundary_volume() const {
    require_full("boundary_volume");
    if (dim_ != 3) throw geometry_error("boundary_volume requires a 3-polytope");
    i64 total = 0;
    for (const Facet& f : facets_) {
      IntMat frame = plane_frame(f.normal);
      IntMat inv = unimodular_inverse(frame);
      std::vector<Point> flat;
      const Point& base = vertices_[size_t(f.cycle[0])];
      for (int vi : f.cycle) {
        Point y = inv * (vertices_[size_t(vi)] - base);
        flat.push_back(Point(y[1], y[2]));
      }
      i128 area2 = 0;  // twice the euclidean area = normalized 2-d volume
      for (size_t i = 1; i + 1 < flat.size(); ++i)
        area2 += cross2(flat[i] - flat[0], flat[i + 1] - flat[0]);
      total = checked_add(total, i64(area2 < 0 ? -area2 : area2));
    }
    return total;
  }

  /// (vertices, edges, facets) of a 3-polytope.
  struct FVector {
    int v, e, f;
  };
  FVector f_vector() const {
    require_full("f_vector");
    if (dim_ != 3) throw geometry_error("f_vector requires a 3-polytope");
    return FVector{int(vertices_.size()), int(edge_list().size()), int(facets_.size())};
  }

  /// Undirected vertex-index pairs forming the edges of a 3-polytope.
  std::vector<std::pair<int, int>> edge_list() const {
    require_full("edge_list");
    std::vector<std::pair<int, int>> edges;
    for (const Facet& f : facets_) {
      size_t k = f.cycle.size();
      for (size_t i = 0; i < k; ++i) {
        int a = f.cycle[i], b = f.cycle[(i + 1) % k];
        if (a > b) std::swap(a, b);
        edges.emplace_back(a, b);
      }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
  }

  /// Largest normalized volume of the polar dual over all translations
  /// taking an interior lattice point to the origin. Exact rational.
  /// Convention: P* = { y : <y, x> <= 1 for all x in P }.
  Rational dual_volume() const {
    require_full("dual_volume");
    if (dim_ != 3) throw geometry_error("dual_volume requires a 3-polytope");
    std::vector<Point> ints = interior_lattice_points();
    if (ints.empty()) throw geometry_error("dual_volume of a hollow polytope");
    std::optional<Rational> best;
    for (const Point& o : ints) {
      Rational v = dual_volume_at(o);
      if (!best || *best < v) best = v;
    }
    return *best;
  }

  /// Dilation by a positive integer factor (same combinatorics).
  Polytope dilate(i64 k) const {
    if (k <= 0) throw geometry_error("dilation factor must be positive");
    if (k == 1) return *this;
    std::vector<Point> pts;
    pts.reserve(vertices_.size());
    for (const Point& v : vertices_) pts.push_back(v * k);
    return hull(std::move(pts));
  }

  Polytope translate(const Point& t) const {
    std::vector<Point> pts;
    pts.reserve(vertices_.size());
    for (const Point& v : vertices_) pts.push_back(v + t);
    return hull(std::move(pts));
  }

  /// Image under x -> m x + t (m unimodular for equivalence tests).
  Polytope transform(const IntMat& m, const Point& t) const {
    std::vector<Point> pts;
    pts.reserve(vertices_.size());
    for (const Point& v : vertices_) pts.push_back(m * v + t);
    return hull(std::move(pts));
  }

  /// Intrinsic coordinates of an ambient lattice point in the affine hull,
  /// or nullopt if the point is off the hull's affine span / lattice.
  std::optional<Point> try_project(const Point& x) const {
    if (full_dim()) return x;
    Point rel = x - base_;
    Point y = proj_ * rel;
    if (lift_ * y == rel) return y;
    return std::nullopt;
  }

  Point lift(const Point& y) const {
    if (full_dim()) return y;
    return base_ + lift_ * y;
  }

 private:
  Polytope() = default;

  static int affine_dim(const std::vector<Point>& pts) {
    if (pts.size() == 1) return 0;
    int ambient = pts[0].dim;
    const Point& p0 = pts[0];
    // first independent direction
    size_t i1 = 1;  // pts are deduplicated, so pts[1] != p0
    if (ambient == 1) return 1;
    size_t i2 = 0;
    for (size_t i = i1 + 1; i < pts.size(); ++i)
      if (!detail::collinear(p0, pts[i1], pts[i])) {
        i2 = i;
        break;
      }
    if (i2 == 0) return 1;
    if (ambient == 2) return 2;
    for (size_t i = 2; i < pts.size(); ++i)
      if (detail::orient3(p0, pts[i1], pts[i2], pts[i]) != 0) return 3;
    return 2;
  }

  void require_full(const char* op) const {
    if (!full_dim())
      throw geometry_error(std::string(op) + " requires a full-dimensional polytope");
  }

  void build_full_dim(std::vector<Point> pts) {
    if (dim_ == 0) {
      vertices_ = std::move(pts);
      return;
    }
    if (dim_ == 1) {
      vertices_ = {pts.front(), pts.back()};  // pts sorted
      Facet lo{Point::of_dim(1, {-1}), -pts.front()[0], {}};
      Facet hi{Point::of_dim(1, {1}), pts.back()[0], {}};
      facets_ = {lo, hi};
      return;
    }
    if (dim_ == 2) {
      vertices_ = detail::hull2d(std::move(pts));
      size_t n = vertices_.size();
      for (size_t i = 0; i < n; ++i) {
        const Point& a = vertices_[i];
        const Point& b = vertices_[(i + 1) % n];
        Point d = b - a;
        Point nrm = primitive(Point(d[1], -d[0]));
        facets_.push_back(Facet{nrm, dot64(nrm, a), {int(i), int((i + 1) % n)}});
      }
      return;
    }
    build_hull3(std::move(pts));
  }

  void build_hull3(std::vector<Point> pts) {
    using detail::Tri;
    // initial affinely independent 4-tuple
    size_t i1 = 1, i2 = 0, i3 = 0;
    for (size_t i = 2; i < pts.size() && !i2; ++i)
      if (!detail::collinear(pts[0], pts[i1], pts[i])) i2 = i;
    for (size_t i = 2; i < pts.size() && !i3; ++i)
      if (detail::orient3(pts[0], pts[i1], pts[i2], pts[i]) != 0) i3 = i;
    Point ref4 = pts[0] + pts[i1] + pts[i2] + pts[i3];  // 4x interior point

    std::vector<Tri> tris;
    std::unordered_map<u64, int> edge_owner;  // directed edge (a,b) -> tri
    auto ekey = [](int a, int b) { return (u64(u64(a)) << 32) | u64(u64(b)); };
    auto add_tri = [&](int a, int b, int c) {
      Point n = cross3(pts[size_t(b)] - pts[size_t(a)], pts[size_t(c)] - pts[size_t(a)]);
      n = primitive(n);
      i64 off = dot64(n, pts[size_t(a)]);
      // orient outward: strict, since ref4/4 is interior to the start tetra
      if (dot(n, ref4) > i128(off) * 4) {
        std::swap(b, c);
        n = -n;
        off = dot64(n, pts[size_t(a)]);
      }
      int id = int(tris.size());
      tris.push_back(Tri{a, b, c, n, off, true});
      edge_owner[ekey(a, b)] = id;
      edge_owner[ekey(b, c)] = id;
      edge_owner[ekey(c, a)] = id;
      return id;
    };

    add_tri(0, int(i1), int(i2));
    add_tri(0, int(i1), int(i3));
    add_tri(0, int(i2), int(i3));
    add_tri(int(i1), int(i2), int(i3));

    std::vector<char> used(pts.size(), 0);
    used[0] = used[i1] = used[i2] = used[i3] = 1;

    for (size_t pi = 0; pi < pts.size(); ++pi) {
      if (used[pi]) continue;
      const Point& p = pts[pi];
      std::vector<int> visible;
      for (size_t t = 0; t < tris.size(); ++t)
        if (tris[t].alive && dot(tris[t].n, p) > tris[t].off) visible.push_back(int(t));
      if (visible.empty()) continue;  // inside or on the boundary
      std::unordered_set<int> vis(visible.begin(), visible.end());
      std::vector<std::pair<int, int>> horizon;
      for (int t : visible) {
        int vv[3] = {tris[size_t(t)].a, tris[size_t(t)].b, tris[size_t(t)].c};
        for (int e = 0; e < 3; ++e) {
          int x = vv[e], y = vv[(e + 1) % 3];
          auto it = edge_owner.find(ekey(y, x));
          if (it == edge_owner.end()) throw geometry_error("hull surface not closed");
          if (!vis.count(it->second)) horizon.emplace_back(x, y);
        }
      }
      for (int t : visible) {
        int vv[3] = {tris[size_t(t)].a, tris[size_t(t)].b, tris[size_t(t)].c};
        tris[size_t(t)].alive = false;
        edge_owner.erase(ekey(vv[0], vv[1]));
        edge_owner.erase(ekey(vv[1], vv[2]));
        edge_owner.erase(ekey(vv[2], vv[0]));
      }
      for (auto [x, y] : horizon) add_tri(x, y, int(pi));
    }

    // merge coplanar triangles into polygon facets
    std::map<std::pair<std::array<i64, 3>, i64>, std::vector<int>> groups;
    for (size_t t = 0; t < tris.size(); ++t)
      if (tris[t].alive)
        groups[{tris[t].n.c, tris[t].off}].push_back(int(t));

    std::vector<Point> verts;
    std::unordered_map<u64, int> vid;  // index into pts -> index into verts
    auto vertex_id = [&](int pi) {
      auto it = vid.find(u64(pi));
      if (it != vid.end()) return it->second;
      int id = int(verts.size());
      verts.push_back(pts[size_t(pi)]);
      vid[u64(pi)] = id;
      return id;
    };

    for (auto& [plane, members] : groups) {
      Point n;
      n.dim = 3;
      n.c = plane.first;
      i64 off = plane.second;
      std::vector<int> facet_pts;
      for (int t : members) {
        facet_pts.push_back(tris[size_t(t)].a);
        facet_pts.push_back(tris[size_t(t)].b);
        facet_pts.push_back(tris[size_t(t)].c);
      }
      std::sort(facet_pts.begin(), facet_pts.end());
      facet_pts.erase(std::unique(facet_pts.begin(), facet_pts.end()), facet_pts.end());
      // project onto two coordinates (drop one where the normal is nonzero)
      int drop = 0;
      while (n[drop] == 0) ++drop;
      int u = (drop + 1) % 3, w = (drop + 2) % 3;
      std::map<Point, int> back;
      std::vector<Point> flat;
      for (int pi : facet_pts) {
        Point q(pts[size_t(pi)][u], pts[size_t(pi)][w]);
        back[q] = pi;
        flat.push_back(q);
      }
      std::vector<Point> poly = detail::hull2d(flat);
      Facet f{n, off, {}};
      for (const Point& q : poly) f.cycle.push_back(vertex_id(back[q]));
      facets_.push_back(std::move(f));
    }
    vertices_ = std::move(verts);
    // re-sort vertices lexicographically and remap cycles, so the vertex
    // list is deterministic regardless of insertion order
    std::vector<int> perm(vertices_.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = int(i);
    std::sort(perm.begin(), perm.end(),
              [&](int x, int y) { return vertices_[size_t(x)] < vertices_[size_t(y)]; });
    std::vector<int> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) inv[size_t(perm[i])] = int(i);
    std::vector<Point> sorted;
    sorted.reserve(vertices_.size());
    for (int i : perm) sorted.push_back(vertices_[size_t(i)]);
    vertices_ = std::move(sorted);
    for (Facet& f : facets_)
      for (int& v : f.cycle) v = inv[size_t(v)];
  }

  void build_low_dim(std::vector<Point> pts) {
    base_ = pts[0];
    if (dim_ == 0) {
      vertices_ = {base_};
      return;
    }
    if (dim_ == 1) {
      // saturated direction
      Point dir;
      for (size_t i = 1; i < pts.size(); ++i)
        if (!(pts[i] == base_)) {
          dir = primitive(pts[i] - base_);
          break;
        }
      lift_ = IntMat(ambient_, 1);
      for (int i = 0; i < ambient_; ++i) lift_(i, 0) = dir[i];
      IntMat u = map_primitive_to_e1(dir);
      proj_ = IntMat(1, ambient_);
      for (int j = 0; j < ambient_; ++j) proj_(0, j) = u(0, j);
    } else {
      // dim 2 in ambient 3: lattice basis of the plane through base_
      Point d1, d2;
      bool have1 = false, have2 = false;
      for (size_t i = 1; i < pts.size() && !have2; ++i) {
        Point d = pts[i] - base_;
        if (d.is_zero()) continue;
        if (!have1) {
          d1 = d;
          have1 = true;
        } else if (!detail::collinear(base_, base_ + d1, base_ + d)) {
          d2 = d;
          have2 = true;
        }
      }
      Point n = primitive(cross3(d1, d2));
      IntMat frame = plane_frame(n);  // columns (w, b1, b2)
      IntMat inv = unimodular_inverse(frame);
      lift_ = IntMat(3, 2);
      for (int i = 0; i < 3; ++i) {
        lift_(i, 0) = frame(i, 1);
        lift_(i, 1) = frame(i, 2);
      }
      proj_ = IntMat(2, 3);
      for (int j = 0; j < 3; ++j) {
        proj_(0, j) = inv(1, j);
        proj_(1, j) = inv(2, j);
      }
    }
    std::vector<Point> flat;
    flat.reserve(pts.size());
    for (const Point& p : pts) flat.push_back(proj_ * (p - base_));
    intrinsic_ = std::make_shared<Polytope>(hull(std::move(flat)));
    for (const Point& y : intrinsic_->vertices()) vertices_.push_back(lift(y));
  }

  static i128 floor_div128(i128 a, i128 b) {
    i128 q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
  }
  static i128 ceil_div128(i128 a, i128 b) { return -floor_div128(-a, b); }

  // Scan the integer bounding box, restricted by the facet inequalities;
  // calls fn for every (strict, if interior) lattice point. fn returns
  // false to abort.
  template <typename Fn>
  void scan(bool strict, Fn&& fn) const {
    i64 tighten = strict ? 1 : 0;
    if (dim_ == 1) {
      i64 lo = vertices_[0][0], hi = vertices_[1][0];
      if (lo > hi) std::swap(lo, hi);
      for (i64 x = lo + tighten; x <= hi - tighten; ++x)
        if (!fn(Point::of_dim(1, {x}))) return;
      return;
    }
    std::array<i64, 3> lo{INT64_MAX, INT64_MAX, INT64_MAX}, hi{INT64_MIN, INT64_MIN, INT64_MIN};
    for (const Point& v : vertices_)
      for (int i = 0; i < dim_; ++i) {
        lo[size_t(i)] = std::min(lo[size_t(i)], v[i]);
        hi[size_t(i)] = std::max(hi[size_t(i)], v[i]);
      }
    if (dim_ == 2) {
      for (i64 x = lo[0]; x <= hi[0]; ++x) {
        i64 ylo = lo[1], yhi = hi[1];
        bool empty = false;
        for (const Facet& f : facets_) {
          i128 rhs = i128(f.offset) - tighten - i128(f.normal[0]) * x;
          if (f.normal[1] > 0)
            yhi = std::min<i64>(yhi, i64(floor_div128(rhs, f.normal[1])));
          else if (f.normal[1] < 0)
            ylo = std::max<i64>(ylo, i64(ceil_div128(rhs, f.normal[1])));
          else if (rhs < 0) {
            empty = true;
            break;
          }
          if (ylo > yhi) {
            empty = true;
            break;
          }
        }
        if (empty) continue;
        for (i64 y = ylo; y <= yhi; ++y)
          if (!fn(Point(x, y))) return;
      }
      return;
    }
    for (i64 x = lo[0]; x <= hi[0]; ++x)
      for (i64 y = lo[1]; y <= hi[1]; ++y) {
        i64 zlo = lo[2], zhi = hi[2];
        bool empty = false;
        for (const Facet& f : facets_) {
          i128 rhs = i128(f.offset) - tighten - i128(f.normal[0]) * x - i128(f.normal[1]) * y;
          i64 nz = f.normal[2];
          if (nz == 0) {
            if (rhs < 0) {
              empty = true;
              break;
            }
            continue;
          }
          if (nz > 0)
            zhi = std::min<i64>(zhi, i64(floor_div128(rhs, nz)));
          else
            zlo = std::max<i64>(zlo, i64(ceil_div128(rhs, nz)));
          if (zlo > zhi) {
            empty = true;
            break;
          }
        }
        if (empty) continue;
        for (i64 z = zlo; z <= zhi; ++z)
          if (!fn(Point(x, y, z))) return;
      }
  }

  Rational dual_volume_at(const Point& o) const {
    // dual vertex for each facet: normal / (offset - <normal, o>)
    struct RatVec {
      Rational x, y, z;
    };
    std::vector<RatVec> dual(facets_.size());
    for (size_t i = 0; i < facets_.size(); ++i) {
      i64 h = facets_[i].offset - dot64(facets_[i].normal, o);
      if (h <= 0) throw geometry_error("translation point not interior");
      dual[i] = RatVec{Rational(facets_[i].normal[0], h), Rational(facets_[i].normal[1], h),
                       Rational(facets_[i].normal[2], h)};
    }
    // facets of the dual correspond to vertices of P; their boundary cycle
    // is the cycle of facets around the vertex
    std::map<std::pair<int, int>, std::vector<int>> edge_facets;
    for (size_t fi = 0; fi < facets_.size(); ++fi) {
      const auto& cy = facets_[fi].cycle;
      for (size_t i = 0; i < cy.size(); ++i) {
        int a = cy[i], b = cy[(i + 1) % cy.size()];
        if (a > b) std::swap(a, b);
        edge_facets[{a, b}].push_back(int(fi));
      }
    }
    auto det_rat = [](const RatVec& a, const RatVec& b, const RatVec& c) {
      Rational d = a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
                   a.z * (b.x * c.y - b.y * c.x);
      return d;
    };
    Rational total(0);
    for (int v = 0; v < int(vertices_.size()); ++v) {
      // facets containing v, in cyclic order
      std::vector<int> around;
      for (size_t fi = 0; fi < facets_.size(); ++fi)
        if (std::find(facets_[fi].cycle.begin(), facets_[fi].cycle.end(), v) !=
            facets_[fi].cycle.end())
          around.push_back(int(fi));
      if (around.size() < 3) throw geometry_error("degenerate vertex figure");
      std::vector<int> cycle{around[0]};
      std::unordered_set<int> seen{around[0]};
      while (cycle.size() < around.size()) {
        int cur = cycle.back();
        // neighbour of cur around v: shares an edge (v, w)
        const auto& cy = facets_[size_t(cur)].cycle;
        size_t pos = size_t(std::find(cy.begin(), cy.end(), v) - cy.begin());
        int nb1 = cy[(pos + 1) % cy.size()];
        int nb2 = cy[(pos + cy.size() - 1) % cy.size()];
        bool advanced = false;
        for (int w : {nb1, nb2}) {
          auto key = std::minmax(v, w);
          for (int cand : edge_facets[{key.first, key.second}])
            if (cand != cur && !seen.count(cand)) {
              cycle.push_back(cand);
              seen.insert(cand);
              advanced = true;
              break;
            }
          if (advanced) break;
        }
        if (!advanced) throw geometry_error("broken facet cycle around vertex");
      }
      for (size_t i = 1; i + 1 < cycle.size(); ++i) {
        Rational d = det_rat(dual[size_t(cycle[0])], dual[size_t(cycle[i])],
                             dual[size_t(cycle[i + 1])]);
        if (d.sign() < 0) d = -d;
        total = total + d;
      }
    }
    return total;
  }

  int ambient_ = 3;
  int dim_ = 3;
  std::vector<Point> vertices_;
  std::vector<Facet> facets_;
  std::shared_ptr<const Polytope> intrinsic_;
  IntMat proj_, lift_;
  Point base_;
};

}  // namespace polyclass
