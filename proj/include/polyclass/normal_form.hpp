#pragma once

// Canonical representatives under the affine unimodular group GL_d(Z) x Z^d.
//
// The canonical form of a polytope is computed by (i) translating each
// interior lattice point to the origin in turn (all lattice points for
// hollow inputs, which only occur in tests), (ii) ordering the vertices by
// a lexicographically maximised facet-vertex pairing matrix, (iii) reducing
// the ordered vertex matrix to Hermite normal form, and (iv) keeping the
// lexicographically smallest serialization over all choices. Two polytopes
// receive equal keys iff they are affinely unimodular equivalent.
//
// Serialization is part of the on-disk dedup format and is fixed for good:
// a u64 little-endian count of 64-bit words (rows*cols of the canonical
// vertex matrix, d rows by n columns), followed by the matrix entries as
// i64 little-endian, row-major. The 64-bit hash is FNV-1a over those bytes.

#include <algorithm>
#include <cstring>
#include <random>
#include <vector>

#include "polyclass/common.hpp"
#include "polyclass/matrix.hpp"
#include "polyclass/polytope.hpp"

namespace polyclass {

struct CanonicalKey {
  std::vector<unsigned char> bytes;
  u64 hash = 0;
  // cheap invariant tuple, determined by the key
  int dim = 0;
  int nverts = 0;
  i64 volume = 0;
  long npoints = 0;
  long ninterior = 0;

  bool operator==(const CanonicalKey& o) const { return bytes == o.bytes; }
  bool operator<(const CanonicalKey& o) const { return bytes < o.bytes; }
};

namespace detail {

inline void push_le64(std::vector<unsigned char>& out, u64 v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xff));
}

inline std::vector<unsigned char> serialize_matrix(const IntMat& m) {
  std::vector<unsigned char> out;
  out.reserve(8 + size_t(m.rows) * size_t(m.cols) * 8);
  push_le64(out, u64(m.rows) * u64(m.cols));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) push_le64(out, u64(m(i, j)));
  return out;
}

// All vertex orders that can appear in a lexicographically maximal
// row-major arrangement of the pairing matrix, maximised over independent
// facet and vertex permutations.
inline std::vector<std::vector<int>> maximizing_vertex_orders(
    const std::vector<std::vector<i64>>& pm) {
  int rows = int(pm.size());
  int cols = int(pm[0].size());

  struct State {
    u64 used = 0;
    std::vector<std::vector<int>> blocks;
  };
  std::vector<State> states(1);
  states[0].blocks.push_back({});
  for (int j = 0; j < cols; ++j) states[0].blocks[0].push_back(j);

  std::vector<i64> best_row;
  std::vector<std::pair<size_t, int>> winners;  // (state index, row)
  for (int step = 0; step < rows; ++step) {
    best_row.clear();
    winners.clear();
    for (size_t si = 0; si < states.size(); ++si) {
      for (int r = 0; r < rows; ++r) {
        if (states[si].used & (u64(1) << r)) continue;
        std::vector<i64> cand;
        cand.reserve(size_t(cols));
        for (const auto& blk : states[si].blocks) {
          std::vector<i64> vals;
          vals.reserve(blk.size());
          for (int c : blk) vals.push_back(pm[size_t(r)][size_t(c)]);
          std::sort(vals.rbegin(), vals.rend());
          cand.insert(cand.end(), vals.begin(), vals.end());
        }
        if (winners.empty() || cand > best_row) {
          best_row = std::move(cand);
          winners.clear();
          winners.emplace_back(si, r);
        } else if (cand == best_row) {
          winners.emplace_back(si, r);
        }
      }
    }
    std::vector<State> next;
    for (auto [si, r] : winners) {
      State ns;
      ns.used = states[si].used | (u64(1) << r);
      for (const auto& blk : states[si].blocks) {
        // split the block by the row's values, descending
        std::vector<std::pair<i64, int>> tagged;
        tagged.reserve(blk.size());
        for (int c : blk) tagged.emplace_back(pm[size_t(r)][size_t(c)], c);
        std::stable_sort(tagged.begin(), tagged.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
        size_t i = 0;
        while (i < tagged.size()) {
          size_t j = i;
          std::vector<int> part;
          while (j < tagged.size() && tagged[j].first == tagged[i].first)
            part.push_back(tagged[j++].second);
          ns.blocks.push_back(std::move(part));
          i = j;
        }
      }
      // drop duplicate states (same used-set and same partition)
      bool dup = false;
      for (const State& s : next)
        if (s.used == ns.used && s.blocks == ns.blocks) {
          dup = true;
          break;
        }
      if (!dup) next.push_back(std::move(ns));
      if (next.size() > 20000) throw geometry_error("normal form: state explosion");
    }
    states = std::move(next);
  }

  std::vector<std::vector<int>> orders;
  for (const State& s : states) {
    std::vector<int> order;
    for (const auto& blk : s.blocks) {
      if (blk.size() != 1)
        throw geometry_error("normal form: indistinguishable vertices in pairing matrix");
      order.push_back(blk[0]);
    }
    if (std::find(orders.begin(), orders.end(), order) == orders.end())
      orders.push_back(std::move(order));
  }
  return orders;
}

}  // namespace detail

/// Canonical key of a full-dimensional polytope under affine unimodular
/// equivalence.
inline CanonicalKey affine_normal_form(const Polytope& p) {
  if (!p.full_dim() || p.dim() < 1)
    throw geometry_error("affine_normal_form requires a full-dimensional polytope");
  int d = p.dim();
  const auto& verts = p.vertices();
  int n = int(verts.size());

  std::vector<Point> anchors = p.interior_lattice_points();
  long ninterior = long(anchors.size());
  long npoints;
  if (anchors.empty()) {
    anchors = p.lattice_points();  // hollow fallback, tests only
    npoints = long(anchors.size());
  } else {
    npoints = long(p.lattice_points().size());
  }

  // facet-vertex lattice distances; invariant under the whole affine group
  std::vector<std::vector<i64>> pm(p.facets().size(), std::vector<i64>(size_t(n)));
  for (size_t i = 0; i < p.facets().size(); ++i)
    for (int j = 0; j < n; ++j)
      pm[i][size_t(j)] = checked_sub(p.facets()[i].offset, dot64(p.facets()[i].normal, verts[size_t(j)]));

  std::vector<std::vector<int>> orders = detail::maximizing_vertex_orders(pm);

  std::vector<unsigned char> best;
  for (const Point& a : anchors) {
    for (const auto& order : orders) {
      IntMat m(d, n);
      for (int j = 0; j < n; ++j) {
        Point rel = verts[size_t(order[size_t(j)])] - a;
        for (int i = 0; i < d; ++i) m(i, j) = rel[i];
      }
      IntMat h = hermite_normal_form_any(m).h;
      auto bytes = detail::serialize_matrix(h);
      if (best.empty() || bytes < best) best = std::move(bytes);
    }
  }

  CanonicalKey key;
  key.bytes = std::move(best);
  key.hash = fnv1a(key.bytes.data(), key.bytes.size());
  key.dim = d;
  key.nverts = n;
  key.volume = p.normalized_volume();
  key.npoints = npoints;
  key.ninterior = ninterior;
  return key;
}

/// Rebuild the canonical representative polytope from a key.
inline Polytope key_to_polytope(const CanonicalKey& key) {
  size_t words = key.bytes.size() / 8 - 1;
  int d = key.dim;
  int n = int(words) / d;
  auto word = [&](size_t idx) {
    u64 v = 0;
    for (int b = 7; b >= 0; --b) v = (v << 8) | key.bytes[8 * (idx + 1) + size_t(b)];
    return i64(v);
  };
  std::vector<Point> pts;
  for (int j = 0; j < n; ++j) {
    Point q = Point::zero(d);
    for (int i = 0; i < d; ++i) q[i] = word(size_t(i) * size_t(n) + size_t(j));
    pts.push_back(q);
  }
  return Polytope::hull(std::move(pts));
}

inline bool are_equivalent(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) return false;
  return affine_normal_form(p) == affine_normal_form(q);
}

/// Deterministic-by-seed element of GL_d(Z) x Z^d built from at most 20
/// elementary row operations and a bounded translation.
inline std::pair<IntMat, Point> random_unimodular_map(u64 seed, int d = 3) {
  std::mt19937_64 rng(seed);
  IntMat m = IntMat::identity(d);
  std::uniform_int_distribution<int> nops(0, 20);
  std::uniform_int_distribution<int> row(0, d - 1);
  std::uniform_int_distribution<i64> coef(-3, 3);
  std::uniform_int_distribution<int> kind(0, 5);
  int ops = nops(rng);
  for (int t = 0; t < ops; ++t) {
    int i = row(rng), j = row(rng);
    int k = kind(rng);
    if (k == 0) {
      m.negate_row(i);
    } else if (k == 1) {
      if (i != j) m.swap_rows(i, j);
    } else {
      if (i != j) m.submul_row(i, j, coef(rng));
    }
  }
  Point t = Point::zero(d);
  std::uniform_int_distribution<i64> shift(-10, 10);
  for (int i = 0; i < d; ++i) t[i] = shift(rng);
  return {m, t};
}

}  // namespace polyclass
