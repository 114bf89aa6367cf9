#pragma once

// Shared helpers for the test suites: fixed-seed generators for random
// lattice polytopes and unimodular maps, plus independent brute-force oracles
// (cofactor determinants, shoelace areas, Gale-evenness cyclic polytopes)
// that the implementation under test must agree with.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "crepant/exact.hpp"
#include "crepant/fh.hpp"
#include "crepant/polytope.hpp"

namespace testsupport {

using crepant::FVector;
using crepant::Int;
using crepant::IntMatrix;
using crepant::IntVec;
using crepant::LatticePolytope;

inline IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

inline std::vector<IntVec> ivs(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVec> out;
  for (const auto& r : rows) out.push_back(iv(r));
  return out;
}

// ---------------------------------------------------------------- oracles --

// Cofactor-expansion determinant, the slow cross-check for Bareiss.
inline Int cofactor_determinant(const IntMatrix& m) {
  const int n = m.rows;
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Int sum = 0;
  for (int j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    Int term = m.at(0, j) * cofactor_determinant(minor);
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

// Twice the polygon area by the shoelace formula; vertices get ordered by
// exact angular comparison around an interior reference point.
inline Int shoelace_double_area(const LatticePolytope& poly) {
  using crepant::Rat;
  std::vector<IntVec> vs = poly.vertices();
  const int n = static_cast<int>(vs.size());
  Int cx = 0, cy = 0;
  for (const IntVec& v : vs) {
    cx += v[0];
    cy += v[1];
  }
  // compare directions of n*v - c by half-plane, then by cross product
  auto half = [&](const IntVec& v) {
    Int dx = Int(n) * v[0] - cx, dy = Int(n) * v[1] - cy;
    if (dy > 0 || (dy == 0 && dx > 0)) return 0;
    return 1;
  };
  std::sort(vs.begin(), vs.end(), [&](const IntVec& a, const IntVec& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Int ax = Int(n) * a[0] - cx, ay = Int(n) * a[1] - cy;
    Int bx___ = Int(n) * b[0] - cx, by = Int(n) * b[1] - cy;
    Int cross = ax * by - ay * bx___;
    return cross > 0;
  });
  Int twice = 0;
  for (int i = 0; i < n; ++i) {
    const IntVec& a = vs[static_cast<std::size_t>(i)];
    const IntVec& b = vs[static_cast<std::size_t>((i + 1) % n)];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return twice < 0 ? Int(-twice) : twice;
}

// Facets of the cyclic D-polytope with k vertices by Gale's evenness
// condition, and the full f-vector by brute-force face enumeration.
inline std::vector<std::vector<int>> gale_cyclic_facets(int dim, int k) {
  std::vector<std::vector<int>> facets;
  std::vector<int> idx(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<bool> in(static_cast<std::size_t>(k), false);
    for (int i : idx) in[static_cast<std::size_t>(i)] = true;
    bool ok = true;
    for (int a = 0; a < k && ok; ++a) {
      if (in[static_cast<std::size_t>(a)]) continue;
      for (int b = a + 1; b < k && ok; ++b) {
        if (in[static_cast<std::size_t>(b)]) continue;
        int between = 0;
        for (int t = a + 1; t < b; ++t)
          if (in[static_cast<std::size_t>(t)]) ++between;
        if (between % 2 != 0) ok = false;
      }
    }
    if (ok) facets.push_back(idx);
    int t = dim - 1;
    while (t >= 0 && idx[static_cast<std::size_t>(t)] == k - dim + t) --t;
    if (t < 0) break;
    ++idx[static_cast<std::size_t>(t)];
    for (int i = t + 1; i < dim; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  return facets;
}

inline FVector gale_cyclic_f(int dim, int k) {
  std::set<std::vector<int>> faces;
  for (const auto& facet : gale_cyclic_facets(dim, k)) {
    const int n = static_cast<int>(facet.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> face;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) face.push_back(facet[static_cast<std::size_t>(i)]);
      faces.insert(std::move(face));
    }
  }
  std::vector<Int> counts(static_cast<std::size_t>(dim + 1), Int(0));
  counts[0] = 1;
  for (const auto& face : faces) ++counts[face.size()];
  return FVector(dim - 1, std::move(counts));
}

// ------------------------------------------------------------- generators --

inline long rnd(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

// Random full-dimensional lattice polytope with at most `max_points` lattice
// points, built as the hull of a small random point cloud.
inline LatticePolytope random_polytope(std::mt19937_64& rng, int dim,
                                       int max_points = 12) {
  const long box = dim == 2 ? 4 : 3;
  for (;;) {
    const int n = dim + 1 + static_cast<int>(rng() % 4);
    std::set<IntVec> cloud;
    for (int i = 0; i < n; ++i) {
      IntVec p;
      for (int c = 0; c < dim; ++c) p.push_back(Int(rnd(rng, 0, box)));
      cloud.insert(std::move(p));
    }
    try {
      LatticePolytope poly = LatticePolytope::from_point_cloud(
          dim, std::vector<IntVec>(cloud.begin(), cloud.end()));
      if (static_cast<int>(poly.lattice_points().all.size()) <= max_points)
        return poly;
    } catch (const crepant::Error&) {
      // degenerate sample, draw again
    }
  }
}

// Random GL_d(Z) matrix (determinant +-1) as a product of shears and swaps.
inline IntMatrix random_unimodular(std::mt19937_64& rng, int dim, int steps = 8) {
  IntMatrix u = IntMatrix::identity(dim);
  for (int s = 0; s < steps; ++s) {
    int i = static_cast<int>(rng() % static_cast<unsigned>(dim));
    int j = static_cast<int>(rng() % static_cast<unsigned>(dim));
    switch (rng() % 3) {
      case 0:
        if (i != j) {
          Int f = Int(rnd(rng, -2, 2));
          for (int c = 0; c < dim; ++c) u.at(i, c) += f * u.at(j, c);
        }
        break;
      case 1:
        if (i != j)
          for (int c = 0; c < dim; ++c) std::swap(u.at(i, c), u.at(j, c));
        break;
      default:
        for (int c = 0; c < dim; ++c) u.at(i, c) = -u.at(i, c);
        break;
    }
  }
  return u;
}

inline IntVec apply_affine(const IntMatrix& u, const IntVec& shift, const IntVec& x) {
  IntVec y(static_cast<std::size_t>(u.rows));
  for (int r = 0; r < u.rows; ++r) {
    Int s = shift[static_cast<std::size_t>(r)];
    for (int c = 0; c < u.cols; ++c) s += u.at(r, c) * x[static_cast<std::size_t>(c)];
    y[static_cast<std::size_t>(r)] = s;
  }
  return y;
}

// The worked example's simplex, flattened to Z^3 with the library's
// deterministic chart (any unimodular copy carries the same invariants).
inline LatticePolytope paper_simplex() {
  return LatticePolytope(3, ivs({{-1, -1, -1}, {0, -1, -1}, {0, 0, -1}, {3, 10, 19}}));
}

inline LatticePolytope unit_square() {
  return LatticePolytope(2, ivs({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
}

// conv{(0,0),(2,0),(0,2)}: non-elementary, volume 4, admits a basic
// triangulation with 4 unit cells.
inline LatticePolytope double_triangle() {
  return LatticePolytope(2, ivs({{0, 0}, {2, 0}, {0, 2}}));
}

inline LatticePolytope unit_simplex(int dim) {
  std::vector<IntVec> vs;
  vs.push_back(IntVec(static_cast<std::size_t>(dim), Int(0)));
  for (int i = 0; i < dim; ++i) {
    IntVec e(static_cast<std::size_t>(dim), Int(0));
    e[static_cast<std::size_t>(i)] = 1;
    vs.push_back(std::move(e));
  }
  return LatticePolytope(dim, std::move(vs));
}

}  // namespace testsupport
