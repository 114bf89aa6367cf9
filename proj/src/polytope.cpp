#include "crepant/polytope.hpp"

#include <algorithm>
#include <set>

#include "crepant/errors.hpp"

namespace crepant {

IntVec FlatteningMap::flatten(const IntVec& x) const {
  auto y = solve_columns(basis_columns, vec_sub(x, base));
  if (!y) fail(ErrorCode::Internal, "point not on the chart's hyperplane");
  IntVec out(y->size());
  for (std::size_t i = 0; i < y->size(); ++i) {
    if ((*y)[i].get_den() != 1)
      fail(ErrorCode::Internal, "non-integral hyperplane coordinates");
    out[i] = (*y)[i].get_num();
  }
  return out;
}

IntVec FlatteningMap::unflatten(const IntVec& y) const {
  IntVec x = base;
  for (std::size_t j = 0; j < basis_columns.size(); ++j)
    for (std::size_t r = 0; r < x.size(); ++r) x[r] += y[j] * basis_columns[j][r];
  return x;
}

namespace {

int affine_rank(const std::vector<IntVec>& pts) {
  if (pts.empty()) return -1;
  std::vector<IntVec> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(vec_sub(pts[i], pts[0]));
  return rational_rank(diffs);
}

}  // namespace

std::vector<HalfSpace> facets_of_points(int ambient_dim,
                                        const std::vector<IntVec>& points) {
  const int d = ambient_dim;
  const int n = static_cast<int>(points.size());
  std::set<HalfSpace> found;

  if (d == 1) {
    Int lo = points[0][0], hi = points[0][0];
    for (const IntVec& p : points) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    found.insert({IntVec{Int(-1)}, -lo});
    found.insert({IntVec{Int(1)}, hi});
    return {found.begin(), found.end()};
  }

  // Candidate hyperplanes through affinely independent d-subsets, kept when
  // every point lies on one side.
  std::vector<int> idx(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<IntVec> diffs;
    for (int i = 1; i < d; ++i)
      diffs.push_back(vec_sub(points[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])],
                              points[static_cast<std::size_t>(idx[0])]));
    IntVec normal = orthogonal_vector(diffs, d);
    if (!is_zero_vec(normal)) {
      normal = primitive_part(normal);
      Int offset = dot(normal, points[static_cast<std::size_t>(idx[0])]);
      bool any_below = false, any_above = false;
      for (const IntVec& p : points) {
        Int v = dot(normal, p);
        if (v < offset) any_below = true;
        if (v > offset) any_above = true;
        if (any_below && any_above) break;
      }
      if (!any_above) {
        found.insert({normal, offset});
      } else if (!any_below) {
        found.insert({vec_neg(normal), -offset});
      }
    }
    // next d-combination of {0..n-1}
    int k = d - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - d + k) --k;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
    for (int i = k + 1; i < d; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  return {found.begin(), found.end()};
}

LatticePolytope::LatticePolytope(int ambient_dim, std::vector<IntVec> vertices)
    : dim_(ambient_dim), vertices_(std::move(vertices)) {
  if (dim_ < 1) fail(ErrorCode::InvalidArgument, "ambient dimension must be positive");
  if (vertices_.empty()) fail(ErrorCode::InvalidArgument, "empty vertex list");
  for (const IntVec& v : vertices_) {
    if (static_cast<int>(v.size()) != dim_)
      fail(ErrorCode::DimensionMismatch, "vertex dimension mismatch");
  }
  std::sort(vertices_.begin(), vertices_.end());
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (vertices_[i] == vertices_[i - 1])
      fail(ErrorCode::DuplicateVertex, "duplicate vertex " + to_string(vertices_[i]));
  }
  int rank = affine_rank(vertices_);
  if (rank != dim_)
    fail(ErrorCode::DegenerateInput,
         "polytope is not full-dimensional: affine rank " + std::to_string(rank) +
             " in ambient dimension " + std::to_string(dim_));
  facets_ = facets_of_points(dim_, vertices_);
  // Every listed point must be a hull vertex: its tight facet normals span R^d.
  for (const IntVec& v : vertices_) {
    std::vector<IntVec> tight;
    for (const HalfSpace& h : facets_) {
      if (dot(h.normal, v) == h.offset) tight.push_back(h.normal);
    }
    if (rational_rank(tight) != dim_)
      fail(ErrorCode::RedundantVertex,
           "listed point " + to_string(v) + " is not a vertex of the hull");
  }
}

LatticePolytope LatticePolytope::from_point_cloud(int ambient_dim,
                                                  const std::vector<IntVec>& points) {
  if (points.empty()) fail(ErrorCode::InvalidArgument, "empty point cloud");
  std::vector<IntVec> uniq = points;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  int rank = affine_rank(uniq);
  if (rank != ambient_dim)
    fail(ErrorCode::DegenerateInput,
         "point cloud is not full-dimensional: affine rank " + std::to_string(rank));
  std::vector<HalfSpace> facets = facets_of_points(ambient_dim, uniq);
  std::vector<IntVec> verts;
  for (const IntVec& p : uniq) {
    std::vector<IntVec> tight;
    for (const HalfSpace& h : facets) {
      if (dot(h.normal, p) == h.offset) tight.push_back(h.normal);
    }
    if (rational_rank(tight) == ambient_dim) verts.push_back(p);
  }
  return LatticePolytope(ambient_dim, std::move(verts));
}

Membership LatticePolytope::contains(const IntVec& x) const {
  if (static_cast<int>(x.size()) != dim_)
    fail(ErrorCode::DimensionMismatch, "point dimension mismatch");
  bool tight = false;
  for (const HalfSpace& h : facets_) {
    Int v = dot(h.normal, x);
    if (v > h.offset) return Membership::Outside;
    if (v == h.offset) tight = true;
  }
  return tight ? Membership::Boundary : Membership::Interior;
}

LatticePointSet LatticePolytope::lattice_points(std::int64_t budget) const {
  IntVec lo = vertices_[0], hi = vertices_[0];
  for (const IntVec& v : vertices_) {
    for (int c = 0; c < dim_; ++c) {
      lo[static_cast<std::size_t>(c)] = std::min(lo[static_cast<std::size_t>(c)], v[static_cast<std::size_t>(c)]);
      hi[static_cast<std::size_t>(c)] = std::max(hi[static_cast<std::size_t>(c)], v[static_cast<std::size_t>(c)]);
    }
  }
  Int box = 1;
  for (int c = 0; c < dim_; ++c) box *= hi[static_cast<std::size_t>(c)] - lo[static_cast<std::size_t>(c)] + 1;
  if (box > Int(budget))
    fail(ErrorCode::PointBudgetExceeded,
         "bounding box holds " + to_string(box) + " candidate points, budget " +
             std::to_string(budget));

  LatticePointSet out;
  IntVec x = lo;
  while (true) {
    switch (contains(x)) {
      case Membership::Interior:
        out.interior.push_back(x);
        out.all.push_back(x);
        break;
      case Membership::Boundary:
        out.boundary.push_back(x);
        out.all.push_back(x);
        break;
      case Membership::Outside:
        break;
    }
    int c = dim_ - 1;
    while (c >= 0 && x[static_cast<std::size_t>(c)] == hi[static_cast<std::size_t>(c)]) {
      x[static_cast<std::size_t>(c)] = lo[static_cast<std::size_t>(c)];
      --c;
    }
    if (c < 0) break;
    ++x[static_cast<std::size_t>(c)];
  }
  // box iteration with the last coordinate fastest is not lex order; sort.
  std::sort(out.all.begin(), out.all.end());
  std::sort(out.boundary.begin(), out.boundary.end());
  std::sort(out.interior.begin(), out.interior.end());
  return out;
}

namespace {

// Pulling triangulation of a full-dimensional hull: cone the lex-smallest
// vertex over the recursively triangulated facets that do not contain it.
// Facet point sets are flattened onto Z^{dim-1} through an index-1 lattice
// chart of their hyperplane, so volumes are preserved exactly.
std::vector<std::vector<IntVec>> triangulate_points(int dim,
                                                    std::vector<IntVec> pts) {
  std::sort(pts.begin(), pts.end());
  const std::size_t want = static_cast<std::size_t>(dim) + 1;
  if (pts.size() == want) return {pts};
  if (dim == 1) {
    // after dedup/sort a 1-polytope with >2 listed points still has 2 vertices
    return {{pts.front(), pts.back()}};
  }
  std::vector<std::vector<IntVec>> cells;
  const IntVec apex = pts.front();
  for (const HalfSpace& facet : facets_of_points(dim, pts)) {
    if (dot(facet.normal, apex) == facet.offset) continue;
    std::vector<IntVec> on_facet;
    for (const IntVec& p : pts) {
      if (dot(facet.normal, p) == facet.offset) on_facet.push_back(p);
    }
    const HyperplaneBasis hb = hyperplane_lattice_basis(facet.normal);
    FlatteningMap chart{vec_scale(facet.offset, hb.base_point), hb.basis};
    std::vector<IntVec> flat;
    flat.reserve(on_facet.size());
    for (const IntVec& p : on_facet) flat.push_back(chart.flatten(p));
    for (const auto& sub : triangulate_points(dim - 1, flat)) {
      std::vector<IntVec> cell;
      cell.reserve(want);
      cell.push_back(apex);
      for (const IntVec& y : sub) cell.push_back(chart.unflatten(y));
      std::sort(cell.begin(), cell.end());
      cells.push_back(std::move(cell));
    }
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

Int simplex_volume(const std::vector<IntVec>& cell) {
  const int d = static_cast<int>(cell.size()) - 1;
  IntMatrix m(d, d);
  for (int r = 0; r < d; ++r) {
    IntVec diff = vec_sub(cell[static_cast<std::size_t>(r + 1)], cell[0]);
    for (int c = 0; c < d; ++c) m.at(r, c) = diff[static_cast<std::size_t>(c)];
  }
  Int det = determinant(m);
  return det < 0 ? Int(-det) : det;
}

}  // namespace

std::vector<std::vector<IntVec>> LatticePolytope::vertex_triangulation() const {
  return triangulate_points(dim_, vertices_);
}

Int LatticePolytope::normalized_volume() const {
  Int total = 0;
  for (const auto& cell : vertex_triangulation()) total += simplex_volume(cell);
  return total;
}

bool LatticePolytope::is_elementary(std::int64_t budget) const {
  LatticePointSet pts = lattice_points(budget);
  return pts.all == vertices_;  // both lex sorted
}

bool LatticePolytope::is_basic_simplex() const {
  if (static_cast<int>(vertices_.size()) != dim_ + 1) return false;
  return normalized_volume() == 1;
}

}  // namespace crepant
