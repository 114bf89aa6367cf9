#pragma once

#include <cstdint>
#include <vector>

#include "crepant/exact.hpp"
#include "crepant/numeric.hpp"

namespace crepant {

// {x : <normal, x> <= offset} with primitive normal and a (d-1)-dimensional
// contact face on the described polytope.
struct HalfSpace {
  IntVec normal;
  Int offset;

  friend bool operator==(const HalfSpace& a, const HalfSpace& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
  friend bool operator<(const HalfSpace& a, const HalfSpace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
};

enum class Membership { Interior, Boundary, Outside };

struct LatticePointSet {
  std::vector<IntVec> all;       // lex sorted
  std::vector<IntVec> boundary;  // lex sorted
  std::vector<IntVec> interior;  // lex sorted
};

// Affine lattice chart between Z^n points on a hyperplane and Z^{n-1}:
// x = base + basis * y. basis columns form an index-1 lattice basis of the
// hyperplane's direction lattice, so flatten() is exact and total on it.
struct FlatteningMap {
  IntVec base;
  std::vector<IntVec> basis_columns;

  IntVec flatten(const IntVec& x) const;    // solve basis * y = x - base
  IntVec unflatten(const IntVec& y) const;  // base + basis * y
};

inline constexpr std::int64_t kDefaultPointBudget = 10'000'000;

// Full-dimensional lattice polytope given by its vertex list. Construction
// validates everything up front (distinctness, full dimension, every listed
// point a hull vertex) and computes the facet description once; instances are
// immutable values afterwards, safe to share across threads.
class LatticePolytope {
 public:
  LatticePolytope(int ambient_dim, std::vector<IntVec> vertices);

  // Hull of an arbitrary finite point set: drops non-vertices instead of
  // rejecting them.
  static LatticePolytope from_point_cloud(int ambient_dim,
                                          const std::vector<IntVec>& points);

  int ambient_dim() const { return dim_; }
  const std::vector<IntVec>& vertices() const { return vertices_; }
  const std::vector<HalfSpace>& facets() const { return facets_; }

  Membership contains(const IntVec& x) const;

  // Exhaustive bounding-box scan; throws PointBudgetExceeded when the box
  // holds more than `budget` candidates.
  LatticePointSet lattice_points(std::int64_t budget = kDefaultPointBudget) const;

  // d! times the Euclidean volume; a basic simplex has normalized volume 1.
  Int normalized_volume() const;

  bool is_elementary(std::int64_t budget = kDefaultPointBudget) const;
  bool is_basic_simplex() const;

  // The simplices (as vertex coordinate tuples) of the deterministic internal
  // triangulation used for the volume; cells use polytope vertices only.
  std::vector<std::vector<IntVec>> vertex_triangulation() const;

 private:
  int dim_;
  std::vector<IntVec> vertices_;
  std::vector<HalfSpace> facets_;
};

// Irredundant facet half-spaces of the hull of a full-dimensional point set,
// sorted lexicographically. Exposed for reuse by the triangulation machinery.
std::vector<HalfSpace> facets_of_points(int ambient_dim,
                                        const std::vector<IntVec>& points);

}  // namespace crepant
