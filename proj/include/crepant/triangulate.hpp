#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crepant/fh.hpp"
#include "crepant/polytope.hpp"

namespace crepant {

// Geometric simplicial complex on lattice points: cells are sorted
// (d+1)-tuples of indices into `points`, and the cell list itself is sorted.
struct GeometricTriangulation {
  int ambient_dim = 0;
  std::vector<IntVec> points;
  std::vector<std::vector<int>> cells;
};

struct BoundaryComplex {
  std::vector<std::vector<int>> facets;  // sorted d-subsets of point indices
};

struct ValidityIssue {
  enum class Kind {
    IndexOutOfRange,
    DegenerateCell,
    PointOutsidePolytope,
    VolumeMismatch,
    ImproperPair,
  };
  Kind kind;
  std::vector<int> cell_a;  // witness cell (when applicable)
  std::vector<int> cell_b;  // second cell of an improper pair
  std::string detail;
};

struct ValidityReport {
  std::vector<ValidityIssue> issues;
  Int cell_volume_sum = 0;
  bool valid() const { return issues.empty(); }
};

// Exact validity: cells full-dimensional and inside P, pairwise intersections
// are common faces (rational LP certificate), and cell volumes sum to
// normalized_volume(P). Together these force the cells to tile P.
ValidityReport validate_triangulation(const GeometricTriangulation& t,
                                      const LatticePolytope& p);

// Face counts of the triangulation read as a pure d-complex (a d-ball for a
// polytope triangulation). Cheap structural defects throw; properness is
// validate_triangulation's job.
FVector f_vector_of(const GeometricTriangulation& t);

// The (d-1)-faces lying in exactly one cell.
BoundaryComplex boundary_of(const GeometricTriangulation& t);

// vert(T) equals all lattice points of P; for a valid T this is equivalent to
// every cell being elementary.
bool is_maximal(const GeometricTriangulation& t, const LatticePolytope& p,
                std::int64_t point_budget = kDefaultPointBudget);

// Every cell has normalized volume 1. Basic triangulations are maximal; this
// is re-checked and an Internal error raised if a (necessarily invalid) input
// pretends otherwise.
bool is_basic(const GeometricTriangulation& t, const LatticePolytope& p,
              std::int64_t point_budget = kDefaultPointBudget);

// Deterministic maximal triangulation: lattice points are inserted in lex
// order (placing construction; interior points split their carriers, outer
// points cone over the strictly visible boundary facets).
GeometricTriangulation full_triangulation(const LatticePolytope& p,
                                          std::int64_t point_budget = kDefaultPointBudget);

inline constexpr std::int64_t kDefaultSearchBudget = 1'000'000;

struct BasicSearchResult {
  enum class Status { Witness, ExhaustedNone, BudgetExceeded };
  Status status = Status::BudgetExceeded;
  std::optional<GeometricTriangulation> witness;
  std::int64_t nodes = 0;  // enumerated candidate cells + visited search nodes
};

std::string to_string(BasicSearchResult::Status s);

// Exhaustive search for a basic (unimodular) triangulation. Enumerates every
// unimodular (d+1)-subset of P's lattice points, then backtracks over
// pairwise properly-intersecting covers whose unit volumes sum to
// normalized_volume(P). Branches cover the lex-smallest point that is not yet
// a cell vertex; lex-smaller alternatives are forbidden inside later branches,
// which makes the enumeration duplicate-free and hence honestly exhaustive.
// ExhaustedNone is returned only when the whole space was explored within
// budget; BudgetExceeded is a first-class verdict, never conflated with it.
BasicSearchResult basic_triangulation_search(const LatticePolytope& p,
                                             std::int64_t budget = kDefaultSearchBudget,
                                             std::int64_t point_budget = kDefaultPointBudget);

}  // namespace crepant
