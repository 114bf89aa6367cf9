#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crepant/polytope.hpp"

namespace crepant {

// Strongly convex full-dimensional rational cone, rays stored primitive,
// deduplicated and lex sorted.
struct Cone {
  int ambient_dim = 0;
  std::vector<IntVec> rays;
};

// Primitive dual vector with <m_sigma, r> = 1 for every ray.
struct GorensteinCertificate {
  IntVec m_sigma;
};

enum class GorensteinFailure { NoSolution, NonIntegral, NonPrimitive };

struct GorensteinOutcome {
  std::optional<GorensteinCertificate> certificate;
  std::optional<GorensteinFailure> failure;

  bool ok() const { return certificate.has_value(); }
};

std::string to_string(GorensteinFailure f);

// Primitivizes, deduplicates and validates the generators. Throws on a zero
// ray, a cone containing a line (the witnessing ray is reported), or a cone
// that is not full-dimensional.
Cone make_cone(int ambient_dim, const std::vector<IntVec>& raw_rays);

// Exact solve of <m, r> = 1 over all rays. Absence carries the reason;
// "non_primitive" is kept for surface completeness but cannot occur (any
// common divisor of m divides <m, r> = 1).
GorensteinOutcome gorenstein_vector(const Cone& c);

struct SupportPolytope {
  LatticePolytope polytope;  // in Z^d, vertices = flattened rays
  FlatteningMap chart;       // pulls flattened points back to Z^{d+1}
};

// Slices the certified cone by the Gorenstein hyperplane and rewrites the rays
// in index-1 lattice coordinates of that hyperplane. The chart is the
// deterministic one from hyperplane_lattice_basis, so results are
// reproducible bit-for-bit. Redundant generators (flattened points that are
// not vertices) are rejected by the polytope constructor.
SupportPolytope support_polytope(const Cone& c, const GorensteinCertificate& cert);

// Cone over P placed at height one: rays (1, v). Always Gorenstein with
// certificate (1, 0, ..., 0).
Cone cone_over_polytope(const LatticePolytope& p);

}  // namespace crepant
