#include "crepant/toric.hpp"

#include <algorithm>

#include "crepant/errors.hpp"
#include "crepant/simplex_lp.hpp"

namespace crepant {

std::string to_string(GorensteinFailure f) {
  switch (f) {
    case GorensteinFailure::NoSolution: return "no_solution";
    case GorensteinFailure::NonIntegral: return "non_integral";
    case GorensteinFailure::NonPrimitive: return "non_primitive";
  }
  return "unknown";
}

Cone make_cone(int ambient_dim, const std::vector<IntVec>& raw_rays) {
  if (ambient_dim < 1) fail(ErrorCode::InvalidArgument, "ambient dimension must be positive");
  if (raw_rays.empty()) fail(ErrorCode::InvalidArgument, "cone needs at least one ray");
  std::vector<IntVec> rays;
  for (const IntVec& r : raw_rays) {
    if (static_cast<int>(r.size()) != ambient_dim)
      fail(ErrorCode::DimensionMismatch, "ray dimension mismatch");
    if (is_zero_vec(r)) fail(ErrorCode::ZeroVector, "zero ray");
    rays.push_back(primitive_part(r));
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

  // Strong convexity: the cone contains a line iff some ray's negation is a
  // non-negative combination of the rays.
  for (const IntVec& r : rays) {
    if (in_nonneg_span(rays, vec_neg(r)))
      fail(ErrorCode::ContainsLine,
           "cone contains the line through " + to_string(r));
  }
  int rank = rational_rank(rays);
  if (rank != ambient_dim)
    fail(ErrorCode::DegenerateInput,
         "cone is not full-dimensional: ray span has rank " + std::to_string(rank) +
             " in ambient dimension " + std::to_string(ambient_dim));
  return Cone{ambient_dim, std::move(rays)};
}

GorensteinOutcome gorenstein_vector(const Cone& c) {
  // Solve R m = (1, ..., 1) exactly; R has full column rank, so any solution
  // is unique.
  const int n = c.ambient_dim;
  std::vector<IntVec> columns(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    IntVec col(c.rays.size());
    for (std::size_t i = 0; i < c.rays.size(); ++i) col[i] = c.rays[i][static_cast<std::size_t>(j)];
    columns[static_cast<std::size_t>(j)] = std::move(col);
  }
  IntVec ones(c.rays.size(), Int(1));
  auto sol = solve_columns(columns, ones);
  GorensteinOutcome out;
  if (!sol) {
    out.failure = GorensteinFailure::NoSolution;
    return out;
  }
  IntVec m(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const Rat& q = (*sol)[static_cast<std::size_t>(j)];
    if (q.get_den() != 1) {
      out.failure = GorensteinFailure::NonIntegral;
      return out;
    }
    m[static_cast<std::size_t>(j)] = q.get_num();
  }
  if (gcd_content(m) != 1) {
    out.failure = GorensteinFailure::NonPrimitive;  // unreachable, kept for the surface
    return out;
  }
  out.certificate = GorensteinCertificate{std::move(m)};
  return out;
}

SupportPolytope support_polytope(const Cone& c, const GorensteinCertificate& cert) {
  const HyperplaneBasis hb = hyperplane_lattice_basis(cert.m_sigma);
  FlatteningMap chart{hb.base_point, hb.basis};
  std::vector<IntVec> flat;
  flat.reserve(c.rays.size());
  for (const IntVec& r : c.rays) {
    if (dot(cert.m_sigma, r) != 1)
      fail(ErrorCode::NotGorenstein,
           "certificate does not certify this cone: <m, " + to_string(r) + "> != 1");
    flat.push_back(chart.flatten(r));
  }
  return SupportPolytope{LatticePolytope(c.ambient_dim - 1, std::move(flat)),
                         std::move(chart)};
}

Cone cone_over_polytope(const LatticePolytope& p) {
  std::vector<IntVec> rays;
  rays.reserve(p.vertices().size());
  for (const IntVec& v : p.vertices()) {
    IntVec r;
    r.reserve(v.size() + 1);
    r.push_back(1);
    for (const Int& x : v) r.push_back(x);
    rays.push_back(std::move(r));
  }
  return make_cone(p.ambient_dim() + 1, rays);
}

}  // namespace crepant
