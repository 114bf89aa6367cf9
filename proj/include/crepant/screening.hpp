#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "crepant/toric.hpp"
#include "crepant/triangulate.hpp"

namespace crepant {

enum class Verdict {
  Smooth,
  TerminalA,
  ClassBByBound,
  ClassBByExhaustion,
  ClassC,
  Inconclusive,
};

std::string to_string(Verdict v);

// Full evidence for one screening run. For cone inputs the Gorenstein outcome
// is always present; when it is a failure the run stops there and `verdict`
// stays empty (reported downstream as "non_gorenstein").
struct ScreeningReport {
  std::optional<Cone> cone;                      // set for cone inputs
  std::optional<GorensteinOutcome> gorenstein;   // set for cone inputs
  std::optional<FlatteningMap> chart;            // cone -> polytope coordinates

  std::optional<LatticePolytope> polytope;
  int dim = 0;
  std::optional<Int> volume;
  std::optional<Int> points_total;
  std::optional<Int> points_boundary;
  std::optional<Int> bound_rhs;
  std::optional<bool> bound_holds;

  std::optional<Verdict> verdict;
  std::optional<GeometricTriangulation> witness;            // class (C) only
  std::optional<BasicSearchResult::Status> search_status;   // when the oracle ran
  std::int64_t search_nodes = 0;
  std::int64_t search_budget = 0;
  std::string limiting_stage;  // which stage hit its budget, when inconclusive
};

// Right-hand side of the screening inequality:
// f_d(CycP_{d+1}(points_total)) - (points_boundary - d).
// Preconditions: points_total >= points_boundary >= d + 1.
Int ub_final_rhs(const Int& points_total, const Int& points_boundary, int d);

// Decision ladder: basic simplex -> smooth; elementary -> terminal_A;
// volume above the bound -> class_B_by_bound; otherwise the exhaustive oracle
// decides class_C / class_B_by_exhaustion / inconclusive. The bound check is
// budget-independent and always precedes the search. All numeric evidence is
// filled in on every branch that reaches it.
ScreeningReport screen(const LatticePolytope& p,
                       std::int64_t oracle_budget = kDefaultSearchBudget,
                       std::int64_t point_budget = kDefaultPointBudget);

// Computes the Gorenstein certificate, flattens onto the support polytope and
// delegates to screen; non-Gorenstein cones yield a report that stops at the
// failed certificate.
ScreeningReport screen_cone(const Cone& c,
                            std::int64_t oracle_budget = kDefaultSearchBudget,
                            std::int64_t point_budget = kDefaultPointBudget);

}  // namespace crepant
