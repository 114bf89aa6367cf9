#include "crepant/screening.hpp"

#include "crepant/errors.hpp"
#include "crepant/fh.hpp"

namespace crepant {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Smooth: return "smooth";
    case Verdict::TerminalA: return "terminal_A";
    case Verdict::ClassBByBound: return "class_B_by_bound";
    case Verdict::ClassBByExhaustion: return "class_B_by_exhaustion";
    case Verdict::ClassC: return "class_C";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

Int ub_final_rhs(const Int& points_total, const Int& points_boundary, int d) {
  if (points_boundary < d + 1)
    fail(ErrorCode::InvalidArgument,
         "a d-polytope has at least d + 1 boundary lattice points");
  if (points_total < points_boundary)
    fail(ErrorCode::InvalidArgument, "total point count below boundary count");
  return ball_facet_upper_bound(points_total, points_boundary, d);
}

ScreeningReport screen(const LatticePolytope& p, std::int64_t oracle_budget,
                       std::int64_t point_budget) {
  ScreeningReport rep;
  rep.polytope = p;
  rep.dim = p.ambient_dim();
  rep.search_budget = oracle_budget;

  LatticePointSet pts;
  try {
    pts = p.lattice_points(point_budget);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PointBudgetExceeded) throw;
    rep.verdict = Verdict::Inconclusive;
    rep.limiting_stage = "point_enumeration";
    return rep;
  }
  rep.points_total = Int(static_cast<long>(pts.all.size()));
  rep.points_boundary = Int(static_cast<long>(pts.boundary.size()));
  rep.volume = p.normalized_volume();
  rep.bound_rhs = ub_final_rhs(*rep.points_total, *rep.points_boundary, rep.dim);
  rep.bound_holds = *rep.volume <= *rep.bound_rhs;

  const bool elementary = pts.all == p.vertices();
  if (elementary && static_cast<int>(p.vertices().size()) == rep.dim + 1 &&
      *rep.volume == 1) {
    rep.verdict = Verdict::Smooth;
    return rep;
  }
  if (elementary) {
    rep.verdict = Verdict::TerminalA;
    return rep;
  }
  if (!*rep.bound_holds) {
    rep.verdict = Verdict::ClassBByBound;  // Eq.-(9) contrapositive, no search
    return rep;
  }

  BasicSearchResult sr = basic_triangulation_search(p, oracle_budget, point_budget);
  rep.search_status = sr.status;
  rep.search_nodes = sr.nodes;
  switch (sr.status) {
    case BasicSearchResult::Status::Witness:
      rep.verdict = Verdict::ClassC;
      rep.witness = std::move(sr.witness);
      break;
    case BasicSearchResult::Status::ExhaustedNone:
      rep.verdict = Verdict::ClassBByExhaustion;
      break;
    case BasicSearchResult::Status::BudgetExceeded:
      rep.verdict = Verdict::Inconclusive;
      rep.limiting_stage = "basic_triangulation_search";
      break;
  }
  return rep;
}

ScreeningReport screen_cone(const Cone& c, std::int64_t oracle_budget,
                            std::int64_t point_budget) {
  GorensteinOutcome g = gorenstein_vector(c);
  if (!g.ok()) {
    ScreeningReport rep;
    rep.cone = c;
    rep.gorenstein = std::move(g);
    rep.dim = c.ambient_dim - 1;
    rep.search_budget = oracle_budget;
    return rep;
  }
  SupportPolytope sp = support_polytope(c, *g.certificate);
  ScreeningReport rep = screen(sp.polytope, oracle_budget, point_budget);
  rep.cone = c;
  rep.gorenstein = std::move(g);
  rep.chart = std::move(sp.chart);
  return rep;
}

}  // namespace crepant
