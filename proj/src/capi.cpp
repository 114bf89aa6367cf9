#include "crepant.h"

#include <cstring>
#include <new>
#include <string>

#include "crepant/errors.hpp"
#include "crepant/io.hpp"

using namespace crepant;

struct crp_polytope {
  LatticePolytope p;
};

struct crp_cone {
  Cone c;
};

struct crp_report {
  ScreeningReport r;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** errmsg, const std::string& message) {
  if (errmsg) *errmsg = dup_string(message);
}

crp_status status_of(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
      return CRP_ERR_PARSE;
    case ErrorCode::PointBudgetExceeded:
    case ErrorCode::SearchBudgetExceeded:
      return CRP_ERR_BUDGET;
    case ErrorCode::Internal:
      return CRP_ERR_INTERNAL;
    case ErrorCode::ZeroVector:
    case ErrorCode::DegenerateInput:
    case ErrorCode::DuplicateVertex:
    case ErrorCode::RedundantVertex:
    case ErrorCode::ContainsLine:
    case ErrorCode::NotGorenstein:
    case ErrorCode::InvalidTriangulation:
      return CRP_ERR_GEOMETRY;
    default:
      return CRP_ERR_ARGUMENT;
  }
}

template <typename Fn>
crp_status guarded(char** errmsg, Fn&& fn) {
  try {
    fn();
    return CRP_OK;
  } catch (const Error& e) {
    set_error(errmsg, e.what());
    return status_of(e);
  } catch (const std::bad_alloc&) {
    set_error(errmsg, "out of memory");
    return CRP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(errmsg, e.what());
    return CRP_ERR_INTERNAL;
  }
}

std::vector<IntVec> rows_from(int32_t dim, int32_t count, const int64_t* coords) {
  if (dim < 1 || count < 1 || coords == nullptr)
    fail(ErrorCode::InvalidArgument, "need dim >= 1, count >= 1 and coordinates");
  std::vector<IntVec> rows;
  rows.reserve(static_cast<std::size_t>(count));
  for (int32_t r = 0; r < count; ++r) {
    IntVec v(static_cast<std::size_t>(dim));
    for (int32_t c = 0; c < dim; ++c)
      v[static_cast<std::size_t>(c)] = Int(static_cast<long>(coords[static_cast<std::size_t>(r) * dim + c]));
    rows.push_back(std::move(v));
  }
  return rows;
}

std::int64_t or_default(int64_t v, std::int64_t fallback) {
  return v >= 0 ? v : fallback;
}

crp_status get_int_field(const std::optional<Int>& field, int64_t* out) {
  if (!out) return CRP_ERR_ARGUMENT;
  if (!field || !fits_int64(*field)) return CRP_ERR_ARGUMENT;
  *out = to_int64(*field);
  return CRP_OK;
}

crp_status stage_json(const crp_polytope* p, const char* command, int exhaustive,
                      int64_t search_budget, int64_t point_budget,
                      char** json_out, char** errmsg) {
  if (!p || !json_out) return CRP_ERR_ARGUMENT;
  *json_out = nullptr;
  return guarded(errmsg, [&] {
    InputDocument doc;
    doc.polytope = p->p;
    CommandOptions opts;
    opts.explicit_budget = search_budget;
    opts.fallback_point_budget = point_budget;
    opts.exhaustive = exhaustive != 0;
    CommandResult r = run_command(command, doc, opts);
    *json_out = dup_string(r.document);
  });
}

}  // namespace

extern "C" {

const char* crp_version(void) { return "1.0.0"; }

void crp_string_free(char* s) { delete[] s; }
void crp_polytope_free(crp_polytope* p) { delete p; }
void crp_cone_free(crp_cone* c) { delete c; }
void crp_report_free(crp_report* r) { delete r; }

crp_status crp_polytope_new(int32_t dim, int32_t count, const int64_t* coords,
                            crp_polytope** out, char** errmsg) {
  if (!out) return CRP_ERR_ARGUMENT;
  *out = nullptr;
  return guarded(errmsg, [&] {
    *out = new crp_polytope{LatticePolytope(dim, rows_from(dim, count, coords))};
  });
}

crp_status crp_cone_new(int32_t dim, int32_t count, const int64_t* coords,
                        crp_cone** out, char** errmsg) {
  if (!out) return CRP_ERR_ARGUMENT;
  *out = nullptr;
  return guarded(errmsg, [&] {
    *out = new crp_cone{make_cone(dim, rows_from(dim, count, coords))};
  });
}

crp_status crp_input_parse(const char* text, crp_polytope** poly_out,
                           crp_cone** cone_out, int64_t* budget_out,
                           char** errmsg) {
  if (!text || !poly_out || !cone_out) return CRP_ERR_ARGUMENT;
  *poly_out = nullptr;
  *cone_out = nullptr;
  if (budget_out) *budget_out = -1;
  return guarded(errmsg, [&] {
    InputDocument doc = parse_input(text);
    if (doc.budget && budget_out) *budget_out = *doc.budget;
    if (doc.cone)
      *cone_out = new crp_cone{std::move(*doc.cone)};
    else
      *poly_out = new crp_polytope{std::move(*doc.polytope)};
  });
}

crp_status crp_cone_support_polytope(const crp_cone* c, crp_polytope** out,
                                     char** errmsg) {
  if (!c || !out) return CRP_ERR_ARGUMENT;
  *out = nullptr;
  return guarded(errmsg, [&] {
    GorensteinOutcome g = gorenstein_vector(c->c);
    if (!g.ok())
      fail(ErrorCode::NotGorenstein,
           "cone is not Gorenstein (" + to_string(*g.failure) + ")");
    *out = new crp_polytope{support_polytope(c->c, *g.certificate).polytope};
  });
}

crp_status crp_run(const char* command, const char* input_text,
                   int64_t search_budget, int64_t point_budget, int verbose,
                   int exhaustive, char** document_out, int* budget_limited_out,
                   char** errmsg) {
  if (!command || !input_text || !document_out) return CRP_ERR_ARGUMENT;
  *document_out = nullptr;
  if (budget_limited_out) *budget_limited_out = 0;
  return guarded(errmsg, [&] {
    InputDocument doc = parse_input(input_text);
    CommandOptions opts;
    opts.explicit_budget = search_budget;
    opts.fallback_point_budget = point_budget;
    opts.verbose = verbose != 0;
    opts.exhaustive = exhaustive != 0;
    CommandResult r = run_command(command, doc, opts);
    *document_out = dup_string(r.document);
    if (budget_limited_out) *budget_limited_out = r.budget_limited ? 1 : 0;
  });
}

crp_status crp_screen_polytope(const crp_polytope* p, int64_t search_budget,
                               int64_t point_budget, crp_report** out,
                               char** errmsg) {
  if (!p || !out) return CRP_ERR_ARGUMENT;
  *out = nullptr;
  return guarded(errmsg, [&] {
    *out = new crp_report{screen(p->p, or_default(search_budget, kDefaultSearchBudget),
                                 or_default(point_budget, kDefaultPointBudget))};
  });
}

crp_status crp_screen_cone(const crp_cone* c, int64_t search_budget,
                           int64_t point_budget, crp_report** out, char** errmsg) {
  if (!c || !out) return CRP_ERR_ARGUMENT;
  *out = nullptr;
  return guarded(errmsg, [&] {
    *out = new crp_report{screen_cone(c->c, or_default(search_budget, kDefaultSearchBudget),
                                      or_default(point_budget, kDefaultPointBudget))};
  });
}

crp_status crp_report_document(const crp_report* r, int verbose, char** json_out,
                               char** errmsg) {
  if (!r || !json_out) return CRP_ERR_ARGUMENT;
  *json_out = nullptr;
  return guarded(errmsg, [&] { *json_out = dup_string(report_document(r->r, verbose != 0)); });
}

const char* crp_report_verdict(const crp_report* r) {
  if (!r) return nullptr;
  if (!r->r.verdict) return "non_gorenstein";
  switch (*r->r.verdict) {
    case Verdict::Smooth: return "smooth";
    case Verdict::TerminalA: return "terminal_A";
    case Verdict::ClassBByBound: return "class_B_by_bound";
    case Verdict::ClassBByExhaustion: return "class_B_by_exhaustion";
    case Verdict::ClassC: return "class_C";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

const char* crp_report_search_status(const crp_report* r) {
  if (!r || !r->r.search_status) return nullptr;
  switch (*r->r.search_status) {
    case BasicSearchResult::Status::Witness: return "witness";
    case BasicSearchResult::Status::ExhaustedNone: return "exhausted_none";
    case BasicSearchResult::Status::BudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

crp_status crp_report_volume(const crp_report* r, int64_t* out) {
  if (!r) return CRP_ERR_ARGUMENT;
  return get_int_field(r->r.volume, out);
}

crp_status crp_report_bound_rhs(const crp_report* r, int64_t* out) {
  if (!r) return CRP_ERR_ARGUMENT;
  return get_int_field(r->r.bound_rhs, out);
}

crp_status crp_report_points(const crp_report* r, int64_t* total_out,
                             int64_t* boundary_out) {
  if (!r) return CRP_ERR_ARGUMENT;
  crp_status s = get_int_field(r->r.points_total, total_out);
  if (s != CRP_OK) return s;
  return get_int_field(r->r.points_boundary, boundary_out);
}

int crp_report_bound_holds(const crp_report* r) {
  if (!r || !r->r.bound_holds) return -1;
  return *r->r.bound_holds ? 1 : 0;
}

crp_status crp_polytope_points_json(const crp_polytope* p, int64_t point_budget,
                                    char** json_out, char** errmsg) {
  return stage_json(p, "points", 0, -1, point_budget, json_out, errmsg);
}

crp_status crp_polytope_volume_json(const crp_polytope* p, char** json_out,
                                    char** errmsg) {
  return stage_json(p, "volume", 0, -1, -1, json_out, errmsg);
}

crp_status crp_polytope_bound_json(const crp_polytope* p, int64_t point_budget,
                                   char** json_out, char** errmsg) {
  return stage_json(p, "bound", 0, -1, point_budget, json_out, errmsg);
}

crp_status crp_polytope_fvector_json(const crp_polytope* p, int64_t point_budget,
                                     char** json_out, char** errmsg) {
  return stage_json(p, "fvector", 0, -1, point_budget, json_out, errmsg);
}

crp_status crp_polytope_triangulate_json(const crp_polytope* p, int exhaustive,
                                         int64_t search_budget,
                                         int64_t point_budget, char** json_out,
                                         char** errmsg) {
  return stage_json(p, "triangulate", exhaustive, search_budget, point_budget,
                    json_out, errmsg);
}

}  // extern "C"
