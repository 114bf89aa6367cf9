#include "crepant/io.hpp"

#include <json.hpp>

#include "crepant/errors.hpp"

namespace crepant {

namespace {

using Json = nlohmann::ordered_json;

// Exact integers in documents: plain JSON numbers while they fit in 64 bits,
// decimal strings beyond that.
Json json_int(const Int& v) {
  if (fits_int64(v)) return Json(to_int64(v));
  return Json(v.get_str());
}

Json json_vec(const IntVec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(json_int(x));
  return a;
}

Json json_vecs(const std::vector<IntVec>& vs) {
  Json a = Json::array();
  for (const IntVec& v : vs) a.push_back(json_vec(v));
  return a;
}

Json json_cells(const std::vector<std::vector<int>>& cells) {
  Json a = Json::array();
  for (const auto& cell : cells) {
    Json c = Json::array();
    for (int i : cell) c.push_back(i);
    a.push_back(std::move(c));
  }
  return a;
}

Int parse_coordinate(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    Int v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
      fail(ErrorCode::ParseError, where + ": '" + s + "' is not a decimal integer");
    return v;
  }
  if (j.is_number_float())
    fail(ErrorCode::ParseError,
         where + ": non-integer or oversized number; quote big integers as strings");
  fail(ErrorCode::ParseError, where + ": expected an integer");
}

std::vector<IntVec> parse_vector_list(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    fail(ErrorCode::ParseError, where + ": expected a non-empty array of integer vectors");
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& row = j[i];
    const std::string rw = where + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.empty())
      fail(ErrorCode::ParseError, rw + ": expected a non-empty integer array");
    IntVec v;
    for (std::size_t c = 0; c < row.size(); ++c)
      v.push_back(parse_coordinate(row[c], rw + "[" + std::to_string(c) + "]"));
    out.push_back(std::move(v));
  }
  for (const IntVec& v : out) {
    if (v.size() != out.front().size())
      fail(ErrorCode::ParseError, where + ": vectors of mixed dimensions");
  }
  return out;
}

Json input_echo(const InputDocument& input) {
  Json j;
  if (input.cone) {
    j["kind"] = "cone";
    j["ambient_dim"] = input.cone->ambient_dim;
    j["rays"] = json_vecs(input.cone->rays);
  } else {
    j["kind"] = "polytope";
    j["ambient_dim"] = input.polytope->ambient_dim();
    j["vertices"] = json_vecs(input.polytope->vertices());
  }
  return j;
}

std::int64_t resolve_budget(const InputDocument& input, const CommandOptions& o) {
  if (o.explicit_budget >= 0) return o.explicit_budget;
  if (input.budget) return *input.budget;
  if (o.fallback_budget >= 0) return o.fallback_budget;
  return kDefaultSearchBudget;
}

std::int64_t resolve_point_budget(const CommandOptions& o) {
  return o.fallback_point_budget >= 0 ? o.fallback_point_budget : kDefaultPointBudget;
}

// Stage commands need the polytope; cone inputs go through the Gorenstein
// slice and are rejected when no certificate exists.
LatticePolytope stage_polytope(const InputDocument& input) {
  if (input.polytope) return *input.polytope;
  GorensteinOutcome g = gorenstein_vector(*input.cone);
  if (!g.ok())
    fail(ErrorCode::NotGorenstein,
         "cone is not Gorenstein (" + to_string(*g.failure) +
             "); the support polytope does not exist");
  return support_polytope(*input.cone, *g.certificate).polytope;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

InputDocument parse_input(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::ParseError, std::string("input document: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorCode::ParseError, "input document: expected a JSON object");
  const bool has_cone = j.contains("cone");
  const bool has_poly = j.contains("polytope");
  if (has_cone == has_poly)
    fail(ErrorCode::ParseError,
         "input document: exactly one of 'cone' or 'polytope' must be present");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "cone" && key != "polytope" && key != "options")
      fail(ErrorCode::ParseError, "input document: unknown key '" + key + "'");
  }

  InputDocument doc;
  if (has_cone) {
    const Json& c = j["cone"];
    if (!c.is_object() || !c.contains("rays"))
      fail(ErrorCode::ParseError, "/cone: expected an object with a 'rays' array");
    std::vector<IntVec> rays = parse_vector_list(c["rays"], "/cone/rays");
    doc.cone = make_cone(static_cast<int>(rays.front().size()), rays);
  } else {
    const Json& p = j["polytope"];
    if (!p.is_object() || !p.contains("vertices"))
      fail(ErrorCode::ParseError, "/polytope: expected an object with a 'vertices' array");
    std::vector<IntVec> verts = parse_vector_list(p["vertices"], "/polytope/vertices");
    doc.polytope = LatticePolytope(static_cast<int>(verts.front().size()), verts);
  }
  if (j.contains("options")) {
    const Json& o = j["options"];
    if (!o.is_object()) fail(ErrorCode::ParseError, "/options: expected an object");
    for (const auto& [key, value] : o.items()) {
      (void)value;
      if (key != "budget")
        fail(ErrorCode::ParseError, "/options: unknown key '" + key + "'");
    }
    if (o.contains("budget")) {
      const Json& b = o["budget"];
      if (!b.is_number_integer() && !b.is_number_unsigned())
        fail(ErrorCode::ParseError, "/options/budget: expected a positive integer");
      std::int64_t v = b.get<std::int64_t>();
      if (v <= 0) fail(ErrorCode::ParseError, "/options/budget: expected a positive integer");
      doc.budget = v;
    }
  }
  return doc;
}

std::string verdict_string(const ScreeningReport& report) {
  if (report.verdict) return to_string(*report.verdict);
  return "non_gorenstein";
}

namespace {

Json report_json(const ScreeningReport& rep, const Json& echo, bool verbose) {
  Json j;
  j["command"] = "screen";
  j["input"] = echo;
  if (rep.gorenstein) {
    Json g;
    if (rep.gorenstein->ok()) {
      g["status"] = "certificate";
      g["m"] = json_vec(rep.gorenstein->certificate->m_sigma);
    } else {
      g["status"] = to_string(*rep.gorenstein->failure);
    }
    j["gorenstein"] = std::move(g);
  }
  j["dimension"] = rep.dim;
  if (rep.points_total) {
    Json pts;
    pts["total"] = json_int(*rep.points_total);
    pts["boundary"] = json_int(*rep.points_boundary);
    pts["interior"] = json_int(*rep.points_total - *rep.points_boundary);
    j["points"] = std::move(pts);
  }
  if (rep.volume) j["volume"] = json_int(*rep.volume);
  if (rep.bound_rhs) {
    Json b;
    b["rhs"] = json_int(*rep.bound_rhs);
    b["holds"] = *rep.bound_holds;
    j["bound"] = std::move(b);
  }
  j["verdict"] = verdict_string(rep);
  if (rep.search_status) {
    Json s;
    s["status"] = to_string(*rep.search_status);
    s["nodes"] = rep.search_nodes;
    s["budget"] = rep.search_budget;
    j["search"] = std::move(s);
  }
  if (rep.witness) {
    Json w;
    w["points"] = json_vecs(rep.witness->points);
    w["cells"] = json_cells(rep.witness->cells);
    j["witness"] = std::move(w);
  }
  if (!rep.limiting_stage.empty()) j["limited_by"] = rep.limiting_stage;
  if (verbose && rep.polytope) {
    Json ev;
    if (rep.chart) {
      Json fl;
      fl["base"] = json_vec(rep.chart->base);
      fl["basis"] = json_vecs(rep.chart->basis_columns);
      ev["flattening"] = std::move(fl);
    }
    ev["polytope_vertices"] = json_vecs(rep.polytope->vertices());
    Json fc = Json::array();
    for (const HalfSpace& h : rep.polytope->facets()) {
      Json f;
      f["normal"] = json_vec(h.normal);
      f["offset"] = json_int(h.offset);
      fc.push_back(std::move(f));
    }
    ev["facets"] = std::move(fc);
    j["evidence"] = std::move(ev);
  }
  return j;
}

}  // namespace

std::string report_document(const ScreeningReport& report, bool verbose) {
  InputDocument echo_src;
  if (report.cone) {
    echo_src.cone = report.cone;
  } else {
    echo_src.polytope = report.polytope;
  }
  return dump(report_json(report, input_echo(echo_src), verbose));
}

CommandResult run_command(const std::string& command, const InputDocument& input,
                          const CommandOptions& options) {
  const std::int64_t budget = resolve_budget(input, options);
  const std::int64_t point_budget = resolve_point_budget(options);
  const Json echo = input_echo(input);

  if (command == "screen") {
    ScreeningReport rep = input.cone ? screen_cone(*input.cone, budget, point_budget)
                                     : screen(*input.polytope, budget, point_budget);
    CommandResult r;
    r.document = dump(report_json(rep, echo, options.verbose));
    r.budget_limited = rep.verdict && *rep.verdict == Verdict::Inconclusive;
    return r;
  }

  LatticePolytope p = stage_polytope(input);

  if (command == "points") {
    LatticePointSet pts = p.lattice_points(point_budget);
    Json j;
    j["command"] = "points";
    j["input"] = echo;
    Json body;
    body["total"] = static_cast<std::int64_t>(pts.all.size());
    body["boundary"] = static_cast<std::int64_t>(pts.boundary.size());
    body["interior"] = static_cast<std::int64_t>(pts.interior.size());
    j["points"] = std::move(body);
    if (options.verbose) {
      j["points"]["all"] = json_vecs(pts.all);
      j["points"]["boundary_points"] = json_vecs(pts.boundary);
      j["points"]["interior_points"] = json_vecs(pts.interior);
    }
    return {dump(j), false};
  }

  if (command == "volume") {
    Json j;
    j["command"] = "volume";
    j["input"] = echo;
    j["volume"] = json_int(p.normalized_volume());
    return {dump(j), false};
  }

  if (command == "bound") {
    LatticePointSet pts = p.lattice_points(point_budget);
    Int volume = p.normalized_volume();
    Int rhs = ub_final_rhs(Int(static_cast<long>(pts.all.size())),
                           Int(static_cast<long>(pts.boundary.size())), p.ambient_dim());
    Json j;
    j["command"] = "bound";
    j["input"] = echo;
    j["rhs"] = json_int(rhs);
    j["volume"] = json_int(volume);
    j["holds"] = volume <= rhs;
    return {dump(j), false};
  }

  if (command == "fvector") {
    GeometricTriangulation t = full_triangulation(p, point_budget);
    FVector f = f_vector_of(t);
    Json j;
    j["command"] = "fvector";
    j["input"] = echo;
    j["complex_dim"] = f.complex_dim;
    Json arr = Json::array();  // f_{-1} .. f_D
    for (const Int& c : f.counts) arr.push_back(json_int(c));
    j["f"] = std::move(arr);
    return {dump(j), false};
  }

  if (command == "triangulate") {
    Json j;
    j["command"] = "triangulate";
    j["input"] = echo;
    if (!options.exhaustive) {
      GeometricTriangulation t = full_triangulation(p, point_budget);
      j["mode"] = "full";
      j["cell_count"] = static_cast<std::int64_t>(t.cells.size());
      j["maximal"] = is_maximal(t, p, point_budget);
      j["basic"] = is_basic(t, p, point_budget);
      j["points"] = json_vecs(t.points);
      j["cells"] = json_cells(t.cells);
      return {dump(j), false};
    }
    BasicSearchResult sr = basic_triangulation_search(p, budget, point_budget);
    j["mode"] = "exhaustive";
    j["status"] = to_string(sr.status);
    j["nodes"] = sr.nodes;
    j["budget"] = budget;
    if (sr.witness) {
      j["cell_count"] = static_cast<std::int64_t>(sr.witness->cells.size());
      j["points"] = json_vecs(sr.witness->points);
      j["cells"] = json_cells(sr.witness->cells);
    }
    return {dump(j), sr.status == BasicSearchResult::Status::BudgetExceeded};
  }

  fail(ErrorCode::InvalidArgument, "unknown command '" + command + "'");
}

}  // namespace crepant
