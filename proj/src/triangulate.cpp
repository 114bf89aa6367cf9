#include "crepant/triangulate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "crepant/errors.hpp"
#include "crepant/simplex_lp.hpp"

namespace crepant {

std::string to_string(BasicSearchResult::Status s) {
  switch (s) {
    case BasicSearchResult::Status::Witness: return "witness";
    case BasicSearchResult::Status::ExhaustedNone: return "exhausted_none";
    case BasicSearchResult::Status::BudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

namespace {

Int cell_volume(const std::vector<IntVec>& pts, const std::vector<int>& cell) {
  const int d = static_cast<int>(cell.size()) - 1;
  IntMatrix m(d, d);
  const IntVec& v0 = pts[static_cast<std::size_t>(cell[0])];
  for (int r = 0; r < d; ++r) {
    IntVec diff = vec_sub(pts[static_cast<std::size_t>(cell[static_cast<std::size_t>(r + 1)])], v0);
    for (int c = 0; c < d; ++c) m.at(r, c) = diff[static_cast<std::size_t>(c)];
  }
  Int det = determinant(m);
  return det < 0 ? Int(-det) : det;
}

// conv(A) and conv(B) intersect in the face spanned by their shared vertices
// iff no common point carries barycentric mass outside the shared set; that
// maximum mass is an exact LP over the rationals.
bool properly_intersect(int dim, const std::vector<IntVec>& pts,
                        const std::vector<int>& a, const std::vector<int>& b) {
  // strict bounding-box separation means the cells are disjoint
  for (int c = 0; c < dim; ++c) {
    Int amin, amax, bmin, bmax;
    bool first = true;
    for (int i : a) {
      const Int& x = pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (first || x < amin) amin = x;
      if (first || x > amax) amax = x;
      first = false;
    }
    first = true;
    for (int i : b) {
      const Int& x = pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (first || x < bmin) bmin = x;
      if (first || x > bmax) bmax = x;
      first = false;
    }
    if (amax < bmin || bmax < amin) return true;
  }

  std::vector<int> shared;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(shared));

  // Facet-sharing pair: proper exactly when the two opposite vertices lie
  // strictly on opposite sides of the shared hyperplane.
  if (static_cast<int>(shared.size()) == dim) {
    std::vector<IntVec> diffs;
    const IntVec& s0 = pts[static_cast<std::size_t>(shared[0])];
    for (std::size_t i = 1; i < shared.size(); ++i)
      diffs.push_back(vec_sub(pts[static_cast<std::size_t>(shared[i])], s0));
    IntVec n = orthogonal_vector(diffs, dim);
    int a_opp = -1, b_opp = -1;
    for (int v : a)
      if (!std::binary_search(shared.begin(), shared.end(), v)) a_opp = v;
    for (int v : b)
      if (!std::binary_search(shared.begin(), shared.end(), v)) b_opp = v;
    Int c0 = dot(n, s0);
    Int sa = dot(n, pts[static_cast<std::size_t>(a_opp)]) - c0;
    Int sb = dot(n, pts[static_cast<std::size_t>(b_opp)]) - c0;
    return (sa > 0) != (sb > 0);  // nondegenerate cells keep both nonzero
  }

  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  const int nvars = na + nb;
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  for (int c = 0; c < dim; ++c) {
    std::vector<Rat> row(static_cast<std::size_t>(nvars));
    for (int i = 0; i < na; ++i)
      row[static_cast<std::size_t>(i)] = Rat(pts[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])][static_cast<std::size_t>(c)]);
    for (int j = 0; j < nb; ++j)
      row[static_cast<std::size_t>(na + j)] = Rat(-pts[static_cast<std::size_t>(b[static_cast<std::size_t>(j)])][static_cast<std::size_t>(c)]);
    rows.push_back(std::move(row));
    rhs.push_back(Rat(0));
  }
  std::vector<Rat> sum_a(static_cast<std::size_t>(nvars), Rat(0));
  for (int i = 0; i < na; ++i) sum_a[static_cast<std::size_t>(i)] = 1;
  rows.push_back(sum_a);
  rhs.push_back(Rat(1));
  std::vector<Rat> sum_b(static_cast<std::size_t>(nvars), Rat(0));
  for (int j = 0; j < nb; ++j) sum_b[static_cast<std::size_t>(na + j)] = 1;
  rows.push_back(sum_b);
  rhs.push_back(Rat(1));

  std::vector<Rat> obj(static_cast<std::size_t>(nvars), Rat(0));
  for (int i = 0; i < na; ++i) {
    if (!std::binary_search(shared.begin(), shared.end(), a[static_cast<std::size_t>(i)]))
      obj[static_cast<std::size_t>(i)] = 1;
  }
  for (int j = 0; j < nb; ++j) {
    if (!std::binary_search(shared.begin(), shared.end(), b[static_cast<std::size_t>(j)]))
      obj[static_cast<std::size_t>(na + j)] = 1;
  }

  LpSolution sol = maximize_equality_lp(rows, rhs, obj);
  if (sol.status == LpStatus::Infeasible) return true;  // disjoint hulls
  return sol.value == 0;
}

std::string cell_name(const std::vector<int>& cell) {
  std::string s = "{";
  for (std::size_t i = 0; i < cell.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(cell[i]);
  }
  return s + "}";
}

void check_structure(const GeometricTriangulation& t) {
  const int d = t.ambient_dim;
  if (t.cells.empty()) fail(ErrorCode::InvalidTriangulation, "no cells");
  for (const auto& cell : t.cells) {
    if (static_cast<int>(cell.size()) != d + 1)
      fail(ErrorCode::InvalidTriangulation, "cell " + cell_name(cell) + " is not a " +
                                                std::to_string(d) + "-simplex");
    for (std::size_t i = 0; i < cell.size(); ++i) {
      if (cell[i] < 0 || cell[i] >= static_cast<int>(t.points.size()))
        fail(ErrorCode::InvalidTriangulation, "point index out of range in cell " + cell_name(cell));
      if (i > 0 && cell[i] <= cell[i - 1])
        fail(ErrorCode::InvalidTriangulation, "cell indices not strictly increasing in " + cell_name(cell));
    }
    if (cell_volume(t.points, cell) == 0)
      fail(ErrorCode::InvalidTriangulation, "degenerate cell " + cell_name(cell));
  }
}

std::set<int> used_point_indices(const GeometricTriangulation& t) {
  std::set<int> used;
  for (const auto& cell : t.cells) used.insert(cell.begin(), cell.end());
  return used;
}

}  // namespace

ValidityReport validate_triangulation(const GeometricTriangulation& t,
                                      const LatticePolytope& p) {
  ValidityReport report;
  const int d = t.ambient_dim;
  if (d != p.ambient_dim()) {
    report.issues.push_back({ValidityIssue::Kind::IndexOutOfRange, {}, {}, "ambient dimension mismatch"});
    return report;
  }
  for (const auto& cell : t.cells) {
    if (static_cast<int>(cell.size()) != d + 1 ||
        !std::is_sorted(cell.begin(), cell.end()) ||
        std::adjacent_find(cell.begin(), cell.end()) != cell.end() ||
        cell.front() < 0 || cell.back() >= static_cast<int>(t.points.size())) {
      report.issues.push_back({ValidityIssue::Kind::IndexOutOfRange, cell, {}, "malformed cell " + cell_name(cell)});
      return report;
    }
  }
  for (const auto& cell : t.cells) {
    if (cell_volume(t.points, cell) == 0)
      report.issues.push_back({ValidityIssue::Kind::DegenerateCell, cell, {}, "degenerate cell " + cell_name(cell)});
  }
  for (int i : used_point_indices(t)) {
    if (p.contains(t.points[static_cast<std::size_t>(i)]) == Membership::Outside)
      report.issues.push_back({ValidityIssue::Kind::PointOutsidePolytope, {i}, {},
                               "point " + to_string(t.points[static_cast<std::size_t>(i)]) + " lies outside the polytope"});
  }
  if (!report.issues.empty()) return report;

  for (const auto& cell : t.cells) report.cell_volume_sum += cell_volume(t.points, cell);
  Int target = p.normalized_volume();
  if (report.cell_volume_sum != target)
    report.issues.push_back({ValidityIssue::Kind::VolumeMismatch, {}, {},
                             "cell volumes sum to " + to_string(report.cell_volume_sum) +
                                 ", polytope has normalized volume " + to_string(target)});

  for (std::size_t i = 0; i < t.cells.size(); ++i) {
    for (std::size_t j = i + 1; j < t.cells.size(); ++j) {
      if (!properly_intersect(d, t.points, t.cells[i], t.cells[j]))
        report.issues.push_back({ValidityIssue::Kind::ImproperPair, t.cells[i], t.cells[j],
                                 "cells " + cell_name(t.cells[i]) + " and " + cell_name(t.cells[j]) +
                                     " do not intersect in a common face"});
    }
  }
  return report;
}

FVector f_vector_of(const GeometricTriangulation& t) {
  check_structure(t);
  const int d = t.ambient_dim;
  std::set<std::vector<int>> faces;
  for (const auto& cell : t.cells) {
    const int n = static_cast<int>(cell.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> face;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) face.push_back(cell[static_cast<std::size_t>(i)]);
      }
      faces.insert(std::move(face));
    }
  }
  std::vector<Int> counts(static_cast<std::size_t>(d + 2), Int(0));
  counts[0] = 1;
  for (const auto& face : faces) ++counts[face.size()];
  return FVector(d, std::move(counts));
}

BoundaryComplex boundary_of(const GeometricTriangulation& t) {
  check_structure(t);
  std::map<std::vector<int>, int> incidence;
  for (const auto& cell : t.cells) {
    for (std::size_t drop = 0; drop < cell.size(); ++drop) {
      std::vector<int> face;
      for (std::size_t i = 0; i < cell.size(); ++i) {
        if (i != drop) face.push_back(cell[i]);
      }
      ++incidence[std::move(face)];
    }
  }
  BoundaryComplex bd;
  for (const auto& [face, count] : incidence) {
    if (count > 2)
      fail(ErrorCode::InvalidTriangulation,
           "face " + cell_name(face) + " lies in " + std::to_string(count) + " cells");
    if (count == 1) bd.facets.push_back(face);
  }
  return bd;
}

bool is_maximal(const GeometricTriangulation& t, const LatticePolytope& p,
                std::int64_t point_budget) {
  check_structure(t);
  std::set<IntVec> verts;
  for (int i : used_point_indices(t)) verts.insert(t.points[static_cast<std::size_t>(i)]);
  LatticePointSet lp = p.lattice_points(point_budget);
  return std::vector<IntVec>(verts.begin(), verts.end()) == lp.all;
}

bool is_basic(const GeometricTriangulation& t, const LatticePolytope& p,
              std::int64_t point_budget) {
  check_structure(t);
  for (const auto& cell : t.cells) {
    if (cell_volume(t.points, cell) != 1) return false;
  }
  // every unimodular simplex is elementary, so basic forces maximal
  if (!is_maximal(t, p, point_budget))
    fail(ErrorCode::Internal,
         "basic triangulation is not maximal; the cell set cannot be a valid "
         "triangulation of the polytope");
  return true;
}

namespace {

std::optional<std::vector<Rat>> barycentric(const std::vector<IntVec>& pts,
                                            const std::vector<int>& cell,
                                            const IntVec& q) {
  const int d = static_cast<int>(q.size());
  const IntVec& v0 = pts[static_cast<std::size_t>(cell[0])];
  std::vector<IntVec> cols;
  for (int i = 1; i <= d; ++i)
    cols.push_back(vec_sub(pts[static_cast<std::size_t>(cell[static_cast<std::size_t>(i)])], v0));
  auto lam = solve_columns(cols, vec_sub(q, v0));
  if (!lam) return std::nullopt;
  std::vector<Rat> full(static_cast<std::size_t>(d + 1));
  Rat rest(0);
  for (int i = 0; i < d; ++i) {
    full[static_cast<std::size_t>(i + 1)] = (*lam)[static_cast<std::size_t>(i)];
    rest += (*lam)[static_cast<std::size_t>(i)];
  }
  full[0] = Rat(1) - rest;
  return full;
}

}  // namespace

GeometricTriangulation full_triangulation(const LatticePolytope& p,
                                          std::int64_t point_budget) {
  const int d = p.ambient_dim();
  GeometricTriangulation t;
  t.ambient_dim = d;
  t.points = p.lattice_points(point_budget).all;  // lex sorted
  const int m = static_cast<int>(t.points.size());

  // Seed simplex: greedy lex scan for d+1 affinely independent points.
  std::vector<int> seed{0};
  std::vector<IntVec> span;
  for (int i = 1; i < m && static_cast<int>(seed.size()) < d + 1; ++i) {
    std::vector<IntVec> trial = span;
    trial.push_back(vec_sub(t.points[static_cast<std::size_t>(i)], t.points[0]));
    if (rational_rank(trial) == static_cast<int>(trial.size())) {
      seed.push_back(i);
      span = std::move(trial);
    }
  }
  if (static_cast<int>(seed.size()) != d + 1)
    fail(ErrorCode::Internal, "full-dimensional polytope without a spanning simplex");

  std::set<std::vector<int>> cells;
  cells.insert(seed);
  std::set<int> inserted(seed.begin(), seed.end());

  for (int q = 0; q < m; ++q) {
    if (inserted.count(q)) continue;
    inserted.insert(q);
    const IntVec& qp = t.points[static_cast<std::size_t>(q)];

    std::vector<std::pair<std::vector<int>, std::vector<Rat>>> carriers;
    for (const auto& cell : cells) {
      auto lam = barycentric(t.points, cell, qp);
      if (!lam) continue;
      bool inside = true;
      for (const Rat& l : *lam) {
        if (l < 0) { inside = false; break; }
      }
      if (inside) carriers.emplace_back(cell, *lam);
    }

    if (!carriers.empty()) {
      // stellar split of every carrier at q
      for (const auto& [cell, lam] : carriers) {
        cells.erase(cell);
        for (std::size_t v = 0; v < cell.size(); ++v) {
          if (lam[v] == 0) continue;
          std::vector<int> fresh;
          for (std::size_t i = 0; i < cell.size(); ++i) {
            if (i != v) fresh.push_back(cell[i]);
          }
          fresh.push_back(q);
          std::sort(fresh.begin(), fresh.end());
          cells.insert(std::move(fresh));
        }
      }
      continue;
    }

    // q is outside the hull so far: cone over strictly visible boundary facets
    std::map<std::vector<int>, std::pair<int, std::vector<int>>> incidence;
    for (const auto& cell : cells) {
      for (std::size_t drop = 0; drop < cell.size(); ++drop) {
        std::vector<int> face;
        for (std::size_t i = 0; i < cell.size(); ++i) {
          if (i != drop) face.push_back(cell[i]);
        }
        auto& slot = incidence[face];
        ++slot.first;
        slot.second = cell;
      }
    }
    bool attached = false;
    for (const auto& [face, slot] : incidence) {
      if (slot.first != 1) continue;
      std::vector<IntVec> diffs;
      for (std::size_t i = 1; i < face.size(); ++i)
        diffs.push_back(vec_sub(t.points[static_cast<std::size_t>(face[i])],
                                t.points[static_cast<std::size_t>(face[0])]));
      IntVec n = orthogonal_vector(diffs, d);
      Int c0 = dot(n, t.points[static_cast<std::size_t>(face[0])]);
      // orient outward: the owning cell's opposite vertex lies strictly below
      int opposite = -1;
      for (int v : slot.second) {
        if (!std::binary_search(face.begin(), face.end(), v)) { opposite = v; break; }
      }
      Int vo = dot(n, t.points[static_cast<std::size_t>(opposite)]);
      if (vo > c0) {
        n = vec_neg(n);
        c0 = -c0;
      }
      if (dot(n, qp) > c0) {
        std::vector<int> fresh = face;
        fresh.push_back(q);
        std::sort(fresh.begin(), fresh.end());
        cells.insert(std::move(fresh));
        attached = true;
      }
    }
    if (!attached)
      fail(ErrorCode::Internal, "point " + to_string(qp) + " saw no boundary facet");
  }

  t.cells.assign(cells.begin(), cells.end());
  return t;
}

namespace {

struct BudgetHit {};

class BasicSearch {
 public:
  BasicSearch(const LatticePolytope& p, std::int64_t budget, std::int64_t point_budget)
      : poly_(p), budget_(budget) {
    dim_ = p.ambient_dim();
    points_ = p.lattice_points(point_budget).all;
    volume_ = p.normalized_volume();
  }

  BasicSearchResult run() {
    BasicSearchResult result;
    try {
      enumerate_candidates();
      if (search()) {
        result.status = BasicSearchResult::Status::Witness;
        GeometricTriangulation t;
        t.ambient_dim = dim_;
        t.points = points_;
        for (int c : chosen_) t.cells.push_back(candidates_[static_cast<std::size_t>(c)]);
        std::sort(t.cells.begin(), t.cells.end());
        if (!validate_triangulation(t, poly_).valid())
          fail(ErrorCode::Internal, "search produced an invalid triangulation");
        result.witness = std::move(t);
      } else {
        result.status = BasicSearchResult::Status::ExhaustedNone;
      }
    } catch (const BudgetHit&) {
      result.status = BasicSearchResult::Status::BudgetExceeded;
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  void charge() {
    if (++nodes_ > budget_) throw BudgetHit{};
  }

  void enumerate_candidates() {
    const int m = static_cast<int>(points_.size());
    const int k = dim_ + 1;
    if (m < k) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      charge();
      if (cell_volume(points_, idx) == 1) candidates_.push_back(idx);
      int t = k - 1;
      while (t >= 0 && idx[static_cast<std::size_t>(t)] == m - k + t) --t;
      if (t < 0) break;
      ++idx[static_cast<std::size_t>(t)];
      for (int i = t + 1; i < k; ++i)
        idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    by_point_.assign(points_.size(), {});
    for (int c = 0; c < static_cast<int>(candidates_.size()); ++c) {
      for (int v : candidates_[static_cast<std::size_t>(c)])
        by_point_[static_cast<std::size_t>(v)].push_back(c);
    }
    forbidden_.assign(candidates_.size(), false);
    cover_.assign(points_.size(), 0);
  }

  bool compatible(int i, int j) {
    if (i > j) std::swap(i, j);
    long long key = static_cast<long long>(i) * static_cast<long long>(candidates_.size()) + j;
    auto it = compat_.find(key);
    if (it != compat_.end()) return it->second;
    bool ok = properly_intersect(dim_, points_, candidates_[static_cast<std::size_t>(i)],
                                 candidates_[static_cast<std::size_t>(j)]);
    compat_.emplace(key, ok);
    return ok;
  }

  bool fits(int c) {
    if (forbidden_[static_cast<std::size_t>(c)]) return false;
    // newest cells are the most constraining; test them first
    for (auto it = chosen_.rbegin(); it != chosen_.rend(); ++it) {
      if (*it == c || !compatible(*it, c)) return false;
    }
    return true;
  }

  bool search() {
    charge();
    if (Int(static_cast<long>(chosen_.size())) == volume_) return true;

    int driver = -1;
    for (std::size_t pt = 0; pt < points_.size(); ++pt) {
      if (cover_[pt] == 0) { driver = static_cast<int>(pt); break; }
    }

    std::vector<int> options;
    if (driver >= 0) {
      for (int c : by_point_[static_cast<std::size_t>(driver)]) {
        if (fits(c)) options.push_back(c);
      }
    } else {
      for (int c = 0; c < static_cast<int>(candidates_.size()); ++c) {
        if (fits(c)) options.push_back(c);
      }
      // every remaining cell must come from options
      if (Int(static_cast<long>(chosen_.size() + options.size())) < volume_) return false;
    }

    std::vector<int> banned;
    bool found = false;
    for (int c : options) {
      chosen_.push_back(c);
      for (int v : candidates_[static_cast<std::size_t>(c)]) ++cover_[static_cast<std::size_t>(v)];
      found = search();
      if (found) break;
      chosen_.pop_back();
      for (int v : candidates_[static_cast<std::size_t>(c)]) --cover_[static_cast<std::size_t>(v)];
      forbidden_[static_cast<std::size_t>(c)] = true;  // dedup: later branches may not reuse c
      banned.push_back(c);
    }
    if (!found) {
      for (int c : banned) forbidden_[static_cast<std::size_t>(c)] = false;
    }
    return found;
  }

  const LatticePolytope& poly_;
  std::int64_t budget_;
  int dim_ = 0;
  std::vector<IntVec> points_;
  Int volume_;
  std::vector<std::vector<int>> candidates_;  // lex sorted by construction
  std::vector<std::vector<int>> by_point_;
  std::vector<bool> forbidden_;
  std::vector<int> cover_;
  std::vector<int> chosen_;
  std::unordered_map<long long, bool> compat_;
  std::int64_t nodes_ = 0;
};

}  // namespace

BasicSearchResult basic_triangulation_search(const LatticePolytope& p,
                                             std::int64_t budget,
                                             std::int64_t point_budget) {
  return BasicSearch(p, budget, point_budget).run();
}

}  // namespace crepant
