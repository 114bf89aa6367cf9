#include <doctest.h>

#include <random>
#include <set>

#include "crepant/polytope.hpp"
#include "support.hpp"

using namespace crepant;
using namespace testsupport;

TEST_CASE("unit square facets and membership") {
  LatticePolytope sq = unit_square();
  REQUIRE(sq.facets().size() == 4);
  std::set<HalfSpace> expect{{iv({-1, 0}), Int(0)},
                             {iv({0, -1}), Int(0)},
                             {iv({1, 0}), Int(1)},
                             {iv({0, 1}), Int(1)}};
  CHECK(std::set<HalfSpace>(sq.facets().begin(), sq.facets().end()) == expect);

  CHECK(sq.contains(iv({0, 0})) == Membership::Boundary);
  CHECK(sq.contains(iv({2, 2})) == Membership::Outside);
  CHECK_THROWS_AS(sq.contains(iv({1, 2, 3})), Error);

  LatticePointSet pts = sq.lattice_points();
  CHECK(pts.all.size() == 4);
  CHECK(pts.boundary.size() == 4);
  CHECK(pts.interior.empty());
  CHECK(sq.normalized_volume() == 2);
  CHECK(sq.is_elementary());
  CHECK_FALSE(sq.is_basic_simplex());
}

TEST_CASE("a segment is handled in dimension one") {
  LatticePolytope seg(1, ivs({{0}, {2}}));
  REQUIRE(seg.facets().size() == 2);
  std::set<HalfSpace> expect{{iv({-1}), Int(0)}, {iv({1}), Int(2)}};
  CHECK(std::set<HalfSpace>(seg.facets().begin(), seg.facets().end()) == expect);
  CHECK(seg.normalized_volume() == 2);
  LatticePointSet pts = seg.lattice_points();
  CHECK(pts.all.size() == 3);
  CHECK(pts.interior.size() == 1);
}

TEST_CASE("twice-dilated triangle") {
  LatticePolytope tri = double_triangle();
  CHECK(tri.facets().size() == 3);
  LatticePointSet pts = tri.lattice_points();
  CHECK(pts.all.size() == 6);
  CHECK(pts.boundary.size() == 6);
  CHECK(pts.interior.empty());
  CHECK(tri.normalized_volume() == 4);
  CHECK_FALSE(tri.is_elementary());
  CHECK_FALSE(tri.is_basic_simplex());
}

TEST_CASE("the worked example's simplex") {
  LatticePolytope s = paper_simplex();
  CHECK(s.facets().size() == 4);  // a 3-simplex has 4 facets
  LatticePointSet pts = s.lattice_points();
  CHECK(pts.all.size() == 8);
  CHECK(pts.boundary.size() == 4);
  CHECK(pts.interior.size() == 4);
  CHECK(s.normalized_volume() == 20);
  CHECK_FALSE(s.is_elementary());
  CHECK_FALSE(s.is_basic_simplex());
  // the four non-vertex lattice points sit in the relative interior
  for (const IntVec& p : pts.all) {
    bool is_vertex = std::find(s.vertices().begin(), s.vertices().end(), p) !=
                     s.vertices().end();
    if (!is_vertex) CHECK(s.contains(p) == Membership::Interior);
  }
}

TEST_CASE("unit simplices are basic") {
  for (int d = 1; d <= 4; ++d) {
    LatticePolytope s = unit_simplex(d);
    CHECK(s.normalized_volume() == 1);
    CHECK(s.is_basic_simplex());
    CHECK(s.is_elementary());
    CHECK(s.facets().size() == static_cast<std::size_t>(d + 1));
  }
}

TEST_CASE("construction rejects bad vertex lists") {
  CHECK_THROWS_AS(LatticePolytope(2, ivs({{0, 0}, {1, 1}, {2, 2}})), Error);  // degenerate
  CHECK_THROWS_AS(LatticePolytope(2, ivs({{0, 0}, {1, 0}, {0, 1}, {0, 0}})), Error);
  // interior point listed as a vertex
  CHECK_THROWS_AS(LatticePolytope(2, ivs({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}})), Error);
  // boundary midpoint listed as a vertex
  CHECK_THROWS_AS(LatticePolytope(2, ivs({{0, 0}, {2, 0}, {0, 2}, {1, 0}})), Error);
  CHECK_THROWS_AS(LatticePolytope(2, {}), Error);
  CHECK_THROWS_AS(LatticePolytope(2, ivs({{0, 0, 0}, {1, 0, 0}})), Error);

  try {
    LatticePolytope(2, ivs({{0, 0}, {2, 0}, {0, 2}, {1, 1}}));
    FAIL("redundant point accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RedundantVertex);
  }
}

TEST_CASE("from_point_cloud keeps exactly the hull vertices") {
  std::vector<IntVec> cloud = ivs({{0, 0}, {2, 0}, {0, 2}, {1, 1}, {1, 0}, {0, 1}, {2, 0}});
  LatticePolytope p = LatticePolytope::from_point_cloud(2, cloud);
  CHECK(p.vertices() == ivs({{0, 0}, {0, 2}, {2, 0}}));
}

TEST_CASE("point budget guard") {
  LatticePolytope big(2, ivs({{0, 0}, {5000, 0}, {0, 5000}}));
  CHECK_THROWS_AS(big.lattice_points(1000), Error);
  try {
    big.lattice_points(1000);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PointBudgetExceeded);
  }
}

TEST_CASE("lattice point partition and facet classification") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    LatticePolytope p = random_polytope(rng, 2);
    LatticePointSet pts = p.lattice_points();
    CHECK(pts.all.size() == pts.boundary.size() + pts.interior.size());
    for (const IntVec& v : p.vertices())
      CHECK(std::binary_search(pts.boundary.begin(), pts.boundary.end(), v));
    for (const IntVec& q : pts.interior) {
      for (const HalfSpace& h : p.facets()) CHECK(dot(h.normal, q) < h.offset);
    }
    for (const IntVec& q : pts.boundary) {
      bool tight = false;
      for (const HalfSpace& h : p.facets()) tight = tight || dot(h.normal, q) == h.offset;
      CHECK(tight);
    }
  }
}

TEST_CASE("Pick's identity and the shoelace oracle on random polygons") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    LatticePolytope p = random_polytope(rng, 2);
    LatticePointSet pts = p.lattice_points();
    Int vol = p.normalized_volume();
    Int interior(static_cast<long>(pts.interior.size()));
    Int boundary(static_cast<long>(pts.boundary.size()));
    CHECK(vol == 2 * interior + boundary - 2);
    CHECK(vol == shoelace_double_area(p));
  }
}

TEST_CASE("normalized volume and point counts are unimodular invariants") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    int dim = trial % 2 == 0 ? 2 : 3;
    LatticePolytope p = random_polytope(rng, dim);
    IntMatrix u = random_unimodular(rng, dim);
    IntVec shift;
    for (int c = 0; c < dim; ++c) shift.push_back(Int(rnd(rng, -5, 5)));
    std::vector<IntVec> mapped;
    for (const IntVec& v : p.vertices()) mapped.push_back(apply_affine(u, shift, v));
    LatticePolytope q(dim, mapped);
    CHECK(p.normalized_volume() == q.normalized_volume());
    LatticePointSet pa = p.lattice_points(), pb = q.lattice_points();
    CHECK(pa.all.size() == pb.all.size());
    CHECK(pa.boundary.size() == pb.boundary.size());
    CHECK(pa.interior.size() == pb.interior.size());
  }
}

TEST_CASE("vertex triangulation tiles the volume") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    int dim = trial % 2 == 0 ? 2 : 3;
    LatticePolytope p = random_polytope(rng, dim);
    Int sum = 0;
    for (const auto& cell : p.vertex_triangulation()) {
      REQUIRE(cell.size() == static_cast<std::size_t>(dim + 1));
      IntMatrix m(dim, dim);
      for (int r = 0; r < dim; ++r) {
        IntVec diff = vec_sub(cell[static_cast<std::size_t>(r + 1)], cell[0]);
        for (int c = 0; c < dim; ++c) m.at(r, c) = diff[static_cast<std::size_t>(c)];
      }
      Int det = determinant(m);
      CHECK(det != 0);
      sum += det < 0 ? Int(-det) : det;
      for (const IntVec& v : cell)
        CHECK(p.contains(v) != Membership::Outside);
    }
    CHECK(sum == p.normalized_volume());
    if (dim == 2) CHECK(sum == shoelace_double_area(p));
  }
}
