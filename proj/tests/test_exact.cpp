#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "crepant/exact.hpp"
#include "crepant/simplex_lp.hpp"
#include "support.hpp"

using namespace crepant;
using namespace testsupport;

TEST_CASE("gcd_content on the worked examples") {
  CHECK(gcd_content(iv({2, 4, 6})) == 2);
  CHECK(gcd_content(iv({0, 0, 0})) == 0);
  // Euclidean chain oracle for the paper's ray entries
  long chain = 0;
  for (long x : {3L, -7L, -9L, 20L}) chain = std::gcd(chain, x);
  CHECK(chain == 1);
  CHECK(gcd_content(iv({3, -7, -9, 20})) == chain);
}

TEST_CASE("primitive_part divides by the content") {
  CHECK(primitive_part(iv({2, 4, 6})) == iv({1, 2, 3}));
  CHECK(primitive_part(iv({1, 0, 0, 0})) == iv({1, 0, 0, 0}));
  CHECK(primitive_part(iv({-6, -14, -18, 40})) == iv({-3, -7, -9, 20}));
  CHECK_THROWS_AS(primitive_part(iv({0, 0})), Error);
}

TEST_CASE("primitive_part is idempotent with content 1") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    IntVec v;
    for (int c = 0; c < 1 + static_cast<int>(rng() % 5); ++c)
      v.push_back(Int(rnd(rng, -40, 40)));
    if (is_zero_vec(v)) continue;
    IntVec p = primitive_part(v);
    CHECK(gcd_content(p) == 1);
    CHECK(primitive_part(p) == p);
  }
}

TEST_CASE("determinant basics") {
  CHECK(determinant(IntMatrix::identity(3)) == 1);
  IntMatrix repeated = IntMatrix::from_rows(ivs({{1, 2, 3}, {4, 5, 6}, {1, 2, 3}}));
  CHECK(determinant(repeated) == 0);
  IntMatrix rect(2, 3);
  CHECK_THROWS_AS(determinant(rect), Error);
  CHECK(determinant(IntMatrix(0, 0)) == 1);
}

TEST_CASE("paper ray simplex has determinant +-20 in hyperplane coordinates") {
  // rows e_2 - e_1, e_3 - e_1, (-3,-7,-9,20) - e_1 expressed in an index-1
  // basis of the hyperplane <(1,1,1,1), x> = 0
  HyperplaneBasis hb = hyperplane_lattice_basis(iv({1, 1, 1, 1}));
  std::vector<IntVec> pts = ivs({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {-3, -7, -9, 20}});
  std::vector<IntVec> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    auto y = solve_columns(hb.basis, vec_sub(pts[i], pts[0]));
    REQUIRE(y.has_value());
    IntVec row;
    for (const Rat& q : *y) {
      REQUIRE(q.get_den() == 1);
      row.push_back(q.get_num());
    }
    rows.push_back(row);
  }
  Int det = determinant(IntMatrix::from_rows(rows));
  CHECK((det == 20 || det == -20));
}

TEST_CASE("determinant agrees with cofactor expansion up to 4x4") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    IntMatrix m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m.at(r, c) = Int(rnd(rng, -9, 9));
    CHECK(determinant(m) == cofactor_determinant(m));
  }
}

namespace {

// every integer combination of `rows` with small coefficients, clipped to a box
std::set<IntVec> span_sample(const std::vector<IntVec>& rows, long coeff, long box) {
  std::set<IntVec> pts;
  std::vector<long> c(rows.size(), -coeff);
  for (;;) {
    IntVec p(rows.front().size(), Int(0));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) p[j] += Int(c[i]) * rows[i][j];
    bool inside = true;
    for (const Int& x : p)
      if (x < -box || x > box) inside = false;
    if (inside) pts.insert(p);
    std::size_t k = 0;
    while (k < c.size() && c[k] == coeff) c[k++] = -coeff;
    if (k == c.size()) break;
    ++c[k];
  }
  return pts;
}

}  // namespace

TEST_CASE("hermite_basis matches brute-force span enumeration") {
  CHECK(hermite_basis(IntMatrix::identity(4)).a == IntMatrix::identity(4).a);

  IntMatrix m = IntMatrix::from_rows(ivs({{2, 0}, {0, 2}, {1, 1}}));
  IntMatrix h = hermite_basis(m);
  REQUIRE(h.rows == 2);
  CHECK(h.row(0) == iv({1, 1}));
  CHECK(h.row(1) == iv({0, 2}));
  CHECK(span_sample(ivs({{2, 0}, {0, 2}, {1, 1}}), 8, 5) ==
        span_sample({h.row(0), h.row(1)}, 8, 5));

  // the span generated by a single row is that row's multiples; the primitive
  // direction (2,3) generates a strictly larger lattice and is not returned
  IntMatrix single = hermite_basis(IntMatrix::from_rows(ivs({{4, 6}})));
  REQUIRE(single.rows == 1);
  CHECK(single.row(0) == iv({4, 6}));
  CHECK(span_sample(ivs({{4, 6}}), 8, 13) == span_sample({single.row(0)}, 8, 13));
  CHECK(primitive_part(single.row(0)) == iv({2, 3}));
}

TEST_CASE("hermite_basis spans are stable under row shuffles") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 2 + static_cast<int>(rng() % 3);
    int cols = 2 + static_cast<int>(rng() % 2);
    std::vector<IntVec> rs;
    for (int r = 0; r < rows; ++r) {
      IntVec v;
      for (int c = 0; c < cols; ++c) v.push_back(Int(rnd(rng, -4, 4)));
      rs.push_back(v);
    }
    IntMatrix h1 = hermite_basis(IntMatrix::from_rows(rs));
    std::shuffle(rs.begin(), rs.end(), rng);
    IntMatrix h2 = hermite_basis(IntMatrix::from_rows(rs));
    CHECK(h1.a == h2.a);  // canonical form
  }
}

TEST_CASE("hyperplane_lattice_basis on the simple cases") {
  HyperplaneBasis hb = hyperplane_lattice_basis(iv({1, 0}));
  CHECK(hb.base_point == iv({1, 0}));
  REQUIRE(hb.basis.size() == 1);
  CHECK(hb.basis[0] == iv({0, 1}));

  CHECK_THROWS_AS(hyperplane_lattice_basis(iv({2, 2})), Error);
}

TEST_CASE("hyperplane_lattice_basis spans the affine lattice with index 1") {
  std::mt19937_64 rng(14);
  std::vector<IntVec> ms = {iv({1, 1, 1, 1}), iv({1, 0}), iv({2, 3}), iv({3, -5, 7}),
                            iv({0, 0, 1}), iv({5, 2, -1, 4})};
  for (const IntVec& m : ms) {
    HyperplaneBasis hb = hyperplane_lattice_basis(m);
    const int n = static_cast<int>(m.size());
    CHECK(dot(m, hb.base_point) == 1);
    for (const IntVec& b : hb.basis) CHECK(dot(m, b) == 0);
    // [base | basis] is a unimodular matrix, so the basis has index 1
    std::vector<IntVec> cols;
    cols.push_back(hb.base_point);
    for (const IntVec& b : hb.basis) cols.push_back(b);
    IntMatrix v(n, n);
    for (int c = 0; c < n; ++c)
      for (int r = 0; r < n; ++r) v.at(r, c) = cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    Int det = determinant(v);
    CHECK((det == 1 || det == -1));

    // random solutions of <m, x> = 1 decompose integrally over the basis
    int found = 0;
    while (found < 1000) {
      IntVec x;
      for (int c = 0; c < n; ++c) x.push_back(Int(rnd(rng, -10, 10)));
      if (dot(m, x) != 1) continue;
      ++found;
      auto y = solve_columns(hb.basis, vec_sub(x, hb.base_point));
      REQUIRE(y.has_value());
      for (const Rat& q : *y) CHECK(q.get_den() == 1);
    }
  }
}

TEST_CASE("exact LP: optimum, infeasibility, unboundedness") {
  using R = Rat;
  // max x0 + x1 with x0 + x1 + s = 1 -> 1
  {
    LpSolution s = maximize_equality_lp({{R(1), R(1), R(1)}}, {R(1)}, {R(1), R(1), R(0)});
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.value == 1);
  }
  // max x0 with 2 x0 = 3 -> 3/2
  {
    LpSolution s = maximize_equality_lp({{R(2)}}, {R(3)}, {R(1)});
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.value == make_rat(Int(3), Int(2)));
    CHECK(s.x[0] == make_rat(Int(3), Int(2)));
  }
  // x0 + x1 = -1 has no nonnegative solution
  {
    LpSolution s = maximize_equality_lp({{R(1), R(1)}}, {R(-1)}, {R(0), R(0)});
    CHECK(s.status == LpStatus::Infeasible);
  }
  // max x0 with x0 - x1 = 0 is unbounded
  {
    LpSolution s = maximize_equality_lp({{R(1), R(-1)}}, {R(0)}, {R(1), R(0)});
    CHECK(s.status == LpStatus::Unbounded);
  }
  // redundant rows are tolerated
  {
    LpSolution s = maximize_equality_lp({{R(1), R(1)}, {R(2), R(2)}}, {R(1), R(2)},
                                        {R(1), R(0)});
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.value == 1);
  }
  // optimal solutions satisfy the constraints exactly (randomized)
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    int m = 1 + static_cast<int>(rng() % 3);
    int n = 1 + static_cast<int>(rng() % 5);
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(n));
    std::vector<Rat> b(m), c(n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = Rat(rnd(rng, -4, 4));
      b[i] = Rat(rnd(rng, -4, 4));
    }
    for (int j = 0; j < n; ++j) c[j] = Rat(rnd(rng, -3, 3));
    LpSolution s = maximize_equality_lp(a, b, c);
    if (s.status != LpStatus::Optimal) continue;
    for (int i = 0; i < m; ++i) {
      Rat acc(0);
      for (int j = 0; j < n; ++j) acc += a[i][j] * s.x[j];
      CHECK(acc == b[i]);
    }
    for (const Rat& x : s.x) CHECK(x >= 0);
  }
}

TEST_CASE("cone membership via the LP") {
  CHECK(in_nonneg_span(ivs({{1, 0}, {0, 1}}), iv({3, 4})));
  CHECK_FALSE(in_nonneg_span(ivs({{1, 0}, {0, 1}}), iv({-1, 0})));
  CHECK(in_nonneg_span(ivs({{1, 0}, {-1, 1}, {-1, -1}}), iv({-1, 0})));
}
