#include "crepant/simplex_lp.hpp"

#include <cstddef>

#include "crepant/errors.hpp"

namespace crepant {

namespace {

// Full-tableau simplex. Each row is [coefficients..., rhs]; enterable columns
// are [0, ncols) and the rhs sits at index ncols. basis[i] is the variable of
// row i. Bland's rule throughout, so no cycling.
void run_simplex(std::vector<std::vector<Rat>>& t, std::vector<int>& basis,
                 int ncols, bool& unbounded) {
  const int m = static_cast<int>(basis.size());
  unbounded = false;
  for (long iter = 0;; ++iter) {
    if (iter > 500000) fail(ErrorCode::Internal, "simplex iteration guard hit");
    int enter = -1;
    for (int j = 0; j < ncols; ++j) {
      if (t[m][j] > 0) { enter = j; break; }
    }
    if (enter < 0) return;  // optimal
    int leave = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][ncols] / t[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) { unbounded = true; return; }
    Rat piv = t[leave][enter];
    for (int c = 0; c <= ncols; ++c) t[leave][c] /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (int c = 0; c <= ncols; ++c) t[i][c] -= f * t[leave][c];
    }
    basis[leave] = enter;
  }
}

}  // namespace

LpSolution maximize_equality_lp(const std::vector<std::vector<Rat>>& a,
                                const std::vector<Rat>& b,
                                const std::vector<Rat>& c) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(c.size());
  const int total = n + m;  // original + artificial columns

  // ---- phase 1: minimize the artificial mass ------------------------------
  std::vector<std::vector<Rat>> t(m + 1, std::vector<Rat>(total + 1, Rat(0)));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    bool neg = b[i] < 0;
    for (int j = 0; j < n; ++j) t[i][j] = neg ? Rat(-a[i][j]) : a[i][j];
    t[i][total] = neg ? Rat(-b[i]) : b[i];
    t[i][n + i] = 1;
    basis[i] = n + i;
  }
  // reduced costs of max(-sum of artificials) w.r.t. the artificial basis
  for (int i = 0; i < m; ++i)
    for (int c2 = 0; c2 <= total; ++c2) t[m][c2] += t[i][c2];
  for (int i = 0; i < m; ++i) t[m][n + i] = 0;

  bool unbounded = false;
  run_simplex(t, basis, total, unbounded);
  if (t[m][total] != 0) return {LpStatus::Infeasible, Rat(0), {}};

  // Pivot surviving zero-level artificials onto real columns when possible.
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    int piv = -1;
    for (int j = 0; j < n; ++j) {
      if (t[i][j] != 0) { piv = j; break; }
    }
    if (piv < 0) continue;  // all-zero row: redundant constraint
    Rat p = t[i][piv];
    for (int c2 = 0; c2 <= total; ++c2) t[i][c2] /= p;
    for (int k = 0; k <= m; ++k) {
      if (k == i || t[k][piv] == 0) continue;
      Rat f = t[k][piv];
      for (int c2 = 0; c2 <= total; ++c2) t[k][c2] -= f * t[i][c2];
    }
    basis[i] = piv;
  }

  // ---- phase 2: rebuild without the artificial columns --------------------
  std::vector<std::vector<Rat>> t2;
  std::vector<int> basis2;
  for (int i = 0; i < m; ++i) {
    if (basis[i] >= n) continue;  // zero row whose artificial stayed at level 0
    std::vector<Rat> row(static_cast<std::size_t>(n + 1));
    for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = t[i][j];
    row[static_cast<std::size_t>(n)] = t[i][total];
    t2.push_back(std::move(row));
    basis2.push_back(basis[i]);
  }
  const int m2 = static_cast<int>(basis2.size());
  std::vector<Rat> obj(static_cast<std::size_t>(n + 1), Rat(0));
  for (int j = 0; j < n; ++j) obj[static_cast<std::size_t>(j)] = c[j];
  t2.push_back(std::move(obj));
  for (int i = 0; i < m2; ++i) {
    Rat f = t2[static_cast<std::size_t>(m2)][static_cast<std::size_t>(basis2[static_cast<std::size_t>(i)])];
    if (f == 0) continue;
    for (int c2 = 0; c2 <= n; ++c2)
      t2[static_cast<std::size_t>(m2)][static_cast<std::size_t>(c2)] -=
          f * t2[static_cast<std::size_t>(i)][static_cast<std::size_t>(c2)];
  }

  run_simplex(t2, basis2, n, unbounded);
  if (unbounded) return {LpStatus::Unbounded, Rat(0), {}};

  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.x.assign(static_cast<std::size_t>(n), Rat(0));
  for (int i = 0; i < m2; ++i)
    sol.x[static_cast<std::size_t>(basis2[static_cast<std::size_t>(i)])] =
        t2[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)];
  sol.value = Rat(0);
  for (int j = 0; j < n; ++j) sol.value += c[j] * sol.x[static_cast<std::size_t>(j)];
  return sol;
}

bool in_nonneg_span(const std::vector<IntVec>& generators, const IntVec& target) {
  const int m = static_cast<int>(target.size());
  const int n = static_cast<int>(generators.size());
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(n));
  std::vector<Rat> b(m), c(n, Rat(0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(generators[j][i]);
    b[i] = Rat(target[i]);
  }
  return maximize_equality_lp(a, b, c).status == LpStatus::Optimal;
}

}  // namespace crepant
