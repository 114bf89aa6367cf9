#include "crepant/exact.hpp"

#include <algorithm>

namespace crepant {

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows_in) {
  if (rows_in.empty()) return IntMatrix(0, 0);
  IntMatrix m(static_cast<int>(rows_in.size()),
              static_cast<int>(rows_in.front().size()));
  for (int r = 0; r < m.rows; ++r) {
    if (static_cast<int>(rows_in[r].size()) != m.cols)
      fail(ErrorCode::DimensionMismatch, "ragged row list");
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows_in[r][c];
  }
  return m;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Int gcd_content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return g;
  }
  return g;
}

IntVec primitive_part(const IntVec& v) {
  Int g = gcd_content(v);
  if (g == 0) fail(ErrorCode::ZeroVector, "primitive_part of the zero vector (degenerate ray)");
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

Int determinant(const IntMatrix& m) {
  if (m.rows != m.cols) fail(ErrorCode::NonSquare, "determinant of a non-square matrix");
  const int n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i) {
        if (w.at(i, k) != 0) { p = i; break; }
      }
      if (p < 0) return 0;
      for (int c = k; c < n; ++c) std::swap(w.at(k, c), w.at(p, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

namespace {

// Unimodular two-row operation putting gcd(a[col] of rows p, j) into row p.
void gcd_rows(IntMatrix& m, int p, int j, int col) {
  Int &ap = m.at(p, col), &aj = m.at(j, col);
  if (aj == 0) return;
  if (ap == 0) {
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(p, c), m.at(j, c));
    return;
  }
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), ap.get_mpz_t(),
             aj.get_mpz_t());
  Int u = ap / g, v = aj / g;  // s*ap + t*aj = g, det [[s,t],[-v,u]] = 1
  for (int c = 0; c < m.cols; ++c) {
    Int rp = m.at(p, c), rj = m.at(j, c);
    m.at(p, c) = s * rp + t * rj;
    m.at(j, c) = u * rj - v * rp;
  }
}

}  // namespace

IntMatrix hermite_basis(const IntMatrix& m) {
  IntMatrix w = m;
  int pivot_row = 0;
  for (int col = 0; col < w.cols && pivot_row < w.rows; ++col) {
    for (int j = pivot_row + 1; j < w.rows; ++j) gcd_rows(w, pivot_row, j, col);
    Int& p = w.at(pivot_row, col);
    if (p == 0) continue;
    if (p < 0) {
      for (int c = 0; c < w.cols; ++c) w.at(pivot_row, c) = -w.at(pivot_row, c);
    }
    for (int i = 0; i < pivot_row; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), w.at(i, col).get_mpz_t(),
                 w.at(pivot_row, col).get_mpz_t());
      if (q == 0) continue;
      for (int c = 0; c < w.cols; ++c) w.at(i, c) -= q * w.at(pivot_row, c);
    }
    ++pivot_row;
  }
  IntMatrix out(pivot_row, w.cols);
  for (int r = 0; r < pivot_row; ++r)
    for (int c = 0; c < w.cols; ++c) out.at(r, c) = w.at(r, c);
  return out;
}

IntVec orthogonal_vector(const std::vector<IntVec>& diffs, int dim) {
  IntVec n(static_cast<std::size_t>(dim));
  IntMatrix minor(dim - 1, dim - 1);
  for (int j = 0; j < dim; ++j) {
    for (int r = 0; r < dim - 1; ++r) {
      int cc = 0;
      for (int c = 0; c < dim; ++c) {
        if (c == j) continue;
        minor.at(r, cc++) = diffs[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      }
    }
    Int d = determinant(minor);
    n[static_cast<std::size_t>(j)] = (j % 2 == 0) ? d : Int(-d);
  }
  return n;
}

int rational_rank(const std::vector<IntVec>& rows) {
  if (rows.empty()) return 0;
  const int nc = static_cast<int>(rows.front().size());
  std::vector<std::vector<Rat>> w;
  w.reserve(rows.size());
  for (const IntVec& r : rows) {
    std::vector<Rat> q(nc);
    for (int c = 0; c < nc; ++c) q[c] = Rat(r[c]);
    w.push_back(std::move(q));
  }
  int rank = 0;
  for (int col = 0; col < nc && rank < static_cast<int>(w.size()); ++col) {
    int p = -1;
    for (int i = rank; i < static_cast<int>(w.size()); ++i) {
      if (w[i][col] != 0) { p = i; break; }
    }
    if (p < 0) continue;
    std::swap(w[rank], w[p]);
    for (int i = rank + 1; i < static_cast<int>(w.size()); ++i) {
      if (w[i][col] == 0) continue;
      Rat f = w[i][col] / w[rank][col];
      for (int c = col; c < nc; ++c) w[i][c] -= f * w[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Rat>> solve_columns(const std::vector<IntVec>& columns,
                                              const IntVec& b) {
  const int nvars = static_cast<int>(columns.size());
  const int nrows = static_cast<int>(b.size());
  // augmented [A | b], A's columns are the given vectors
  std::vector<std::vector<Rat>> w(nrows, std::vector<Rat>(nvars + 1));
  for (int r = 0; r < nrows; ++r) {
    for (int c = 0; c < nvars; ++c) w[r][c] = Rat(columns[c][r]);
    w[r][nvars] = Rat(b[r]);
  }
  std::vector<int> pivot_col_of_row(nrows, -1);
  int rank = 0;
  for (int col = 0; col < nvars && rank < nrows; ++col) {
    int p = -1;
    for (int i = rank; i < nrows; ++i) {
      if (w[i][col] != 0) { p = i; break; }
    }
    if (p < 0) continue;
    std::swap(w[rank], w[p]);
    Rat inv = w[rank][col];
    for (int c = col; c <= nvars; ++c) w[rank][c] /= inv;
    for (int i = 0; i < nrows; ++i) {
      if (i == rank || w[i][col] == 0) continue;
      Rat f = w[i][col];
      for (int c = col; c <= nvars; ++c) w[i][c] -= f * w[rank][c];
    }
    pivot_col_of_row[rank] = col;
    ++rank;
  }
  for (int i = rank; i < nrows; ++i) {
    if (w[i][nvars] != 0) return std::nullopt;  // inconsistent
  }
  std::vector<Rat> x(nvars, Rat(0));
  for (int r = 0; r < rank; ++r) x[pivot_col_of_row[r]] = w[r][nvars];
  return x;
}

HyperplaneBasis hyperplane_lattice_basis(const IntVec& m) {
  const int n = static_cast<int>(m.size());
  if (n < 1) fail(ErrorCode::InvalidArgument, "empty vector");
  if (gcd_content(m) != 1)
    fail(ErrorCode::NonPrimitive,
         "hyperplane_lattice_basis needs a primitive vector; <m,x> = 1 has no "
         "integral solution for " + to_string(m));
  // Column operations on V = I, tracking w = m^T V until w = (1, 0, ..., 0).
  std::vector<IntVec> cols(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) cols[i][i] = 1;
  IntVec w = m;
  for (int j = 1; j < n; ++j) {
    if (w[j] == 0) continue;
    if (w[0] == 0) {
      std::swap(cols[0], cols[j]);
      std::swap(w[0], w[j]);
      continue;
    }
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), w[0].get_mpz_t(),
               w[j].get_mpz_t());
    Int u = w[0] / g, v = w[j] / g;
    IntVec c0 = cols[0], cj = cols[j];
    for (int r = 0; r < n; ++r) {
      cols[0][r] = s * c0[r] + t * cj[r];
      cols[j][r] = u * cj[r] - v * c0[r];
    }
    w[0] = g;
    w[j] = 0;
  }
  if (w[0] < 0) {
    cols[0] = vec_neg(cols[0]);
    w[0] = -w[0];
  }
  if (w[0] != 1) fail(ErrorCode::Internal, "content-1 vector did not fold to 1");
  HyperplaneBasis out;
  out.base_point = cols[0];
  out.basis.assign(cols.begin() + 1, cols.end());
  return out;
}

}  // namespace crepant
