#pragma once

#include <optional>
#include <vector>

#include "crepant/errors.hpp"
#include "crepant/numeric.hpp"

namespace crepant {

// Row-major exact integer matrix.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }

  IntVec row(int r) const {
    IntVec v(cols);
    for (int c = 0; c < cols; ++c) v[c] = at(r, c);
    return v;
  }

  static IntMatrix from_rows(const std::vector<IntVec>& rows_in);
  static IntMatrix identity(int n);
};

// gcd of the absolute values of the entries; 0 iff v is the zero vector.
Int gcd_content(const IntVec& v);

// v divided by its content. Throws ZeroVector on the zero vector.
IntVec primitive_part(const IntVec& v);

// Exact determinant by fraction-free (Bareiss) elimination.
// Throws NonSquare for non-square input.
Int determinant(const IntMatrix& m);

// Row-style Hermite normal form of the integer row span of m. Returns only
// the nonzero rows, which form a basis of the span: pivots positive, entries
// above each pivot reduced into [0, pivot).
IntMatrix hermite_basis(const IntMatrix& m);

// Rank of the rows over the rationals.
int rational_rank(const std::vector<IntVec>& rows);

// Generalized cross product: an integer vector orthogonal to the given
// dim-1 vectors in Z^dim, zero iff they are linearly dependent.
IntVec orthogonal_vector(const std::vector<IntVec>& diffs, int dim);

// Solves A x = b over the rationals for a matrix given by columns.
// Returns nullopt when inconsistent; when the solution is underdetermined the
// free variables are set to zero (callers here only use full-column-rank A).
std::optional<std::vector<Rat>> solve_columns(const std::vector<IntVec>& columns,
                                              const IntVec& b);

struct HyperplaneBasis {
  IntVec base_point;           // <m, base_point> = 1
  std::vector<IntVec> basis;   // index-1 lattice basis of {x : <m, x> = 0}
};

// Lattice coordinates for the affine hyperplane <m, x> = 1 of a primitive m.
// Deterministic: entries are folded left to right into position 0 with GMP's
// canonical extended gcd, so the resulting basis is reproducible bit-for-bit.
// Throws NonPrimitive when gcd_content(m) != 1.
HyperplaneBasis hyperplane_lattice_basis(const IntVec& m);

}  // namespace crepant
