#pragma once

#include <vector>

#include "crepant/errors.hpp"
#include "crepant/numeric.hpp"

namespace crepant {

// Face counts of a pure D-dimensional simplicial complex, f_{-1} .. f_D with
// f_{-1} = 1 stored explicitly. The paper's conventions put a (d-1)-complex's
// h-vector at h_0..h_d, so the dimension rides along on both vector types and
// every operation validates lengths against it.
struct FVector {
  int complex_dim = 0;        // D
  std::vector<Int> counts;    // size D + 2: counts[i + 1] = f_i, counts[0] = f_{-1}

  FVector() = default;
  FVector(int d, std::vector<Int> c) : complex_dim(d), counts(std::move(c)) {
    validate();
  }

  Int f(int i) const {  // i in [-1, D]
    if (i < -1 || i > complex_dim) fail(ErrorCode::InvalidArgument, "f index");
    return counts[static_cast<std::size_t>(i + 1)];
  }

  void validate() const;
};

struct HVector {
  int complex_dim = 0;        // D
  std::vector<Int> entries;   // size D + 2: h_0 .. h_{D+1}

  HVector() = default;
  HVector(int d, std::vector<Int> e) : complex_dim(d), entries(std::move(e)) {
    validate();
  }

  Int h(int i) const {  // entries out of [0, D+1] read as 0
    if (i < 0 || i > complex_dim + 1) return 0;
    return entries[static_cast<std::size_t>(i)];
  }

  void validate() const;
};

bool operator==(const FVector& a, const FVector& b);
bool operator==(const HVector& a, const HVector& b);

// h_j = sum_i (-1)^{j-i} C(d-i, d-j) f_{i-1}, with d = complex_dim + 1.
HVector h_from_f(const FVector& f);

// Inverse transform: f_{i-1} = sum_j C(d-j, d-i) h_j; round-trips with h_from_f.
FVector f_from_h(const HVector& h);

// Facet count of the cyclic D-polytope with k vertices.
// Throws for k <= D (no such polytope).
Int cyclic_facets(int poly_dim, const Int& k);

// h-vector of the boundary complex of the cyclic D-polytope with k vertices:
// h_i = C(k-D+i-1, i) up to the middle, completed by Dehn-Sommerville symmetry.
HVector cyclic_h(int poly_dim, const Int& k);

// Full boundary f-vector of the cyclic D-polytope, via f_from_h(cyclic_h).
// Its top coordinate equals cyclic_facets -- kept as a tested invariant.
FVector cyclic_f(int poly_dim, const Int& k);

// Stanley UBT: per-index verdicts f_i(S) <= f_i(CycP_d(k)) for a candidate
// simplicial sphere f-vector with k vertices (d = complex_dim + 1).
std::vector<bool> ubt_sphere_check(const FVector& f, const Int& k);

// LBT h_1 <= h_i. The theorem's literal index range 2 <= i <= d fails at i = d
// for most spheres; the screening pipeline only ever uses the consequence up
// to floor(d/2), so both ranges are exposed and the caller picks.
enum class LbtRange { Literal, HalfDim };
bool lbt_sphere_check(const HVector& h, LbtRange range);

// Per-index residual of h_{i-1}(bd) - h_i(bd) = h_{d+1-i}(ball) - h_i(ball),
// 0 <= i <= d+1 (h_{-1}(bd) = 0). All-zero iff the boundary identity holds.
std::vector<Int> boundary_h_residual(const HVector& h_ball, const HVector& h_bd);

// Right-hand side of the Buchsbaum-complex h-bound:
// C(b-D+i-2, i) - (-1)^i C(D+1, i) * sum_{j=-1}^{i-2} (-1)^j betti[j+1],
// where betti[t] supplies the reduced homology dimension in degree t-1
// (missing entries read as zero; a ball passes all zeros).
Int schenzel_h_bound(int i, const Int& b, int complex_dim,
                     const std::vector<Int>& betti);

// Ball upper bound on f_i: f_i(CycP_{D+1}(b)) minus the boundary correction
// sum_{j=D-i}^{floor(D/2)} C(j, D-i) (h_j(bd) - h_{j-1}(bd)).
Int ball_f_upper_bound(int i, const Int& b, int complex_dim, const HVector& h_bd);

// Facet-count bound for a D-ball with b vertices, b' of them on the boundary:
// f_D <= f_D(CycP_{D+1}(b)) - (b' - D). Throws when b' < D + 1.
Int ball_facet_upper_bound(const Int& b, const Int& b_prime, int complex_dim);

}  // namespace crepant
