#include "crepant/fh.hpp"

namespace crepant {

void FVector::validate() const {
  if (complex_dim < 0) fail(ErrorCode::InvalidArgument, "negative complex dimension");
  if (static_cast<int>(counts.size()) != complex_dim + 2)
    fail(ErrorCode::DimensionMismatch, "f-vector length does not match complex_dim");
  if (counts[0] != 1) fail(ErrorCode::InvalidArgument, "f_{-1} must be 1");
  for (const Int& c : counts) {
    if (c < 0) fail(ErrorCode::InvalidArgument, "negative face count");
  }
}

void HVector::validate() const {
  if (complex_dim < 0) fail(ErrorCode::InvalidArgument, "negative complex dimension");
  if (static_cast<int>(entries.size()) != complex_dim + 2)
    fail(ErrorCode::DimensionMismatch, "h-vector length does not match complex_dim");
}

bool operator==(const FVector& a, const FVector& b) {
  return a.complex_dim == b.complex_dim && a.counts == b.counts;
}

bool operator==(const HVector& a, const HVector& b) {
  return a.complex_dim == b.complex_dim && a.entries == b.entries;
}

HVector h_from_f(const FVector& f) {
  f.validate();
  const int d = f.complex_dim + 1;
  std::vector<Int> h(static_cast<std::size_t>(d + 1));
  for (int j = 0; j <= d; ++j) {
    Int s = 0;
    for (int i = 0; i <= j; ++i) {
      Int term = binomial(Int(d - i), d - j) * f.f(i - 1);
      if ((j - i) % 2 == 0)
        s += term;
      else
        s -= term;
    }
    h[static_cast<std::size_t>(j)] = s;
  }
  return HVector(f.complex_dim, std::move(h));
}

FVector f_from_h(const HVector& h) {
  h.validate();
  const int d = h.complex_dim + 1;
  std::vector<Int> f(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) {
    Int s = 0;
    for (int j = 0; j <= i; ++j) s += binomial(Int(d - j), d - i) * h.h(j);
    f[static_cast<std::size_t>(i)] = s;  // this is f_{i-1}
  }
  return FVector(h.complex_dim, std::move(f));
}

namespace {

// Closed forms without the k >= D+1 existence check; the ball bounds evaluate
// them at the degenerate corner b = D+1 as well.
Int cyclic_facet_formula(int d, const Int& k) {
  Int first = binomial(k - (d + 1) / 2, d / 2);
  Int second = binomial(k - 1 - d / 2, (d - 1) / 2);
  return first + second;
}

HVector cyclic_h_formula(int d, const Int& k) {
  std::vector<Int> h(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d / 2; ++i)
    h[static_cast<std::size_t>(i)] = binomial(k - d + i - 1, i);
  for (int i = d / 2 + 1; i <= d; ++i)
    h[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(d - i)];
  return HVector(d - 1, std::move(h));
}

void require_polytope(int poly_dim, const Int& k) {
  if (poly_dim < 1 || k <= poly_dim)
    fail(ErrorCode::InvalidArgument,
         "cyclic polytope needs at least poly_dim + 1 vertices");
}

}  // namespace

Int cyclic_facets(int poly_dim, const Int& k) {
  require_polytope(poly_dim, k);
  return cyclic_facet_formula(poly_dim, k);
}

HVector cyclic_h(int poly_dim, const Int& k) {
  require_polytope(poly_dim, k);
  return cyclic_h_formula(poly_dim, k);
}

FVector cyclic_f(int poly_dim, const Int& k) { return f_from_h(cyclic_h(poly_dim, k)); }

std::vector<bool> ubt_sphere_check(const FVector& f, const Int& k) {
  const int d = f.complex_dim + 1;
  FVector cyc = cyclic_f(d, k);
  std::vector<bool> ok(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) ok[static_cast<std::size_t>(i)] = f.f(i) <= cyc.f(i);
  return ok;
}

bool lbt_sphere_check(const HVector& h, LbtRange range) {
  const int d = h.complex_dim + 1;
  const Int h1 = h.h(1);
  const int hi = range == LbtRange::Literal ? d : d / 2;
  for (int i = 2; i <= hi; ++i) {
    if (h.h(i) < h1) return false;
  }
  return true;
}

std::vector<Int> boundary_h_residual(const HVector& h_ball, const HVector& h_bd) {
  h_ball.validate();
  h_bd.validate();
  const int d = h_ball.complex_dim;
  if (h_bd.complex_dim != d - 1)
    fail(ErrorCode::DimensionMismatch,
         "boundary h-vector must be one dimension below the ball's");
  std::vector<Int> res(static_cast<std::size_t>(d + 2));
  for (int i = 0; i <= d + 1; ++i) {
    Int lhs = h_bd.h(i - 1) - h_bd.h(i);
    Int rhs = h_ball.h(d + 1 - i) - h_ball.h(i);
    res[static_cast<std::size_t>(i)] = lhs - rhs;
  }
  return res;
}

Int schenzel_h_bound(int i, const Int& b, int complex_dim,
                     const std::vector<Int>& betti) {
  const int d = complex_dim;
  if (i < 0 || i > d + 1) fail(ErrorCode::InvalidArgument, "index out of range");
  Int bound = binomial(b - d + i - 2, i);
  Int hsum = 0;
  for (int j = -1; j <= i - 2; ++j) {
    const std::size_t t = static_cast<std::size_t>(j + 1);
    Int dim_h = t < betti.size() ? betti[t] : Int(0);
    bool j_even = ((j % 2) + 2) % 2 == 0;
    if (j_even)
      hsum += dim_h;
    else
      hsum -= dim_h;
  }
  Int corr = binomial(Int(d + 1), i) * hsum;
  if (i % 2 == 0)
    bound -= corr;
  else
    bound += corr;
  return bound;
}

Int ball_f_upper_bound(int i, const Int& b, int complex_dim, const HVector& h_bd) {
  const int d = complex_dim;
  if (i < 0 || i > d) fail(ErrorCode::InvalidArgument, "index out of range");
  if (h_bd.complex_dim != d - 1)
    fail(ErrorCode::DimensionMismatch,
         "boundary h-vector must be one dimension below the ball's");
  FVector cyc = f_from_h(cyclic_h_formula(d + 1, b));
  Int bound = cyc.f(i);
  for (int j = d - i; j <= d / 2; ++j)
    bound -= binomial(Int(j), d - i) * (h_bd.h(j) - h_bd.h(j - 1));
  return bound;
}

Int ball_facet_upper_bound(const Int& b, const Int& b_prime, int complex_dim) {
  const int d = complex_dim;
  if (b_prime < d + 1)
    fail(ErrorCode::InvalidArgument,
         "boundary sphere needs at least d + 1 vertices");
  if (b < b_prime)
    fail(ErrorCode::InvalidArgument, "total vertex count below boundary count");
  return cyclic_facet_formula(d + 1, b) - (b_prime - d);
}

}  // namespace crepant
