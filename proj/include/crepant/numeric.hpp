#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace crepant {

// All geometry in this library is exact: integers are GMP arbitrary-precision
// integers, rationals appear only where division is unavoidable.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;

// mpq_class(a, b) does not canonicalize; this does.
inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Binomial coefficient with the conventions the face-count formulas need:
// C(n, 0) = 1 for every integer n (including negative), otherwise 0 when
// k < 0 or n < k.
inline Int binomial(const Int& n, long k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (n < k) return 0;
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

inline bool fits_int64(const Int& v) {
  static const Int kMin = Int("-9223372036854775808");
  static const Int kMax = Int("9223372036854775807");
  return v >= kMin && v <= kMax;
}

inline std::int64_t to_int64(const Int& v) {
  return std::stoll(v.get_str());
}

inline std::string to_string(const Int& v) { return v.get_str(); }

inline std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  s += ")";
  return s;
}

// Small vector helpers; every caller guarantees matching dimensions.
inline IntVec vec_sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVec vec_neg(const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline IntVec vec_scale(const Int& c, const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero_vec(const IntVec& a) {
  for (const Int& x : a) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace crepant
