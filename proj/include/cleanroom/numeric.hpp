#pragma once

// Numeric backends shared by the whole engine.
//
// Two backends are supported everywhere a probability appears:
//   Rat     exact rationals (GMP). Default for verifiers, so theorem checks
//           are never confounded by rounding.
//   double  IEEE doubles. Used by the Monte Carlo paths.
//
// Divergences are reported in bits (log base 2) regardless of backend.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace cleanroom {

using Rat = mpq_class;

/// Canonicalized rational from an integer pair.
inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parse "3/4", "7", "-1/6".
inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

/// ratio <= 2^k, decided exactly when k = a/b has a small denominator.
/// Non-positive ratios compare as -inf and always pass.
inline bool ratio_leq_pow2(const Rat& ratio, const Rat& k) {
  if (ratio <= 0) return true;
  const mpz_class& a = k.get_num();
  const mpz_class& b = k.get_den();
  if (b.fits_ulong_p() && b.get_ui() <= 64) {
    unsigned long bu = b.get_ui();
    Rat lhs;
    mpz_pow_ui(lhs.get_num_mpz_t(), ratio.get_num().get_mpz_t(), bu);
    mpz_pow_ui(lhs.get_den_mpz_t(), ratio.get_den().get_mpz_t(), bu);
    lhs.canonicalize();
    Rat rhs = 1;
    if (a >= 0) {
      if (!a.fits_ulong_p()) return true;  // 2^huge dwarfs any desk-scale ratio
      mpz_ui_pow_ui(rhs.get_num_mpz_t(), 2, a.get_ui());
    } else {
      mpz_class na = -a;
      if (!na.fits_ulong_p()) return false;
      mpz_ui_pow_ui(rhs.get_den_mpz_t(), 2, na.get_ui());
    }
    rhs.canonicalize();
    return lhs <= rhs;
  }
  // Fallback: float compare. Only reachable for exotic k.
  return std::log2(ratio.get_d()) <= k.get_d() + 1e-12;
}

/// log2 of a rational, for display. Exact checks use ratios, never this.
inline double rat_log2(const Rat& r) {
  if (r <= 0) return -std::numeric_limits<double>::infinity();
  // get_d can underflow for extreme ratios; split num/den.
  signed long ne, de;
  double nd = mpz_get_d_2exp(&ne, r.get_num().get_mpz_t());
  double dd = mpz_get_d_2exp(&de, r.get_den().get_mpz_t());
  return (std::log2(nd) + ne) - (std::log2(dd) + de);
}

/// Traits bridging the two backends.
template <class T>
struct NumTraits;

template <>
struct NumTraits<Rat> {
  static constexpr bool exact = true;
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_ratio(long num, long den) { return rat(num, den); }
  static Rat from_rat(const Rat& r) { return r; }
  static double to_double(const Rat& v) { return v.get_d(); }
  // Normalization slack: none, sums must be exactly 1.
  static bool is_normalized(const Rat& sum) { return sum == 1; }
  static bool leq(const Rat& a, const Rat& b) { return a <= b; }
  static bool eq(const Rat& a, const Rat& b) { return a == b; }
  static const char* mode_name() { return "rational"; }
};

template <>
struct NumTraits<double> {
  static constexpr bool exact = false;
  static constexpr double kSlack = 1e-12;
  // Comparison slack for theorem checks in float mode.
  static constexpr double kCheckTol = 1e-9;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_ratio(long num, long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static double from_rat(const Rat& r) { return r.get_d(); }
  static double to_double(double v) { return v; }
  static bool is_normalized(double sum) { return std::abs(sum - 1.0) <= kSlack; }
  static bool leq(double a, double b) { return a <= b + kCheckTol; }
  static bool eq(double a, double b) { return std::abs(a - b) <= kCheckTol; }
  static const char* mode_name() { return "float"; }
};

/// max_{y in Supp(p)} log2 p(y)/q(y) carrier: +inf when q misses mass of p.
inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace cleanroom
