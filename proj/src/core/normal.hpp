#pragma once

#include <cmath>

namespace metamcmc {

inline constexpr double kLogSqrt2Pi = 0.9189385332046727417803297;
inline constexpr double kSqrt2 = 1.4142135623730950488016887;

/// log of the standard normal density at z.
inline double norm_logpdf(double z) { return -0.5 * z * z - kLogSqrt2Pi; }

inline double norm_pdf(double z) { return std::exp(norm_logpdf(z)); }

/// Standard normal CDF, accurate deep into the left tail (erfc based).
inline double norm_cdf(double z) { return 0.5 * std::erfc(-z / kSqrt2); }

/// Upper tail probability P[Z > z].
inline double norm_sf(double z) { return 0.5 * std::erfc(z / kSqrt2); }

/// log(exp(a) + exp(b)) without overflow; tolerates -inf arguments.
inline double log_add_exp(double a, double b) {
  if (a == -INFINITY) return b;
  if (b == -INFINITY) return a;
  const double hi = a > b ? a : b;
  const double lo = a > b ? b : a;
  return hi + std::log1p(std::exp(lo - hi));
}

/// Inverse standard normal CDF. Rational approximation (Acklam) refined by a
/// Halley step on erfc, giving close to full double precision except for
/// p within a few ulp of 0 or 1.
double norm_quantile(double p);

/// Sample from N(mean, sd^2) conditioned on [lo, hi], by CDF inversion of the
/// uniform deviate u in [0,1). Works in whichever tail is better conditioned.
double truncated_normal_inverse(double mean, double sd, double lo, double hi, double u);

}  // namespace metamcmc
