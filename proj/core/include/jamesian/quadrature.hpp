#pragma once

#include <cmath>
#include <limits>
#include <utility>

namespace jamesian {

namespace detail {

template <class F>
double adaptive_simpson_rec(const F& f, double lo, double hi, double f_lo,
                            double f_mid, double f_hi, double whole,
                            double tol, int depth) {
  const double mid = 0.5 * (lo + hi);
  const double lmid = 0.5 * (lo + mid);
  const double rmid = 0.5 * (mid + hi);
  const double f_lmid = f(lmid);
  const double f_rmid = f(rmid);
  const double h = hi - lo;
  const double left = (h / 12.0) * (f_lo + 4.0 * f_lmid + f_mid);
  const double right = (h / 12.0) * (f_mid + 4.0 * f_rmid + f_hi);
  const double delta = left + right - whole;
  // Accept on the absolute error target or on a small relative floor
  // against this interval's own contribution. The floor keeps
  // evaluations near the divergent endpoints tractable, where the
  // integral is huge and a pure absolute target would demand more than
  // double precision can resolve; wherever values are O(1) the
  // absolute target stays binding.
  const double floor = 4e-12 * (std::abs(left) + std::abs(right));
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol ||
      std::abs(delta) <= floor || lmid <= lo || rmid >= hi) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson_rec(f, lo, mid, f_lo, f_lmid, f_mid, left,
                              0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, mid, hi, f_mid, f_rmid, f_hi, right,
                              0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [lo, hi] with absolute error
/// target tol. Orientation is signed (lo > hi negates). Recursion depth
/// is capped (default 60); an interval that hits the cap contributes its
/// current Richardson-extrapolated estimate.
template <class F>
double adaptive_simpson(F&& f, double lo, double hi, double tol,
                        int max_depth = 60) {
  if (lo == hi) return 0.0;
  double sign = 1.0;
  if (lo > hi) {
    std::swap(lo, hi);
    sign = -1.0;
  }
  const double mid = 0.5 * (lo + hi);
  const double f_lo = f(lo);
  const double f_mid = f(mid);
  const double f_hi = f(hi);
  const double whole = ((hi - lo) / 6.0) * (f_lo + 4.0 * f_mid + f_hi);
  return sign * detail::adaptive_simpson_rec(f, lo, hi, f_lo, f_mid, f_hi,
                                             whole, tol, max_depth);
}

}  // namespace jamesian
