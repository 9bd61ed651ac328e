#pragma once

#include <cmath>
#include <stdexcept>

namespace qkdrate {

struct RootResult {
  double root;
  double residual;       // |f(root)|
  double bracket_width;  // width of the final bracket
};

/// Bisection to machine resolution. Requires f to change sign over [lo, hi].
template <typename F>
RootResult bisect_root(F&& f, double lo, double hi) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw std::invalid_argument("bisect_root: invalid bracket");
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0, 0.0};
  if (fhi == 0.0) return {hi, 0.0, 0.0};
  if (std::signbit(flo) == std::signbit(fhi))
    throw std::runtime_error("bisect_root: no sign change over bracket");
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at machine resolution
    const double fm = f(mid);
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  const double root = 0.5 * (lo + hi);
  return {root, std::abs(f(root)), hi - lo};
}

struct MaxResult {
  double arg;
  double value;
};

/// Golden-section search for the maximum of a unimodal function on [lo, hi].
/// Stops once the interval shrinks below rel_tol relative to its midpoint.
template <typename F>
MaxResult golden_section_max(F&& f, double lo, double hi, double rel_tol) {
  if (!(lo < hi)) throw std::invalid_argument("golden_section_max: empty interval");
  const double invphi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 400; ++it) {
    if ((b - a) <= rel_tol * 0.5 * (std::abs(a) + std::abs(b))) break;
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    }
  }
  return f1 > f2 ? MaxResult{x1, f1} : MaxResult{x2, f2};
}

}  // namespace qkdrate
