#ifndef HYPERSPECTRA_BISECTION_HPP
#define HYPERSPECTRA_BISECTION_HPP

#include <cmath>
#include <string>

#include "hyperspectra/errors.hpp"

namespace hyperspectra {

/// Root of f on [lo, hi] by plain bisection. f(lo) and f(hi) must differ in
/// sign; infinities are fine at the endpoints. Stops once the bracket is no
/// wider than tol or can no longer be split in double precision.
template <class F>
double bisect(F&& f, double lo, double hi, double tol, const std::string& what = "bisect") {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::isnan(flo) || std::isnan(fhi) || (flo < 0.0) == (fhi < 0.0)) {
    throw SolverError(what + ": bracket [" + std::to_string(lo) + ", " + std::to_string(hi) +
                      "] does not straddle a root (residual signs " + (flo < 0.0 ? "-" : "+") + "/" +
                      (fhi < 0.0 ? "-" : "+") + ")");
  }
  for (int it = 0; it < 4000 && hi - lo > tol; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (!(mid > lo && mid < hi)) break;
    const double fm = f(mid);
    if (std::isnan(fm)) throw SolverError(what + ": residual is NaN at " + std::to_string(mid));
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

}  // namespace hyperspectra

#endif  // HYPERSPECTRA_BISECTION_HPP
