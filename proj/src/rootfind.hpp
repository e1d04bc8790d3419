#ifndef BIGRAV_ROOTFIND_HPP
#define BIGRAV_ROOTFIND_HPP

// Bracketed root finding: bisection with secant acceleration. The secant
// step is accepted only when it stays safely inside the bracket, so the
// bisection convergence guarantee is kept.

#include <cmath>
#include <functional>

#include "errors.hpp"

namespace bigrav {

struct RootOptions {
  double xtol = 1e-14;       // absolute tolerance on the root
  int max_iter = 200;
  bool require_bracket = true;
};

template <class F>
double bracket_root(F&& f, double lo, double hi, const RootOptions& opt = {}) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0)) {
    if (opt.require_bracket)
      raise(errc::out_of_range, "bracket_root: interval does not bracket a sign change");
    return (std::fabs(flo) < std::fabs(fhi)) ? lo : hi;
  }

  double x = lo, fx = flo;
  for (int it = 0; it < opt.max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    // secant proposal from the bracket ends
    double cand = mid;
    const double denom = fhi - flo;
    if (denom != 0.0) {
      const double sec = lo - flo * (hi - lo) / denom;
      const double margin = 0.1 * (hi - lo);
      if (sec > lo + margin && sec < hi - margin) cand = sec;
    }
    x = cand;
    fx = f(x);
    if (fx == 0.0) return x;
    if ((fx > 0) == (flo > 0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    if (hi - lo < opt.xtol) return 0.5 * (lo + hi);
  }
  raise(errc::no_convergence, "bracket_root: iteration budget exhausted");
}

}  // namespace bigrav

#endif
