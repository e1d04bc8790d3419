#ifndef BIGRAV_TANH_SINH_HPP
#define BIGRAV_TANH_SINH_HPP

// Double-exponential (tanh-sinh) quadrature on a finite interval.
// Handles integrable endpoint singularities (log, algebraic): abscissas are
// generated as distances from the endpoints so nodes never collapse onto
// them, and a node that still rounds onto an endpoint is skipped (its weight
// is double-exponentially small).

#include <algorithm>
#include <cstdint>

#include "real.hpp"

namespace bigrav {

template <class R>
struct QuadResult {
  R value{};
  int levels = 0;
  long evals = 0;
  bool converged = false;
};

namespace detail {

// Beyond this t the weights underflow for the given scalar; with the early
// break below the cap is rarely reached.
template <class R>
constexpr double ts_tmax() {
  return 6.6;
}
#if BIGRAV_HAVE_FLOAT128
template <>
constexpr double ts_tmax<real128>() {
  return 9.3;
}
#endif

}  // namespace detail

template <class R, class F>
QuadResult<R> tanh_sinh(F&& f, R a, R b, R tol, int max_level = 12) {
  using rmath::cosh;
  using rmath::exp;
  using rmath::fabs;
  using rmath::isfinite;
  using rmath::sinh;
  using rmath::tanh;

  QuadResult<R> out;
  if (a == b) {
    out.converged = true;
    return out;
  }

  const R c = (b - a) / R(2);
  const R d = (b + a) / R(2);
  const R pi_half = R(3.14159265358979323846264338327950288L) / R(2);
  const double tmax = detail::ts_tmax<R>();

  auto node = [&](double t) -> R {
    const R tr = R(t);
    const R u = pi_half * sinh(tr);
    const R au = fabs(u);
    const R eu = exp(R(-2) * au);
    const R sech2 = R(4) * eu / ((R(1) + eu) * (R(1) + eu));
    const R w = pi_half * cosh(tr) * sech2;
    const R dist = R(2) * eu / (R(1) + eu);  // 1 - |tanh(u)|, stable
    R x;
    if (u >= R(0))
      x = b - c * dist;
    else
      x = a + c * dist;
    if (x == a || x == b) return R(0);
    const R v = f(x);
    if (!isfinite(v)) return R(0);
    ++out.evals;
    return w * v;
  };

  const R term_floor = tol / R(1024);

  double h = 1.0;
  R sum = node(0.0);
  for (int i = 1; i * h <= tmax; ++i) {
    sum += node(i * h) + node(-i * h);
  }
  R total = sum * R(h) * c;

  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    R s = R(0);
    int misses = 0;
    for (std::int64_t i = 1; i * h <= tmax; i += 2) {
      const R tp = node(i * h);
      const R tm = node(-i * h);
      s += tp + tm;
      // once both tails stop contributing, further nodes are negligible
      if (double(i) * h > 3.0 && fabs(tp) + fabs(tm) < term_floor * (R(1) + fabs(s))) {
        if (++misses >= 2) break;
      } else {
        misses = 0;
      }
    }
    const R total_new = total / R(2) + s * R(h) * c;
    const R delta = fabs(total_new - total);
    total = total_new;
    out.levels = level;
    if (level >= 4 && delta < tol * std::max(R(1), fabs(total))) {
      out.converged = true;
      break;
    }
  }
  out.value = total;
  return out;
}

}  // namespace bigrav

#endif
