#ifndef BIGRAV_REAL_HPP
#define BIGRAV_REAL_HPP

// Scalar abstraction so the algebra/quadrature/metric kernels can run in
// double for production paths and in __float128 where double cannot resolve
// the quantity under study (far-field matching, m -> 1 parametrizations).

#include <cmath>
#include <limits>

#if defined(__GNUC__) && defined(__x86_64__)
#define BIGRAV_HAVE_FLOAT128 1
#include <quadmath.h>
#endif

namespace bigrav {

#if BIGRAV_HAVE_FLOAT128
using real128 = __float128;
#endif

namespace rmath {

using std::atan;
using std::cbrt;
using std::cosh;
using std::exp;
using std::fabs;
using std::isfinite;
using std::log;
using std::pow;
using std::sinh;
using std::sqrt;
using std::tanh;

#if BIGRAV_HAVE_FLOAT128
inline real128 fabs(real128 x) { return fabsq(x); }
inline real128 sqrt(real128 x) { return sqrtq(x); }
inline real128 cbrt(real128 x) { return cbrtq(x); }
inline real128 log(real128 x) { return logq(x); }
inline real128 exp(real128 x) { return expq(x); }
inline real128 atan(real128 x) { return atanq(x); }
inline real128 sinh(real128 x) { return sinhq(x); }
inline real128 cosh(real128 x) { return coshq(x); }
inline real128 tanh(real128 x) { return tanhq(x); }
inline real128 pow(real128 x, real128 y) { return powq(x, y); }
inline bool isfinite(real128 x) { return finiteq(x) != 0; }
#endif

template <class R>
constexpr R eps() {
  return std::numeric_limits<R>::epsilon();
}
#if BIGRAV_HAVE_FLOAT128
template <>
constexpr real128 eps<real128>() {
  return FLT128_EPSILON;
}
#endif

// Signed real cube root.
template <class R>
inline R scbrt(R x) {
  return x < R(0) ? -cbrt(-x) : cbrt(x);
}

}  // namespace rmath
}  // namespace bigrav

#endif
