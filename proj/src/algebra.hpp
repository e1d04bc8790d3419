#ifndef BIGRAV_ALGEBRA_HPP
#define BIGRAV_ALGEBRA_HPP

// Closed-form algebraic layer: the cubic root k(m), the structure functions
// alpha1(m), alpha2(m), their m-derivatives, the f-function and the residuals
// whose roots are the critical points m0 and m_min.

#include "errors.hpp"
#include "real.hpp"

namespace bigrav::algebra {

inline constexpr double kPoleGuard = 1e-9;  // |m + 2| treated as the pole

struct AlgebraicState {
  double m;
  double k;
  double alpha1;
  double alpha2;
  double dalpha1_dm;
  double dalpha2_dm;
};

struct AlphaPair {
  double alpha1;
  double alpha2;
};

// ---- templated kernels (double / __float128) ------------------------------

template <class R>
inline R cubic_residual(R m, R k) {
  return ((k - m / R(3)) * k + R(2) / R(3)) * k - R(4) / R(3) * m;
}

template <class R>
inline R cubic_derivative(R m, R k) {
  return R(3) * k * k - R(2) * m / R(3) * k + R(2) / R(3);
}

// Unique real root of k^3 - (m/3)k^2 + (2/3)k - (4/3)m = 0. The discriminant
// expression 8 + (863/3)m^2 + (4/3)m^4 has positive coefficients only, so it
// is >= 8 for all real m and the real root is simple.
template <class R>
R solve_k_impl(R m) {
  using rmath::fabs;
  using rmath::scbrt;
  using rmath::sqrt;
  const R disc = sqrt(R(8) + R(863) / R(3) * m * m + R(4) / R(3) * m * m * m * m);
  const R a3 = R(17) * m + m * m * m / R(27);
  R k = m / R(9) + scbrt(a3 + disc) / R(3) + scbrt(a3 - disc) / R(3);
  // Newton polish: the closed form loses digits to cancellation near m = 0.
  for (int i = 0; i < 4; ++i) {
    const R step = cubic_residual(m, k) / cubic_derivative(m, k);
    k -= step;
    if (fabs(step) <= R(2) * rmath::eps<R>() * (R(1) + fabs(k))) break;
  }
  return k;
}

// kappa = k - 1 as a function of eps = m - 1, from the shifted cubic
//   kappa^3 + (8/3 - eps/3) kappa^2 + (3 - 2 eps/3) kappa - (5/3) eps = 0.
// Cancellation-free for small |eps|; kappa ~ (5/9) eps.
template <class R>
R kappa_of_eps(R eps) {
  using rmath::fabs;
  const R c2 = R(8) / R(3) - eps / R(3);
  const R c1 = R(3) - R(2) * eps / R(3);
  const R c0 = -R(5) / R(3) * eps;
  R kap = R(5) / R(9) * eps;
  for (int i = 0; i < 6; ++i) {
    const R fk = ((kap + c2) * kap + c1) * kap + c0;
    const R dk = (R(3) * kap + R(2) * c2) * kap + c1;
    const R step = fk / dk;
    kap -= step;
    if (fabs(step) <= R(2) * rmath::eps<R>() * fabs(kap)) break;
  }
  return kap;
}

// Cancellation-sensitive combinations. d1 = alpha1 - 1, d2 = alpha2 - 1,
// G = m(alpha2 - 1) - (alpha1 - 1), gsl = G / (m - 1).
template <class R>
struct Deltas {
  R k;
  R alpha1, alpha2;
  R d1, d2;
  R G;
  R gsl;  // G / (m - 1); finite and ~ -5/9 at m = 1
};

template <class R>
Deltas<R> deltas_impl(R m) {
  using rmath::fabs;
  using rmath::sqrt;
  Deltas<R> out;
  const R eps = m - R(1);
  if (fabs(eps) < R(1e-3)) {
    // near m = 1 both alpha - 1 and G vanish; use the shifted forms
    const R kap = kappa_of_eps(eps);
    const R k = R(1) + kap;
    const R u = (m * k + R(2)) / (k * k + R(4));
    const R a2 = sqrt(R(15)) / (R(2) + m) * sqrt(u);
    // 15(mk+2) - (2+m)^2(k^2+4) expanded about (1,1); no cancellation
    const R Pi = -(R(9) + (R(6) + eps) * eps) * kap * kap +
                 (-R(3) + (R(3) - R(2) * eps) * eps) * kap - (R(15) + R(5) * eps) * eps;
    const R d2 = Pi / ((R(2) + m) * (R(2) + m) * (k * k + R(4)) * (a2 + R(1)));
    const R d1 = kap * a2 + d2;
    const R sigma = (eps != R(0)) ? kap / eps : R(5) / R(9);
    out.k = k;
    out.alpha1 = R(1) + d1;
    out.alpha2 = a2;
    out.d1 = d1;
    out.d2 = d2;
    out.gsl = d2 - sigma * a2;
    out.G = eps * out.gsl;
  } else {
    const R k = solve_k_impl(m);
    const R u = (m * k + R(2)) / (k * k + R(4));
    const R a2 = sqrt(R(15)) / (R(2) + m) * sqrt(u);
    const R a1 = k * a2;
    out.k = k;
    out.alpha1 = a1;
    out.alpha2 = a2;
    out.d1 = a1 - R(1);
    out.d2 = a2 - R(1);
    out.G = m * out.d2 - out.d1;
    out.gsl = out.G / eps;
  }
  return out;
}

template <class R>
struct DerivPair {
  R dalpha1, dalpha2;
};

template <class R>
DerivPair<R> dalphas_impl(R m, const Deltas<R>& d) {
  using rmath::sqrt;
  const R k = d.k;
  const R den = cubic_derivative(m, k);
  const R kd = (k * k / R(3) + R(4) / R(3)) / den;
  const R k24 = k * k + R(4);
  const R u = (m * k + R(2)) / k24;
  const R ud = ((k + m * kd) * k24 - (m * k + R(2)) * R(2) * k * kd) / (k24 * k24);
  const R su = sqrt(u);
  const R a2d = sqrt(R(15)) * (ud / (R(2) * su) / (R(2) + m) - su / ((R(2) + m) * (R(2) + m)));
  const R a1d = kd * d.alpha2 + k * a2d;
  return {a1d, a2d};
}

// ---- double-precision public surface (guards and error contracts) ---------

double solve_k(double m);
AlphaPair alphas(double m);
AlphaPair dalphas_dm(double m);
AlphaPair d2alphas_dm2(double m);  // Richardson finite differences of the analytic first derivatives
double compatibility_residual(double m);
double structure_f(double m, double r_over_L);
double ratio_defect(double m);
double minimization_defect(double m);
AlgebraicState state(double m);

// combinations used throughout the radial map and metric
double G_of(double m);     // m(alpha2-1) - (alpha1-1)
double dG_dm(double m);    // (alpha2-1) + m alpha2' - alpha1'
double N_of(double m);     // m(2+m) alpha1' - 2(alpha1-1)
double D_of(double m);     // (2+m) alpha1' - 2(alpha2-1); = minimization_defect
double dN_dm(double m);
double dD_dm(double m);

void check_pole(double m);  // raises pole_at_minus_two inside the guard band

}  // namespace bigrav::algebra

#endif
