// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

namespace sphscat::specfun {

// ln I_nu(x) for nu >= 0, x > 0. Ascending power series below the seam
// x = max(30, 2 nu), asymptotic expansion above it (Hankel form for small
// orders, uniform large-order form otherwise). Relative error <= 1e-12 over
// nu in [0, 500], x in (0, 1e5].
double log_bessel_i(double nu, double x);

// I_{nu+ell}(x) / I_nu(x) in [0, 1]. Computed by a downward ratio recurrence
// seeded with a continued fraction, which avoids the catastrophic
// cancellation of exp(logI - logI) at large x.
double bessel_i_ratio(double nu, int ell, double x);

// Consecutive-order ratios I_{m+1}(x)/I_m(x) for m = nu, nu+1, ..., nu+count-1.
std::vector<double> bessel_i_ratio_sequence(double nu, int count, double x);

// Dimension-p Legendre polynomial P_ell(t) = C_ell^{(p-2)/2}(t) / C_ell^{(p-2)/2}(1),
// normalized so P_ell(1) = 1 and |P_ell(t)| <= 1 on [-1, 1].
double legendre_p(int ell, int p, double t);

// [P_0(t), ..., P_ell_max(t)].
std::vector<double> legendre_sequence(int ell_max, int p, double t);

// c_{p,ell}: inverse squared norm of P_ell under the surface measure of
// S^{p-1}, i.e. <P_ell, P_m> = delta_{lm} / c_{p,ell}.
double normalizing_constant(int p, int ell);
double log_normalizing_constant(int p, int ell);

// Area of S^{p-1}.
double surface_area(int p);
double log_surface_area(int p);

// Gauss-Legendre rule on (-1, 1): weights sum to 2 and t^k is integrated
// exactly for k <= 2n-1. Rules are cached per order.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const QuadratureRule& gauss_legendre(int n);

// Adaptive Gauss-Legendre integral of f over [a, b]: the node count doubles
// until two successive estimates agree to tol. Oracle-grade, not fast.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12, int max_nodes = 1 << 14);

// Integral of F(mu^T x) over S^{p-1} for zonal integrands, computed as
// omega_{p-2} * int_0^pi F(cos theta) sin^{p-2}(theta) dtheta. The theta
// substitution keeps the integrand smooth for every p >= 2, including the
// inverse square-root weight at p = 2.
double integrate_zonal(int p, const std::function<double(double)>& f_cos,
                       double tol = 1e-12, int max_nodes = 1 << 14);

namespace detail {
// Both sides of the regime seam, exposed so tests can check continuity at
// the same abscissa.
double log_bessel_i_series(double nu, double x);
double log_bessel_i_asymptotic(double nu, double x);
double bessel_seam(double nu);
// ln of sum_{k>=0} (x^2/4)^k / (k! (nu+1)_k); equals 0 at x = 0.
double bessel_series_log_factor(double nu, double x);
}  // namespace detail

}  // namespace sphscat::specfun
