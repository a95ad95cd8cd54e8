// SPDX-License-Identifier: Apache-2.0
#include "sphscat/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace sphscat::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Coefficients of the polynomials u_k(t) in the large-order asymptotic
// expansion of I_nu(nu z); entry [k] holds the coefficients of
// t^k, t^{k+2}, ..., t^{3k}. Generated from the standard recurrence
// u_{k+1} = t^2(1-t^2)/2 u_k' + 1/8 int_0^t (1-5s^2) u_k ds.
const std::vector<std::vector<double>> kOlverU = {
    {1.0},
    {0.125, -0.20833333333333334},
    {0.0703125, -0.4010416666666667, 0.3342013888888889},
    {0.0732421875, -0.8912109375, 1.8464626736111112, -1.0258125964506173},
    {0.112152099609375, -2.3640869140625, 8.78912353515625, -11.207002616222994,
     4.669584423426247},
    {0.22710800170898438, -7.368794359479632, 42.53499874538846, -91.81824154324002,
     84.63621767460073, -28.212072558200244},
    {0.5725014209747314, -26.491430486951554, 218.1905117442116, -699.5796273761325,
     1059.9904525279999, -765.2524681411817, 212.57013003921713},
    {1.7277275025844574, -108.09091978839466, 1200.9029132163525, -5305.646978613403,
     11655.393336864534, -13586.550006434138, 8061.722181737309, -1919.457662318407},
    {6.074042001273483, -493.915304773088, 7109.514302489364, -41192.65496889755,
     122200.46498301746, -203400.17728041555, 192547.00123253153, -96980.59838863752,
     20204.29133096615},
    {24.380529699556064, -2499.8304818112097, 45218.76898136273, -331645.1724845636,
     1268365.2733216248, -2813563.226586534, 3763271.297656404, -2998015.9185381066,
     1311763.6146629772, -242919.18790055133},
    {110.01714026924674, -13886.08975371704, 308186.4046126624, -2785618.1280864547,
     13288767.166421818, -37567176.66076335, 66344512.27472903, -74105148.21153265,
     50952602.49266464, -19706819.118432228, 3284469.853072038},
    {551.3358961220206, -84005.43360302408, 2243768.1779224495, -24474062.72573873,
     142062907.7975331, -495889784.2750303, 1106842816.8230145, -1621080552.1083372,
     1553596899.57058, -939462359.6815784, 325573074.18576574, -49329253.66450996},
    {3038.090510922384, -549842.3275722887, 17395107.553978164, -225105661.88941526,
     1559279864.8792574, -6563293792.619285, 17954213731.1556, -33026599749.800724,
     41280185579.753975, -34632043388.158775, 18688207509.295826, -5866481492.051847,
     814789096.1183121}};

void check_bessel_domain(double nu, double x) {
  if (!(nu >= 0.0)) throw std::domain_error("bessel: order must be >= 0");
  if (!(x > 0.0)) throw std::domain_error("bessel: argument must be > 0");
}

// Hankel large-argument expansion of ln I_nu(x); adequate for nu <= 15 once
// x >= 30 (the alternating terms then decay fast enough that the summation
// loses at most a couple of ulps to cancellation).
double log_bessel_hankel(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0, comp = 0.0;
  const int kmax = std::max(8, static_cast<int>(2.0 * x));
  for (int k = 1; k < kmax; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (8.0 * k * x);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (std::fabs(term) < 1e-18 * std::fabs(sum) && k > 3) break;
  }
  return x - 0.5 * std::log(2.0 * kPi * x) + std::log(sum);
}

// Uniform large-order expansion of ln I_nu(nu z); used for nu > 15 where the
// Hankel form cancels catastrophically near the seam x = 2 nu.
double log_bessel_uniform(double nu, double x) {
  const double z = x / nu;
  const double r = std::sqrt(1.0 + z * z);
  const double t = 1.0 / r;
  const double eta = r + std::log(z / (1.0 + r));
  double series = 0.0;
  double nu_pow = 1.0;
  for (std::size_t k = 0; k < kOlverU.size(); ++k) {
    double poly = 0.0;
    // Horner in t^2 with a leading t^k.
    const auto& coeffs = kOlverU[k];
    for (std::size_t j = coeffs.size(); j-- > 0;) poly = poly * (t * t) + coeffs[j];
    poly *= std::pow(t, static_cast<double>(k));
    series += poly / nu_pow;
    nu_pow *= nu;
  }
  return nu * eta - 0.5 * std::log(2.0 * kPi * nu) - 0.5 * std::log(r) + std::log(series);
}

// Continued fraction for I_{m+1}(x)/I_m(x) (Gauss CF, modified Lentz).
double bessel_ratio_cf(double m, double x) {
  constexpr double tiny = 1e-300;
  double f = tiny, c = f, d = 0.0;
  const long max_iter = 10000 + static_cast<long>(4.0 * x);
  for (long j = 1; j <= max_iter; ++j) {
    const double b = 2.0 * (m + static_cast<double>(j)) / x;
    d = b + d;
    if (d == 0.0) d = tiny;
    c = b + 1.0 / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) return f;
  }
  throw std::runtime_error("bessel_i_ratio: continued fraction did not converge");
}

}  // namespace

namespace detail {

double bessel_seam(double nu) { return std::max(30.0, 2.0 * nu); }

double bessel_series_log_factor(double nu, double x) {
  if (x == 0.0) return 0.0;
  const double q = 0.25 * x * x;
  double term = 1.0;
  // Accumulate the tail T with the leading 1 kept implicit so log1p stays
  // accurate when the whole sum is 1 + O(eps).
  double tail = 0.0, comp = 0.0;
  double offset = 0.0;
  bool scaled = false;
  double s = 1.0;
  for (long k = 1; k <= 200000; ++k) {
    term *= q / (static_cast<double>(k) * (nu + static_cast<double>(k)));
    if (!scaled) {
      const double y = term - comp;
      const double t = tail + y;
      comp = (t - tail) - y;
      tail = t;
      if (term < 1e-17 * (1.0 + tail) && k > 3) break;
      if (tail > 1e280) {
        scaled = true;
        s = 1.0 + tail;
        offset = std::log(s);
        term /= s;
        s = 1.0;
        comp = 0.0;
      }
    } else {
      const double y = term - comp;
      const double t = s + y;
      comp = (t - s) - y;
      s = t;
      if (term < 1e-17 * s && k > 3) break;
      if (s > 1e280) {
        offset += std::log(s);
        term /= s;
        comp /= s;
        s = 1.0;
      }
    }
  }
  return scaled ? offset + std::log(s) : std::log1p(tail);
}

double log_bessel_i_series(double nu, double x) {
  return nu * std::log(0.5 * x) - std::lgamma(nu + 1.0) + bessel_series_log_factor(nu, x);
}

double log_bessel_i_asymptotic(double nu, double x) {
  return nu <= 15.0 ? log_bessel_hankel(nu, x) : log_bessel_uniform(nu, x);
}

}  // namespace detail

double log_bessel_i(double nu, double x) {
  check_bessel_domain(nu, x);
  return x < detail::bessel_seam(nu) ? detail::log_bessel_i_series(nu, x)
                                     : detail::log_bessel_i_asymptotic(nu, x);
}

std::vector<double> bessel_i_ratio_sequence(double nu, int count, double x) {
  check_bessel_domain(nu, x);
  if (count < 0) throw std::domain_error("bessel_i_ratio_sequence: count must be >= 0");
  std::vector<double> ratios(static_cast<std::size_t>(count));
  if (count == 0) return ratios;
  // Seed the top ratio with the continued fraction, then recurse downward:
  // 1/r_{m-1} = 2m/x + r_m. Downward is the stable direction for I.
  const double top = nu + static_cast<double>(count - 1);
  double r = bessel_ratio_cf(top, x);
  ratios[static_cast<std::size_t>(count - 1)] = r;
  for (int j = count - 1; j > 0; --j) {
    const double m = nu + static_cast<double>(j);
    r = 1.0 / (2.0 * m / x + r);
    ratios[static_cast<std::size_t>(j - 1)] = r;
  }
  return ratios;
}

double bessel_i_ratio(double nu, int ell, double x) {
  check_bessel_domain(nu, x);
  if (ell < 0) throw std::domain_error("bessel_i_ratio: ell must be >= 0");
  if (ell == 0) return 1.0;
  const auto ratios = bessel_i_ratio_sequence(nu, ell, x);
  double prod = 1.0;
  for (double r : ratios) prod *= r;
  return prod;
}

double legendre_p(int ell, int p, double t) {
  if (ell < 0) throw std::domain_error("legendre_p: ell must be >= 0");
  if (p < 2) throw std::domain_error("legendre_p: p must be >= 2");
  if (std::fabs(t) > 1.0 + 1e-12) throw std::domain_error("legendre_p: |t| must be <= 1");
  t = std::clamp(t, -1.0, 1.0);
  if (ell == 0) return 1.0;
  if (ell == 1) return t;
  const double lam = 0.5 * (p - 2);
  double pm1 = 1.0;
  double pl = t;
  for (int l = 1; l < ell; ++l) {
    // Recurrence for the normalized polynomials; keeps every value in [-1,1].
    const double a = 2.0 * (l + lam) / (l + 2.0 * lam);
    const double b = static_cast<double>(l) / (l + 2.0 * lam);
    const double next = a * t * pl - b * pm1;
    pm1 = pl;
    pl = next;
  }
  return pl;
}

std::vector<double> legendre_sequence(int ell_max, int p, double t) {
  if (ell_max < 0) throw std::domain_error("legendre_sequence: ell_max must be >= 0");
  if (p < 2) throw std::domain_error("legendre_sequence: p must be >= 2");
  if (std::fabs(t) > 1.0 + 1e-12) throw std::domain_error("legendre_sequence: |t| must be <= 1");
  t = std::clamp(t, -1.0, 1.0);
  std::vector<double> seq(static_cast<std::size_t>(ell_max) + 1);
  seq[0] = 1.0;
  if (ell_max == 0) return seq;
  seq[1] = t;
  const double lam = 0.5 * (p - 2);
  for (int l = 1; l < ell_max; ++l) {
    const double a = 2.0 * (l + lam) / (l + 2.0 * lam);
    const double b = static_cast<double>(l) / (l + 2.0 * lam);
    seq[static_cast<std::size_t>(l) + 1] =
        a * t * seq[static_cast<std::size_t>(l)] - b * seq[static_cast<std::size_t>(l) - 1];
  }
  return seq;
}

double log_surface_area(int p) {
  if (p < 1) throw std::domain_error("surface_area: p must be >= 1");
  return std::log(2.0) + 0.5 * p * std::log(kPi) - std::lgamma(0.5 * p);
}

double surface_area(int p) { return std::exp(log_surface_area(p)); }

double log_normalizing_constant(int p, int ell) {
  if (p < 2) throw std::domain_error("normalizing_constant: p must be >= 2");
  if (ell < 0) throw std::domain_error("normalizing_constant: ell must be >= 0");
  if (ell == 0) return -log_surface_area(p);  // (p-2)Gamma(p-2) = Gamma(p-1), any p
  return std::log(2.0 * ell + p - 2.0) + std::lgamma(static_cast<double>(ell) + p - 2.0) -
         std::lgamma(static_cast<double>(ell) + 1.0) - std::lgamma(static_cast<double>(p) - 1.0) -
         log_surface_area(p);
}

double normalizing_constant(int p, int ell) { return std::exp(log_normalizing_constant(p, ell)); }

namespace {

QuadratureRule compute_gauss_legendre(int n) {
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi-style initial guess, then Newton on the classical recurrence.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int l = 2; l <= n; ++l) {
        const double p2 = ((2.0 * l - 1.0) * x * p1 - (l - 1.0) * p0) / l;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    // One more recurrence pass at the converged node for the weight.
    double p0 = 1.0, p1 = x;
    for (int l = 2; l <= n; ++l) {
      const double p2 = ((2.0 * l - 1.0) * x * p1 - (l - 1.0) * p0) / l;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

const QuadratureRule& cached_gauss_legendre(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<QuadratureRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<QuadratureRule>(compute_gauss_legendre(n));
  return *slot;
}

double apply_rule(const QuadratureRule& rule, const std::function<double(double)>& f, double a,
                  double b) {
  const double mid = 0.5 * (a + b);
  const double halfw = 0.5 * (b - a);
  double sum = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double v = rule.weights[i] * f(mid + halfw * rule.nodes[i]);
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return halfw * sum;
}

}  // namespace

const QuadratureRule& gauss_legendre(int n) {
  if (n < 1) throw std::domain_error("gauss_legendre: order must be >= 1");
  return cached_gauss_legendre(n);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 int max_nodes) {
  int n = 64;
  double prev = apply_rule(gauss_legendre(n), f, a, b);
  while (n < max_nodes) {
    n *= 2;
    const double cur = apply_rule(gauss_legendre(n), f, a, b);
    if (std::fabs(cur - prev) <= tol * std::max(1.0, std::fabs(cur))) return cur;
    prev = cur;
  }
  return prev;
}

double integrate_zonal(int p, const std::function<double(double)>& f_cos, double tol,
                       int max_nodes) {
  if (p < 2) throw std::domain_error("integrate_zonal: p must be >= 2");
  const double factor = p == 2 ? 2.0 : surface_area(p - 1);
  auto g = [&](double theta) {
    return f_cos(std::cos(theta)) * std::pow(std::sin(theta), static_cast<double>(p - 2));
  };
  return factor * integrate(g, 0.0, kPi, tol, max_nodes);
}

}  // namespace sphscat::specfun
