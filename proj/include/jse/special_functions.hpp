#pragma once

#include <cmath>
#include <cstdint>

namespace jse {

/// ln Gamma(x) for x > 0. Absolute error below 1e-12 on [0.5, 200].
double log_gamma(double x);

/// Regularized lower incomplete gamma P(a, x) for a > 0, x >= 0.
/// Series expansion for x < a + 1, continued fraction otherwise.
double gamma_p(double a, double x);

/// P[chi^2_dof <= t].
double chi2_cdf(double t, int dof);

/// Density of chi^2_dof at t.
double chi2_pdf(double t, int dof);

/// Inverse of chi2_cdf in t; bracketed bisection refined by Newton.
double chi2_quantile(double p, int dof);

/// xi_J(p): quantile of the normalized chi-square (1/J) chi^2_J.
/// xi_J(0) = 0 by convention.
double xi(double p, int J);

double normal_cdf(double x);
double normal_pdf(double x);

/// Inverse standard-normal CDF, absolute error below 1e-10 on (0, 1).
double normal_quantile(double p);

namespace detail {

// Central-branch polynomial for the inverse normal CDF: with z = 2u - 1 and
// w = -ln(4u(1-u)), Phi^{-1}(u) = z * P(2w/6.25 - 1) for w <= 6.25.
// Coefficients from a degree-18 Chebyshev least-squares fit (see
// tests/oracles); max absolute error 5.3e-14 on the branch.
inline constexpr double kInvNormPoly[19] = {
    2.33862071002657,       1.0613592459418342,     -0.08332909352336153,
    -0.03196751620685236,   0.025184826654063817,   -0.0058510452166131155,
    -0.001798442496746233,  0.0017429902963632888,  -0.00037392180437238764,
    -0.00016527081133351377, 0.00013208865962727453, -2.1350363724568013e-05,
    -1.6026933197152035e-05, 1.0255752463543046e-05, -8.186859646617672e-07,
    -1.690589197465708e-06, 6.402995805462689e-07,  1.197711687129622e-07,
    -8.630658495884953e-08};

double inv_normal_tail(double u);  // Newton-polished fallback, w > 6.25

}  // namespace detail

/// Fast inverse normal CDF used by the bulk sampling paths. Absolute error
/// below 1e-12; the rare tail branch (|u - 1/2| > 0.4995) is exact to 1e-14.
inline double fast_normal_quantile(double u) {
  const double z = 2.0 * u - 1.0;
  const double q = (1.0 - z) * (1.0 + z);  // = 4u(1-u)
  const double w = -std::log(q);
  if (w <= 6.25) {
    const double v = w * (2.0 / 6.25) - 1.0;
    double s = detail::kInvNormPoly[18];
    for (int i = 17; i >= 0; --i) s = s * v + detail::kInvNormPoly[i];
    return z * s;
  }
  return detail::inv_normal_tail(u);
}

}  // namespace jse
