#pragma once

// Approximation generators: Chebyshev series on an interval, the exponential
// approximations of erf(x)^2, and two Pade forms of erf.

#include <span>
#include <vector>

#include "tspecial/quadrature.hpp"

namespace tspecial::approx {

/// P(x) = c_0/2 + sum_{j>=1} c_j T_j(t) with t = (a + b - 2x)/(a - b), so the
/// interval [a, b] maps onto [-1, 1] with a -> -1 and b -> 1.
struct ChebyshevApproximant {
  double a = -1.0;
  double b = 1.0;
  std::vector<double> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  /// Throws DomainError unless a < b and there is at least one coefficient.
  void validate() const;
};

struct ChebValue {
  double value = 0.0;
  bool extrapolated = false;  // x was outside [a, b]
};

/// Chebyshev-Gauss projection of f on [a, b] onto degree n using m_nodes
/// cosine-spaced samples: c_j = (2/m) sum_i f(x_i) cos(j theta_i).
ChebyshevApproximant cheb_fit(const quadrature::Integrand& f, double a, double b, int n,
                              int m_nodes = 64);

/// Clenshaw evaluation; points outside [a, b] are evaluated but flagged.
ChebValue cheb_eval(const ChebyshevApproximant& p, double x);

/// Monomial coefficients in the original variable x, ascending powers.
/// The basis change runs in exact rational arithmetic and rounds once.
/// Degree above 30 throws RangeError.
std::vector<double> cheb_to_monomial(const ChebyshevApproximant& p);

/// Inverse of cheb_to_monomial for a polynomial on [a, b].
ChebyshevApproximant monomial_to_cheb(std::span<const double> monomial, double a, double b);

/// Horner evaluation of ascending-power monomial coefficients.
double eval_monomial(std::span<const double> monomial, double x);

enum class ErfSqVariant { simple, pade };

struct ErfSqParams {
  ErfSqVariant variant = ErfSqVariant::simple;
  double a = 0.0;      // simple: 1 - exp(-a x^2)
  double alpha = 0.0;  // pade: 1 - exp(-(4/pi) x^2 (1 + alpha x^2)/(1 + beta x^2))
  double beta = 0.0;

  static ErfSqParams simple(double a);
  /// alpha = (10 - pi^2)/(5 (pi - 3) pi), beta = (120 - 60 pi + 7 pi^2)/(15 (pi - 3) pi).
  static ErfSqParams pade();
  void validate() const;
};

double erfsq_approx(double x, const ErfSqParams& p);

/// int_0^8 (erf(x)^2 - approx(x))^2 dx; the integrand is below 1e-28 past 8.
double erfsq_objective(const ErfSqParams& p);

/// max |erf(x)^2 - approx(x)| over [lo, hi], dense grid plus local refinement.
double erfsq_max_error(const ErfSqParams& p, double lo = 0.0, double hi = 6.0);

struct OptimalA {
  double a_star = 0.0;
  double f_min = 0.0;
  double closed_form = 0.0;  // (1 + pi)^(2/3) ln(2)^2
};

/// Minimizes the simple-variant objective over a in [0.5, 2.5] by Brent's
/// method. A minimizer pinned to the bracket edge throws OptimizationError.
OptimalA optimize_a();

enum class PadeVariant { simple, refined };

/// simple: 2x/(sqrt(pi)(1 + x^2/3)); refined: the [3/2] Pade form
/// (2x/sqrt(pi))(1 - x^2/30)/(1 + 3x^2/10).
double pade_erf(double x, PadeVariant variant);

}  // namespace tspecial::approx
