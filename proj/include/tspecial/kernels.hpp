#pragma once

// Scalar special functions shared by every other module, from the erf family
// through the hypergeometric series.
//
// All functions are pure and thread-safe.

namespace tspecial {

/// Accuracy contract for series-based evaluations.
///
/// A sum stops once two consecutive terms fall below
/// max(abs_tol, rel_tol * |partial sum|). `max_terms` bounds the work; running out is a
/// ConvergenceError. For quadrature, `max_terms` is the integrand-evaluation
/// budget.
struct ToleranceSpec {
  double abs_tol = 0.0;
  double rel_tol = 1e-17;
  int max_terms = 10000;

  /// Throws PreconditionError unless at least one tolerance is positive and
  /// max_terms >= 1.
  void validate() const;
};

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrtPi = 1.77245385090551602730;
inline constexpr double kTwoOverSqrtPi = 1.12837916709551257390;

namespace kernels {

double erf(double x);
double erfc(double x);

/// Imaginary error function, -i erf(ix), for |x| <= 6.
double erfi(double x);

struct ErfcErfi {
  double erfc;
  double erfi;
};

/// Both complementary companions of erf at once; erfi's range guard applies.
ErfcErfi erfc_erfi(double x);

/// Standard normal CDF, (1 + erf(x / sqrt 2)) / 2.
double normal_cdf(double x);

struct IncompleteGamma {
  double lower;  ///< gamma(s, x)
  double upper;  ///< Gamma(s, x)
};

/// Lower and upper incomplete gamma for half-integer s > 0 and x >= 0.
IncompleteGamma incomplete_gamma(double s, double x);

/// Generalized exponential integral E_nu(z) = z^(nu-1) Gamma(1-nu, z).
/// Only nu = 1/2 - 2k (k = 0, 1, 2, ...) is supported.
double gen_expint(double nu, double z);

double hyp1f1(double a, double b, double z, const ToleranceSpec& tol = {});
double hyp2f1(double a, double b, double c, double z, const ToleranceSpec& tol = {});

/// Appell F1(a; b1, b2; c; x, y), summed over anti-diagonals m + n = d.
double appell_f1(double a, double b1, double b2, double c, double x, double y,
                 const ToleranceSpec& tol = {});

/// Physicists' Hermite polynomial H_n(x), n <= 200.
double hermite(int n, double x);

}  // namespace kernels
}  // namespace tspecial
