#pragma once

// Integrals of powers of erf over [-1, 1] and their closed-form
// approximations through erf(x)^2 ~ 1 - e^{-a x^2} and Pade forms of erf.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tspecial/approx.hpp"

namespace tspecial::integrals {

/// One line of a comparison table. abs_errors[name] = |variant - oracle|.
struct ComparisonRow {
  int index = 0;
  double oracle = 0.0;
  double closed_form = 0.0;
  std::map<std::string, double> approx_variants;
  std::map<std::string, double> abs_errors;
  /// Second oracle when the shifted forms admit two readings.
  std::optional<double> alt_oracle;
  /// Which reading the shifted forms match better ("unweighted" or "weighted").
  std::string best_reading;
};

/// Default a: (1 + pi)^(2/3) ln(2)^2.
double default_a();

/// J_n = int_{-1}^{1} (1 - e^{-a x^2})^n dx
///     = 2 + sqrt(pi/a) sum_{k=1}^n (-1)^k C(n,k) erf(sqrt(a k)) / sqrt(k).
/// n above 60 throws RangeError.
double j_n(int n, double a);

/// Direct quadrature of the J_n integrand.
double j_n_quadrature(int n, double a);

/// J_{n,k} = int_{-1}^{1} x^{4k} e^{-n a x^2} dx = b^{-(2k+1/2)} gamma(2k+1/2, b), b = n a.
/// n = 0 gives 2/(4k+1).
double j_nk(int n, int k, double a);

/// The same integral from the antiderivative -(1/2) x^{4k+1} E_{1/2-2k}(b x^2),
/// including its non-zero limit at x -> 0: b^{-s} Gamma(s) - E_{1/2-2k}(b).
double j_nk_antiderivative(int n, int k, double a);

/// I_{2k} = int_{-1}^{1} x^{4k} erf(x)^{2k} dx by quadrature; k above 20 throws RangeError.
double i2k_oracle(int k);

/// int_{-1}^{1} x^{2k} erf(x)^k dx; zero for odd k.
double parity_integral(int k);

/// sum_j (-1)^j C(k, j) J_{j,k}: I_{2k} with erf^2 replaced by 1 - e^{-a x^2}.
double i2k_gauss(int k, double a);

/// Quadrature of int_{-1}^{1} x^{4k} (1 - e^{-a x^2})^k dx.
double i2k_gauss_quadrature(int k, double a);

using PadeVariant = approx::PadeVariant;

/// Closed forms of int_{-1}^{1} x^{4k} pade_erf(x)^{2k} dx:
///   simple:  (2/(6k+1)) (4/pi)^k 2F1(2k, 3k+1/2; 3k+3/2; -1/3)
///   refined: (2/(6k+1)) (4/pi)^k F1(3k+1/2; -2k, 2k; 3k+3/2; 1/30, -3/10)
/// k must lie in 1..8.
double i2k_pade(int k, PadeVariant variant);

/// The same forms with 6k+1/2; 6k+3/2 in place of 3k+1/2; 3k+3/2. They do
/// not equal the integrals they stand for and are kept for comparison only.
double i2k_pade_shifted(int k, PadeVariant variant);

/// Quadrature of the same Pade-approximated integrand.
double i2k_pade_quadrature(int k, PadeVariant variant);

/// I_n = int_{-1}^{1} erf(x)^{2n} dx against J_n at the default a and against
/// the Pade forms, both shifted (parameters 2n+1/2) and exact unweighted.
/// n must lie in 0..8.
ComparisonRow i_n_forms(int n);

/// I_{2k} with the Gaussian and Pade approximations; k in 0..8.
ComparisonRow i2k_row(int k, double a);

/// sum_{j=0}^K I_{2j}/(2j)!, the expansion of int_{-1}^{1} exp(-x^2 erf x) dx
/// with the odd-power terms removed. K above 20 throws RangeError.
double exp_expansion(int K);

/// int_{-1}^{1} exp(-x^2 erf x) dx by quadrature.
double exp_integral_oracle();

std::vector<ComparisonRow> i_n_table(int n_max);
std::vector<ComparisonRow> i2k_table(int k_max, double a);

}  // namespace tspecial::integrals
