#pragma once

// Adaptive Gauss-Kronrod integration, the ground-truth oracle for every
// definite integral in the library, plus L2 distances and the explicit Euler
// scheme used to illustrate first-order convergence.

#include <functional>
#include <utility>
#include <vector>

#include "tspecial/kernels.hpp"

namespace tspecial::quadrature {

using Integrand = std::function<double(double)>;

struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;
  long n_evals = 0;
};

/// abs 1e-13 and rel 1e-12 within a budget of 10^6 integrand evaluations.
ToleranceSpec default_tolerance();

/// Globally adaptive G7/K15 bisection on [a, b].
///
/// Stops when the summed |K15 - G7| estimate is at most
/// max(abs_tol, rel_tol * |value|). Running out of the evaluation budget
/// (tol.max_terms) throws AccuracyError carrying the best estimate.
QuadResult integrate(const Integrand& f, double a, double b,
                     const ToleranceSpec& tol = default_tolerance());

/// Integral over [a, inf) through t = a + u / (1 - u). The integrand must
/// decay at least exponentially.
QuadResult integrate_semi_infinite(const Integrand& f, double a,
                                   const ToleranceSpec& tol = default_tolerance());

/// Quadratic-mean distance sqrt(int_a^b (f - g)^2 dx).
///
/// The squared difference is usually tiny, so the tolerance applies to the
/// integral of the square; the default is relative (1e-6) with a negligible
/// absolute floor.
double l2_distance(const Integrand& f, const Integrand& g, double a, double b,
                   const ToleranceSpec& tol = {1e-40, 1e-6, 1000000});

struct EulerTrace {
  double h = 0.0;
  std::vector<std::pair<double, double>> samples;

  double final_value() const { return samples.back().second; }
};

/// y_{k+1} = y_k + h * deriv(x_k), x_k = x0 + k h; returns n_steps + 1 samples.
EulerTrace euler_scheme(const Integrand& deriv, double x0, double y0, double h, int n_steps);

}  // namespace tspecial::quadrature
