#pragma once

// The two-parameter family with CDF T_{lambda,mu}(x) = c^{-1} int_0^x
// exp(-t^2 (lambda + mu erf t)) dt on [0, inf). Its parameters can be fitted
// to a target CDF such as the Maxwell-Boltzmann one.

#include <cstdint>
#include <functional>
#include <vector>

#include "tspecial/errors.hpp"

namespace tspecial::dist {

struct TDistParams {
  double lambda = 1.0;
  double mu = 0.0;
  double c = 0.0;  // int_0^inf exp(-t^2 (lambda + mu erf t)) dt
};

/// Requires lambda > 0 and lambda + mu > 0 (tail exponent -x^2 (lambda + mu)).
/// A normalizer that fails to converge throws ConvergenceError.
TDistParams make_params(double lambda, double mu);

/// Unnormalized density exp(-x^2 (lambda + mu erf x)).
double kernel(const TDistParams& p, double x);

/// Unnormalized F(x) = int_0^x kernel.
double unnormalized_cdf(const TDistParams& p, double x);

double cdf(const TDistParams& p, double x);
/// Includes c^{-1} so that the density integrates to one.
double pdf(const TDistParams& p, double x);

/// x with |cdf(x) - q| <= 1e-12, bracket grown geometrically from [0, 1].
double quantile(const TDistParams& p, double q);

/// Inverse-transform draws from a seeded 64-bit Mersenne Twister.
std::vector<double> sample(const TDistParams& p, std::uint64_t seed, int n);

/// sqrt(pi) x y'' - 2 e^{-x^2} y' (sqrt(pi) e^{x^2} ln y' - mu x^3) for the
/// unnormalized y = F: y' is the kernel, y'' a central difference of it.
double ode_residual(const TDistParams& p, double x, double h);

/// x y'' - 2 y' ln y' for y = erf(sqrt(lambda) x); vanishes only at lambda = pi/4.
double reduced_ode_residual(double lambda, double x, double h);

/// Slope condition used by the fit: the unnormalized kernel (the default) or
/// the normalized density.
enum class SlopeMatch { kernel, density };

struct FitOptions {
  SlopeMatch slope = SlopeMatch::kernel;
  bool freeze_mu = false;  // fit lambda alone from the value condition
  double tol = 1e-10;
  int max_iter = 60;
};

struct FitResult {
  double lambda = 0.0;
  double mu = 0.0;
  double c = 0.0;
  double residual = 0.0;
  int iterations = 0;
  std::vector<FitStep> trace;
};

/// Damped Newton on target(x0) = cdf(x0) and target'(x0) = slope(x0), with a
/// forward-difference Jacobian (step 1e-6 (1 + |param|)). Divergence or a
/// singular Jacobian throws FitError carrying the iterates.
FitResult fit_to_target(const std::function<double(double)>& target,
                        const std::function<double(double)>& target_deriv, double x0, double lambda0,
                        double mu0, const FitOptions& options = {});

/// erf(x/(sqrt(2) a)) - sqrt(2/pi) (x/a) exp(-x^2/(2 a^2)).
double maxwell_cdf(double a, double x);
double maxwell_pdf(double a, double x);

struct MaxwellApprox {
  double a = 1.0;
  double fit_point = 1.0;
  FitResult fit;
  TDistParams params;
};

/// Fits T_{lambda,mu} to erf(x/(sqrt(2) a)) at fit_point; 0 < a <= 1.
MaxwellApprox fit_maxwell(double a, double fit_point = 1.0, const FitOptions& options = {});

/// The Maxwell CDF with erf(x/(sqrt(2) a)) replaced by the fitted T_{lambda,mu}.
double maxwell_approx(const MaxwellApprox& m, double x);
double maxwell_approx(double a, double x, double fit_point = 1.0);

}  // namespace tspecial::dist
