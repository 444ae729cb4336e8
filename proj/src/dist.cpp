#include "tspecial/dist.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <boost/math/tools/toms748_solve.hpp>

#include "tspecial/kernels.hpp"
#include "tspecial/quadrature.hpp"

namespace tspecial::dist {
namespace {

constexpr ToleranceSpec kCdfTol{1e-17, 1e-14, 1000000};
// Beyond this point the CDF is formed from the upper tail instead.
constexpr double kTailSwitch = 2.5;

void check_x(double x, const char* who) {
  if (std::isnan(x) || x < 0.0) throw DomainError(std::string(who) + ": x must be >= 0");
}

struct Residual {
  double r1 = 0.0;
  double r2 = 0.0;
  double norm() const { return std::hypot(r1, r2); }
};

bool feasible(double lambda, double mu) { return lambda > 0.0 && lambda + mu > 0.0; }

}  // namespace

TDistParams make_params(double lambda, double mu) {
  if (!std::isfinite(lambda) || !std::isfinite(mu)) throw DomainError("make_params: parameters must be finite");
  if (!(lambda > 0.0)) throw DomainError("make_params: lambda must be positive");
  if (!(lambda + mu > 0.0)) throw DomainError("make_params: lambda + mu must be positive");
  TDistParams p{lambda, mu, 0.0};
  try {
    p.c = quadrature::integrate_semi_infinite([&](double t) { return kernel(p, t); }, 0.0,
                                              {1e-16, 1e-14, 1000000})
              .value;
  } catch (const AccuracyError& e) {
    throw ConvergenceError(std::string("make_params: normalizer did not converge: ") + e.what());
  }
  if (!(p.c > 0.0) || !std::isfinite(p.c)) throw ConvergenceError("make_params: normalizer is not finite");
  return p;
}

double kernel(const TDistParams& p, double x) {
  return std::exp(-x * x * (p.lambda + p.mu * kernels::erf(x)));
}

double unnormalized_cdf(const TDistParams& p, double x) {
  check_x(x, "unnormalized_cdf");
  if (x == 0.0) return 0.0;
  auto f = [&](double t) { return kernel(p, t); };
  if (x <= kTailSwitch) return quadrature::integrate(f, 0.0, x, kCdfTol).value;
  if (std::isinf(x)) return p.c;
  return p.c - quadrature::integrate_semi_infinite(f, x, kCdfTol).value;
}

double cdf(const TDistParams& p, double x) {
  check_x(x, "cdf");
  return std::clamp(unnormalized_cdf(p, x) / p.c, 0.0, 1.0);
}

double pdf(const TDistParams& p, double x) {
  check_x(x, "pdf");
  return kernel(p, x) / p.c;
}

double quantile(const TDistParams& p, double q) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("quantile: q must lie in (0, 1)");
  double lo = 0.0, hi = 1.0;
  while (cdf(p, hi) < q) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e4) throw ConvergenceError("quantile: could not bracket q");
  }
  auto f = [&](double x) { return cdf(p, x) - q; };
  std::uintmax_t max_iter = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      f, lo, hi, boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits - 3), max_iter);
  double x = 0.5 * (a + b);
  // One Newton polish keeps the CDF residual at rounding level.
  const double density = pdf(p, x);
  if (density > 0.0) {
    const double polished = x - f(x) / density;
    if (polished >= a && polished <= b && std::fabs(f(polished)) <= std::fabs(f(x))) x = polished;
  }
  return x;
}

std::vector<double> sample(const TDistParams& p, std::uint64_t seed, int n) {
  if (n < 1) throw DomainError("sample: n must be positive");
  std::mt19937_64 rng(seed);
  std::vector<double> out;
  out.reserve(static_cast<size_t>(n));
  while (static_cast<int>(out.size()) < n) {
    const double u = std::generate_canonical<double, 53>(rng);
    if (u <= 0.0 || u >= 1.0) continue;
    out.push_back(quantile(p, u));
  }
  return out;
}

double ode_residual(const TDistParams& p, double x, double h) {
  if (!(x > 0.0)) throw DomainError("ode_residual: x must be positive");
  if (!(h > 0.0)) throw DomainError("ode_residual: h must be positive");
  const double y1 = kernel(p, x);
  const double y2 = (kernel(p, x + h) - kernel(p, x - h)) / (2.0 * h);
  const double log_y1 = -x * x * (p.lambda + p.mu * kernels::erf(x));
  // 2 e^{-x^2} y' sqrt(pi) e^{x^2} ln y' simplified to avoid e^{x^2}.
  const double rhs = 2.0 * y1 * (kSqrtPi * log_y1 - p.mu * x * x * x * std::exp(-x * x));
  return kSqrtPi * x * y2 - rhs;
}

double reduced_ode_residual(double lambda, double x, double h) {
  if (!(lambda > 0.0)) throw DomainError("reduced_ode_residual: lambda must be positive");
  if (!(x > 0.0) || !(h > 0.0)) throw DomainError("reduced_ode_residual: x and h must be positive");
  const double scale = 2.0 * std::sqrt(lambda / kPi);
  auto deriv = [&](double t) { return scale * std::exp(-lambda * t * t); };
  const double y1 = deriv(x);
  const double y2 = (deriv(x + h) - deriv(x - h)) / (2.0 * h);
  const double log_y1 = std::log(scale) - lambda * x * x;
  return x * y2 - 2.0 * y1 * log_y1;
}

FitResult fit_to_target(const std::function<double(double)>& target,
                        const std::function<double(double)>& target_deriv, double x0, double lambda0,
                        double mu0, const FitOptions& options) {
  if (!(x0 > 0.0)) throw DomainError("fit_to_target: x0 must be positive");
  if (options.freeze_mu) mu0 = 0.0;
  if (!feasible(lambda0, mu0)) throw DomainError("fit_to_target: initial point must satisfy lambda > 0, lambda + mu > 0");

  const double value = target(x0);
  const double slope = target_deriv(x0);
  auto residual = [&](double lambda, double mu) {
    const TDistParams p = make_params(lambda, mu);
    Residual r;
    r.r1 = value - cdf(p, x0);
    if (!options.freeze_mu) {
      r.r2 = slope - (options.slope == SlopeMatch::kernel ? kernel(p, x0) : pdf(p, x0));
    }
    return r;
  };

  FitResult result;
  double lambda = lambda0, mu = mu0;
  Residual r = residual(lambda, mu);
  result.trace.push_back({lambda, mu, r.norm()});

  for (int iter = 0; iter < options.max_iter && r.norm() > options.tol; ++iter) {
    const double hl = 1e-6 * (1.0 + std::fabs(lambda));
    const Residual rl = residual(lambda + hl, mu);
    double d_lambda = 0.0, d_mu = 0.0;
    if (options.freeze_mu) {
      const double j = (rl.r1 - r.r1) / hl;
      if (j == 0.0 || !std::isfinite(j)) throw FitError("fit_to_target: singular Jacobian", result.trace);
      d_lambda = r.r1 / j;
    } else {
      const double hm = 1e-6 * (1.0 + std::fabs(mu));
      const Residual rm = residual(lambda, mu + hm);
      const double j11 = (rl.r1 - r.r1) / hl, j12 = (rm.r1 - r.r1) / hm;
      const double j21 = (rl.r2 - r.r2) / hl, j22 = (rm.r2 - r.r2) / hm;
      const double det = j11 * j22 - j12 * j21;
      const double scale = std::fabs(j11 * j22) + std::fabs(j12 * j21);
      if (!std::isfinite(det) || std::fabs(det) <= 1e-14 * scale) {
        throw FitError("fit_to_target: singular Jacobian", result.trace);
      }
      d_lambda = (j22 * r.r1 - j12 * r.r2) / det;
      d_mu = (j11 * r.r2 - j21 * r.r1) / det;
    }

    double step = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 40; ++halving, step *= 0.5) {
      const double nl = lambda - step * d_lambda;
      const double nm = mu - step * d_mu;
      if (!feasible(nl, nm)) continue;
      const Residual nr = residual(nl, nm);
      if (nr.norm() < r.norm()) {
        lambda = nl;
        mu = nm;
        r = nr;
        accepted = true;
        break;
      }
    }
    result.trace.push_back({lambda, mu, r.norm()});
    if (!accepted) throw FitError("fit_to_target: no descent step found", result.trace);
    result.iterations = iter + 1;
  }
  if (r.norm() > options.tol) throw FitError("fit_to_target: iteration budget exhausted", result.trace);

  result.lambda = lambda;
  result.mu = mu;
  result.c = make_params(lambda, mu).c;
  result.residual = r.norm();
  return result;
}

double maxwell_cdf(double a, double x) {
  if (!(a > 0.0)) throw DomainError("maxwell_cdf: a must be positive");
  check_x(x, "maxwell_cdf");
  const double s = x / a;
  return kernels::erf(s / std::sqrt(2.0)) - std::sqrt(2.0 / kPi) * s * std::exp(-0.5 * s * s);
}

double maxwell_pdf(double a, double x) {
  if (!(a > 0.0)) throw DomainError("maxwell_pdf: a must be positive");
  check_x(x, "maxwell_pdf");
  return std::sqrt(2.0 / kPi) * x * x * std::exp(-0.5 * x * x / (a * a)) / (a * a * a);
}

MaxwellApprox fit_maxwell(double a, double fit_point, const FitOptions& options) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("fit_maxwell: a must lie in (0, 1]");
  const double lambda_t = 0.5 / (a * a);
  const double scale = 1.0 / (std::sqrt(2.0) * a);
  auto target = [scale](double x) { return kernels::erf(scale * x); };
  auto target_deriv = [scale](double x) { return kTwoOverSqrtPi * scale * std::exp(-scale * scale * x * x); };
  const double lambda0 = options.freeze_mu ? 0.9 * lambda_t : 0.2 * lambda_t;
  const double mu0 = options.freeze_mu ? 0.0 : 0.8 * lambda_t;

  MaxwellApprox m;
  m.a = a;
  m.fit_point = fit_point;
  m.fit = fit_to_target(target, target_deriv, fit_point, lambda0, mu0, options);
  m.params = make_params(m.fit.lambda, m.fit.mu);
  return m;
}

double maxwell_approx(const MaxwellApprox& m, double x) {
  check_x(x, "maxwell_approx");
  const double s = x / m.a;
  return cdf(m.params, x) - std::sqrt(2.0 / kPi) * s * std::exp(-0.5 * s * s);
}

double maxwell_approx(double a, double x, double fit_point) {
  return maxwell_approx(fit_maxwell(a, fit_point), x);
}

}  // namespace tspecial::dist
