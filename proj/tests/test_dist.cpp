#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "tspecial/dist.hpp"
#include "tspecial/errors.hpp"
#include "tspecial/kernels.hpp"
#include "tspecial/quadrature.hpp"

using namespace tspecial;
using namespace tspecial::dist;

namespace {

double erf_deriv(double x) { return kTwoOverSqrtPi * std::exp(-x * x); }

FitResult erf_fit() {
  return fit_to_target([](double x) { return kernels::erf(x); }, erf_deriv, 1.0, 0.2, 0.8);
}

}  // namespace

TEST_CASE("normalizer") {
  CHECK(make_params(1.0, 0.0).c == doctest::Approx(kSqrtPi / 2.0).epsilon(1e-13));
  CHECK(make_params(kPi / 4.0, 0.0).c == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(1.0 / make_params(0.1671645, 0.8449657).c == doctest::Approx(1.05021).epsilon(1e-4));
  CHECK_THROWS_AS(make_params(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(make_params(1.0, -1.0), DomainError);
  CHECK_THROWS_AS(make_params(NAN, 0.0), DomainError);
}

TEST_CASE("mu = 0 reduces to erf") {
  for (double lambda : {0.3, 0.7, kPi / 4.0, 1.0, 3.0}) {
    const auto p = make_params(lambda, 0.0);
    double worst = 0.0;
    for (int i = 0; i <= 120; ++i) {
      const double x = 0.05 * i;
      worst = std::max(worst, std::fabs(cdf(p, x) - kernels::erf(std::sqrt(lambda) * x)));
    }
    INFO("lambda = " << lambda);
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("cdf and pdf") {
  const auto p = make_params(0.1671645, 0.8449657);
  CHECK(cdf(p, 0.0) == 0.0);
  CHECK(cdf(p, 1.0) == doctest::Approx(0.8427007929).epsilon(1e-5));
  double prev = -1.0;
  for (int i = 0; i <= 200; ++i) {
    const double v = cdf(p, 0.03 * i);
    // Strict growth until the tail drops below double resolution near 1.
    if (v < 1.0 - 1e-13) CHECK(v > prev);
    CHECK(v >= prev);
    CHECK(v <= 1.0);
    prev = v;
  }
  CHECK(cdf(p, 8.0) >= 1.0 - 1e-10);
  CHECK(cdf(p, INFINITY) == 1.0);
  CHECK_THROWS_AS(cdf(p, -0.1), DomainError);

  // pdf is the derivative of cdf.
  for (double x : {0.3, 1.0, 2.5, 3.0}) {
    const double h = 1e-5;
    CHECK(pdf(p, x) == doctest::Approx((cdf(p, x + h) - cdf(p, x - h)) / (2.0 * h)).epsilon(1e-7));
  }
  const double mass = quadrature::integrate_semi_infinite([&](double x) { return pdf(p, x); }, 0.0,
                                                          {1e-16, 1e-14, 1000000})
                          .value;
  CHECK(std::fabs(mass - 1.0) <= 1e-10);

  // Log-density decreases beyond x = 1.
  double prev_log = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double x = 1.0 + 0.05 * i;
    const double v = std::log(pdf(p, x));
    if (i > 0) CHECK(v < prev_log);
    prev_log = v;
  }
}

TEST_CASE("quantile") {
  const auto gauss = make_params(1.0, 0.0);
  CHECK(std::fabs(quantile(gauss, kernels::erf(1.0)) - 1.0) <= 1e-10);
  const auto p = make_params(0.1671645, 0.8449657);
  const double m = quantile(p, 0.5);
  CHECK(std::fabs(cdf(p, m) - 0.5) <= 1e-12);
  for (double q : {1e-9, 0.01, 0.3, 0.9, 0.999999, 1.0 - 1e-10}) {
    INFO("q = " << q);
    CHECK(std::fabs(cdf(p, quantile(p, q)) - q) <= 1e-12);
  }
  CHECK_THROWS_AS(quantile(p, 0.0), DomainError);
  CHECK_THROWS_AS(quantile(p, 1.0), DomainError);
}

TEST_CASE("sampling") {
  const auto p = make_params(0.1671645, 0.8449657);
  const auto a = sample(p, 42, 500);
  const auto b = sample(p, 42, 500);
  CHECK(a == b);
  CHECK(sample(p, 43, 5) != sample(p, 42, 5));
  CHECK_THROWS_AS(sample(p, 1, 0), DomainError);

  const int n = 10000;
  const auto draws = sample(p, 7, n);
  double sum = 0.0, sum2 = 0.0;
  for (double x : draws) {
    sum += x;
    sum2 += x * x;
  }
  const double mean = sum / n;
  const double sd = std::sqrt(sum2 / n - mean * mean);
  const double true_mean = quadrature::integrate_semi_infinite([&](double x) { return x * pdf(p, x); }, 0.0,
                                                               {1e-16, 1e-13, 1000000})
                               .value;
  CHECK(std::fabs(mean - true_mean) <= 3.0 * sd / std::sqrt(static_cast<double>(n)));

  // Kolmogorov-Smirnov against erf for mu = 0, lambda = 1 (critical value at 1%).
  const auto gauss = make_params(1.0, 0.0);
  auto xs = sample(gauss, 11, n);
  std::sort(xs.begin(), xs.end());
  double d = 0.0;
  for (int i = 0; i < n; ++i) {
    const double f = kernels::erf(xs[static_cast<size_t>(i)]);
    d = std::max({d, std::fabs(f - static_cast<double>(i) / n), std::fabs(f - static_cast<double>(i + 1) / n)});
  }
  CHECK(d < 1.628 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("differential equation residuals") {
  const auto p = make_params(0.1671645, 0.8449657);
  for (double x : {0.5, 1.0, 2.0}) {
    INFO("x = " << x);
    CHECK(std::fabs(ode_residual(p, x, 1e-4)) <= 1e-6);
  }
  for (double x : {0.5, 1.0, 2.0}) CHECK(std::fabs(reduced_ode_residual(kPi / 4.0, x, 1e-4)) < 1e-8);
  for (double lambda : {0.5, 1.0}) CHECK(std::fabs(reduced_ode_residual(lambda, 1.0, 1e-4)) > 1e-3);
  CHECK_THROWS_AS(ode_residual(p, 0.0, 1e-4), DomainError);
}

TEST_CASE("fit to erf") {
  const auto fit = erf_fit();
  CHECK(fit.lambda == doctest::Approx(0.1671645).epsilon(1e-4 / 0.1671645));
  CHECK(std::fabs(fit.lambda - 0.1671645) <= 1e-4);
  CHECK(std::fabs(fit.mu - 0.8449657) <= 1e-4);
  CHECK(std::fabs(1.0 / fit.c - 1.05021) <= 1e-4);
  CHECK(fit.residual <= 1e-10);
  CHECK(fit.trace.size() >= 2);
  CHECK(fit.trace.back().residual <= fit.trace.front().residual);
}

TEST_CASE("fit with frozen mu is exact") {
  const double s = std::sqrt(0.6);
  FitOptions opt;
  opt.freeze_mu = true;
  const auto fit = fit_to_target([s](double x) { return kernels::erf(s * x); },
                                 [s](double x) { return s * kTwoOverSqrtPi * std::exp(-0.6 * x * x); }, 1.0, 0.3,
                                 0.0, opt);
  CHECK(std::fabs(fit.lambda - 0.6) <= 1e-10);
  CHECK(fit.mu == 0.0);
}

TEST_CASE("fit round trip") {
  const auto p = make_params(0.4, 0.5);
  FitOptions opt;
  opt.slope = SlopeMatch::density;
  const auto fit = fit_to_target([&](double x) { return cdf(p, x); }, [&](double x) { return pdf(p, x); }, 1.0,
                                 0.3, 0.3, opt);
  CHECK(std::fabs(fit.lambda - 0.4) <= 1e-8);
  CHECK(std::fabs(fit.mu - 0.5) <= 1e-8);
}

TEST_CASE("fit failure carries the trace") {
  FitOptions opt;
  opt.max_iter = 1;
  opt.tol = 1e-15;
  try {
    fit_to_target([](double x) { return kernels::erf(x); }, erf_deriv, 1.0, 0.2, 0.8, opt);
    FAIL("expected FitError");
  } catch (const FitError& e) {
    CHECK(!e.trace().empty());
  }
  CHECK_THROWS_AS(fit_to_target([](double x) { return kernels::erf(x); }, erf_deriv, 1.0, -1.0, 0.8), DomainError);
}

TEST_CASE("Maxwell distribution") {
  CHECK(maxwell_cdf(1.0, 0.0) == 0.0);
  CHECK(maxwell_cdf(1.0, 40.0) == doctest::Approx(1.0).epsilon(1e-14));
  for (double x : {0.2, 1.0, 2.0}) {
    const double h = 1e-5;
    CHECK(maxwell_pdf(0.75, x) ==
          doctest::Approx((maxwell_cdf(0.75, x + h) - maxwell_cdf(0.75, x - h)) / (2.0 * h)).epsilon(1e-7));
  }
  CHECK_THROWS_AS(maxwell_cdf(0.0, 1.0), DomainError);
}

namespace {

double maxwell_sup_gap(const MaxwellApprox& m) {
  double worst = 0.0;
  for (int i = 0; i <= 500; ++i) {
    const double x = 0.01 * i;
    worst = std::max(worst, std::fabs(maxwell_approx(m, x) - maxwell_cdf(m.a, x)));
  }
  return worst;
}

}  // namespace

TEST_CASE("Maxwell approximation at a = 0.75") {
  const auto m = fit_maxwell(0.75);
  CHECK(maxwell_approx(m, 0.0) == 0.0);
  // Single-point matching at x = 1 leaves a gap of about 8.9e-3.
  CHECK(maxwell_sup_gap(m) == doctest::Approx(8.885e-3).epsilon(0.01));
  CHECK_THROWS_AS(fit_maxwell(1.5), DomainError);
}

TEST_CASE("Maxwell approximation within 5e-3 at a = 0.75" * doctest::should_fail()) {
  CHECK(maxwell_sup_gap(fit_maxwell(0.75)) <= 5e-3);
}

TEST_CASE("Maxwell approximation with mu frozen is exact") {
  FitOptions opt;
  opt.freeze_mu = true;
  for (double a : {0.5, 0.75, 1.0}) {
    const auto m = fit_maxwell(a, 1.0, opt);
    CHECK(std::fabs(m.fit.lambda - 0.5 / (a * a)) <= 1e-10);
    CHECK(maxwell_sup_gap(m) <= 1e-10);
  }
}
