#include "tspecial/quadrature.hpp"

#include <cmath>
#include <queue>
#include <sstream>

#include "tspecial/errors.hpp"

namespace tspecial::quadrature {
namespace {

// Kronrod abscissae; odd indices are shared with the 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kRuleSize = 15;

struct Panel {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) {
      gauss += kWg[j / 2] * sum;
    }
  }
  kronrod *= half;
  gauss *= half;
  if (!std::isfinite(kronrod)) {
    std::ostringstream msg;
    msg << "integrate: non-finite integrand on [" << a << ", " << b << "]";
    throw DomainError(msg.str());
  }
  return {a, b, kronrod, std::fabs(kronrod - gauss)};
}

}  // namespace

ToleranceSpec default_tolerance() { return {1e-13, 1e-12, 1000000}; }

QuadResult integrate(const Integrand& f, double a, double b, const ToleranceSpec& tol) {
  tol.validate();
  if (!std::isfinite(a) || !std::isfinite(b) || a > b) {
    throw DomainError("integrate: requires finite a <= b");
  }
  if (a == b) {
    return {0.0, 0.0, kRuleSize};
  }

  std::priority_queue<Panel> panels;
  Panel first = gauss_kronrod(f, a, b);
  double value = first.value;
  double error = first.error;
  long evals = kRuleSize;
  panels.push(first);

  while (error > std::fmax(tol.abs_tol, tol.rel_tol * std::fabs(value))) {
    if (evals + 2 * kRuleSize > tol.max_terms) {
      throw AccuracyError("integrate: evaluation budget exhausted", value, error);
    }
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Panel cannot be split further in double precision.
      throw AccuracyError("integrate: interval too narrow to bisect", value, error);
    }
    panels.pop();
    const Panel left = gauss_kronrod(f, worst.a, mid);
    const Panel right = gauss_kronrod(f, mid, worst.b);
    evals += 2 * kRuleSize;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);

    // Re-sum periodically so the running totals do not drift.
    if (panels.size() % 64 == 0) {
      auto copy = panels;
      value = 0.0;
      error = 0.0;
      while (!copy.empty()) {
        value += copy.top().value;
        error += copy.top().error;
        copy.pop();
      }
    }
  }
  return {value, error, evals};
}

QuadResult integrate_semi_infinite(const Integrand& f, double a, const ToleranceSpec& tol) {
  if (!std::isfinite(a)) {
    throw DomainError("integrate_semi_infinite: lower limit must be finite");
  }
  auto mapped = [&f, a](double u) {
    const double w = 1.0 - u;
    const double t = a + u / w;
    const double ft = f(t);
    return ft == 0.0 ? 0.0 : ft / (w * w);
  };
  return integrate(mapped, 0.0, 1.0, tol);
}

double l2_distance(const Integrand& f, const Integrand& g, double a, double b,
                   const ToleranceSpec& tol) {
  if (!(a < b)) {
    throw DomainError("l2_distance: requires a < b");
  }
  auto squared = [&f, &g](double x) {
    const double d = f(x) - g(x);
    return d * d;
  };
  return std::sqrt(integrate(squared, a, b, tol).value);
}

EulerTrace euler_scheme(const Integrand& deriv, double x0, double y0, double h, int n_steps) {
  if (!(h > 0.0)) {
    throw DomainError("euler_scheme: step must be positive");
  }
  if (n_steps < 1) {
    throw DomainError("euler_scheme: n_steps must be positive");
  }
  EulerTrace trace;
  trace.h = h;
  trace.samples.reserve(static_cast<size_t>(n_steps) + 1);
  trace.samples.emplace_back(x0, y0);
  double y = y0;
  for (int k = 0; k < n_steps; ++k) {
    const double x = x0 + k * h;
    const double slope = deriv(x);
    if (!std::isfinite(slope)) {
      std::ostringstream msg;
      msg << "euler_scheme: non-finite derivative at step " << k << " (x = " << x << ")";
      throw PropagationError(msg.str(), k);
    }
    y += h * slope;
    trace.samples.emplace_back(x0 + (k + 1) * h, y);
  }
  return trace;
}

}  // namespace tspecial::quadrature
