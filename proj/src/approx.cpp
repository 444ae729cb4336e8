#include "tspecial/approx.hpp"

#include <algorithm>
#include <cmath>
#include <gmpxx.h>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "tspecial/errors.hpp"
#include "tspecial/kernels.hpp"

namespace tspecial::approx {
namespace {

using RationalPoly = std::vector<mpq_class>;

constexpr int kMaxMonomialDegree = 30;

RationalPoly poly_mul(const RationalPoly& p, const RationalPoly& q) {
  RationalPoly out(p.size() + q.size() - 1, mpq_class(0));
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    for (size_t j = 0; j < q.size(); ++j) {
      out[i + j] += p[i] * q[j];
    }
  }
  return out;
}

void poly_axpy(RationalPoly& y, const mpq_class& alpha, const RationalPoly& x) {
  if (y.size() < x.size()) y.resize(x.size(), mpq_class(0));
  for (size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

// t = (a + b - 2x)/(a - b) written as t0 + t1 x, exactly.
RationalPoly affine_map(double a, double b) {
  const mpq_class qa(a), qb(b);
  return {mpq_class((qa + qb) / (qa - qb)), mpq_class(mpq_class(-2) / (qa - qb))};
}

double erf_squared(double x) {
  const double e = kernels::erf(x);
  return e * e;
}

}  // namespace

void ChebyshevApproximant::validate() const {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("ChebyshevApproximant: need finite a < b");
  }
  if (coeffs.empty()) {
    throw DomainError("ChebyshevApproximant: no coefficients");
  }
}

ChebyshevApproximant cheb_fit(const quadrature::Integrand& f, double a, double b, int n,
                              int m_nodes) {
  if (n < 0) throw DomainError("cheb_fit: degree must be non-negative");
  if (m_nodes <= n) {
    throw DomainError("cheb_fit: m_nodes must exceed the degree");
  }
  ChebyshevApproximant out{a, b, std::vector<double>(static_cast<size_t>(n) + 1, 0.0)};
  out.validate();

  std::vector<double> theta(static_cast<size_t>(m_nodes));
  std::vector<double> samples(static_cast<size_t>(m_nodes));
  for (int i = 0; i < m_nodes; ++i) {
    theta[i] = kPi * (i + 0.5) / m_nodes;
    const double t = std::cos(theta[i]);
    const double x = 0.5 * ((a + b) - t * (a - b));
    samples[i] = f(x);
  }
  for (int j = 0; j <= n; ++j) {
    long double acc = 0.0L;
    for (int i = 0; i < m_nodes; ++i) {
      acc += static_cast<long double>(samples[i]) * std::cos(j * theta[i]);
    }
    out.coeffs[j] = static_cast<double>(2.0L * acc / m_nodes);
  }
  return out;
}

ChebValue cheb_eval(const ChebyshevApproximant& p, double x) {
  p.validate();
  const double t = (p.a + p.b - 2.0 * x) / (p.a - p.b);
  double b1 = 0.0, b2 = 0.0;
  for (int k = p.degree(); k >= 1; --k) {
    const double b0 = 2.0 * t * b1 - b2 + p.coeffs[k];
    b2 = b1;
    b1 = b0;
  }
  const double value = t * b1 - b2 + 0.5 * p.coeffs[0];
  return {value, x < p.a || x > p.b};
}

std::vector<double> cheb_to_monomial(const ChebyshevApproximant& p) {
  p.validate();
  if (p.degree() > kMaxMonomialDegree) {
    throw RangeError("cheb_to_monomial: degree above 30 is too ill-conditioned");
  }
  const RationalPoly t = affine_map(p.a, p.b);
  RationalPoly prev{mpq_class(1)};  // T_0
  RationalPoly cur = t;              // T_1
  RationalPoly sum{mpq_class(p.coeffs[0]) / 2};
  for (int j = 1; j <= p.degree(); ++j) {
    poly_axpy(sum, mpq_class(p.coeffs[j]), cur);
    RationalPoly next = poly_mul(t, cur);
    for (auto& c : next) c *= 2;
    poly_axpy(next, mpq_class(-1), prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  std::vector<double> out(static_cast<size_t>(p.degree()) + 1, 0.0);
  for (size_t i = 0; i < out.size() && i < sum.size(); ++i) out[i] = sum[i].get_d();
  return out;
}

ChebyshevApproximant monomial_to_cheb(std::span<const double> monomial, double a, double b) {
  if (monomial.empty()) throw DomainError("monomial_to_cheb: no coefficients");
  const int n = static_cast<int>(monomial.size()) - 1;
  if (n > kMaxMonomialDegree) {
    throw RangeError("monomial_to_cheb: degree above 30 is too ill-conditioned");
  }
  ChebyshevApproximant out{a, b, {}};
  out.coeffs.assign(1, 0.0);
  out.validate();

  // x = (a + b - t (a - b))/2 = x0 + x1 t
  const mpq_class qa(a), qb(b);
  const mpq_class x0 = (qa + qb) / 2;
  const mpq_class x1 = -(qa - qb) / 2;

  // Horner in the Chebyshev basis: s <- s * x(t) + m_k, where
  // t T_0 = T_1 and t T_j = (T_{j+1} + T_{j-1})/2; s holds plain T_j weights.
  RationalPoly s{mpq_class(0)};
  for (int k = n; k >= 0; --k) {
    RationalPoly times_t(s.size() + 1, mpq_class(0));
    for (size_t j = 0; j < s.size(); ++j) {
      if (s[j] == 0) continue;
      if (j == 0) {
        times_t[1] += s[0];
      } else {
        times_t[j + 1] += s[j] / 2;
        times_t[j - 1] += s[j] / 2;
      }
    }
    RationalPoly next(times_t.size(), mpq_class(0));
    for (size_t j = 0; j < times_t.size(); ++j) next[j] = x1 * times_t[j];
    for (size_t j = 0; j < s.size(); ++j) next[j] += x0 * s[j];
    next[0] += mpq_class(monomial[k]);
    s = std::move(next);
  }
  out.coeffs.assign(static_cast<size_t>(n) + 1, 0.0);
  for (int j = 0; j <= n; ++j) out.coeffs[j] = s[j].get_d();
  out.coeffs[0] *= 2.0;  // stored convention halves c_0 at evaluation
  return out;
}

double eval_monomial(std::span<const double> monomial, double x) {
  double acc = 0.0;
  for (auto it = monomial.rbegin(); it != monomial.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ErfSqParams ErfSqParams::simple(double a) {
  ErfSqParams p;
  p.variant = ErfSqVariant::simple;
  p.a = a;
  p.validate();
  return p;
}

ErfSqParams ErfSqParams::pade() {
  ErfSqParams p;
  p.variant = ErfSqVariant::pade;
  const double pi = kPi;
  p.alpha = (10.0 - pi * pi) / (5.0 * (pi - 3.0) * pi);
  p.beta = (120.0 - 60.0 * pi + 7.0 * pi * pi) / (15.0 * (pi - 3.0) * pi);
  return p;
}

void ErfSqParams::validate() const {
  if (variant == ErfSqVariant::simple) {
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("ErfSqParams: simple variant needs a > 0");
  } else if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw DomainError("ErfSqParams: alpha and beta must be finite");
  }
}

double erfsq_approx(double x, const ErfSqParams& p) {
  const double x2 = x * x;
  if (p.variant == ErfSqVariant::simple) {
    return -std::expm1(-p.a * x2);
  }
  const double denom = 1.0 + p.beta * x2;
  if (denom == 0.0) throw DomainError("erfsq_approx: 1 + beta x^2 vanishes");
  return -std::expm1(-(4.0 / kPi) * x2 * (1.0 + p.alpha * x2) / denom);
}

double erfsq_objective(const ErfSqParams& p) {
  p.validate();
  auto sq = [&](double x) {
    const double d = erf_squared(x) - erfsq_approx(x, p);
    return d * d;
  };
  return quadrature::integrate(sq, 0.0, 8.0, {1e-30, 1e-12, 1000000}).value;
}

double erfsq_max_error(const ErfSqParams& p, double lo, double hi) {
  p.validate();
  if (!(lo < hi)) throw DomainError("erfsq_max_error: need lo < hi");
  auto gap = [&](double x) { return std::fabs(erf_squared(x) - erfsq_approx(x, p)); };
  constexpr int kGrid = 12000;
  const double h = (hi - lo) / kGrid;
  int best = 0;
  double best_gap = gap(lo);
  for (int i = 1; i <= kGrid; ++i) {
    const double g = gap(lo + i * h);
    if (g > best_gap) {
      best_gap = g;
      best = i;
    }
  }
  const double left = lo + std::max(best - 1, 0) * h;
  const double right = lo + std::min(best + 1, kGrid) * h;
  const auto refined = boost::math::tools::brent_find_minima(
      [&](double x) { return -gap(x); }, left, right, std::numeric_limits<double>::digits / 2);
  return std::max(best_gap, -refined.second);
}

OptimalA optimize_a() {
  constexpr double lo = 0.5, hi = 2.5;
  auto objective = [](double a) { return erfsq_objective(ErfSqParams::simple(a)); };
  const auto [a_star, f_min] =
      boost::math::tools::brent_find_minima(objective, lo, hi, std::numeric_limits<double>::digits / 2);
  if (a_star - lo < 1e-6 || hi - a_star < 1e-6) {
    throw OptimizationError("optimize_a: minimizer sits on the bracket edge");
  }
  const double ln2 = std::log(2.0);
  return {a_star, f_min, std::cbrt((1.0 + kPi) * (1.0 + kPi)) * ln2 * ln2};
}

double pade_erf(double x, PadeVariant variant) {
  const double x2 = x * x;
  if (variant == PadeVariant::simple) {
    return kTwoOverSqrtPi * x / (1.0 + x2 / 3.0);
  }
  return kTwoOverSqrtPi * x * (1.0 - x2 / 30.0) / (1.0 + 0.3 * x2);
}

}  // namespace tspecial::approx
