#include "tspecial/kernels.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "tspecial/errors.hpp"

namespace tspecial {

void ToleranceSpec::validate() const {
  if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0)) {
    throw PreconditionError("tolerances must be non-negative");
  }
  if (abs_tol == 0.0 && rel_tol == 0.0) {
    throw PreconditionError("at least one of abs_tol, rel_tol must be positive");
  }
  if (max_terms < 1) {
    throw PreconditionError("max_terms must be at least 1");
  }
}

namespace kernels {
namespace {

constexpr long double kTwoOverSqrtPiL = 1.128379167095512573896158903121545172L;

void require_finite(double x, const char* who) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(who) + ": argument must be finite");
  }
}

bool is_nonpositive_integer(double v) {
  return v <= 0.0 && v == std::nearbyint(v);
}

// Alternating Maclaurin series. Summed in extended precision: at |x| = 2 the
// largest term is ~2.7 and double accumulation would lose the 1e-15 budget.
double erf_taylor(double x) {
  const long double xl = x;
  const long double x2 = xl * xl;
  long double power = xl;  // (-1)^n x^(2n+1) / n!
  long double sum = xl;
  for (int n = 1; n < 200; ++n) {
    power *= -x2 / n;
    const long double term = power / (2 * n + 1);
    sum += term;
    if (std::fabs(term) < 1e-22L * std::fabs(sum)) {
      break;
    }
  }
  return static_cast<double>(kTwoOverSqrtPiL * sum);
}

// erfc(x) for x >= 2 via the Laplace continued fraction
//   erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
// evaluated with the modified Lentz algorithm.
double erfc_cf(double x) {
  constexpr double tiny = 1e-300;
  double f = x;
  double c = f;
  double d = 0.0;
  for (int k = 1; k < 5000; ++k) {
    const double a = 0.5 * k;
    d = x + a * d;
    if (d == 0.0) d = tiny;
    c = x + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) {
      break;
    }
  }
  return std::exp(-x * x) / (kSqrtPi * f);
}

}  // namespace

double erf(double x) {
  require_finite(x, "erf");
  if (x < 0.0) {
    return -erf(-x);
  }
  if (x <= 2.0) {
    return erf_taylor(x);
  }
  return 1.0 - erfc_cf(x);
}

double erfc(double x) {
  require_finite(x, "erfc");
  if (x >= 2.0) {
    return erfc_cf(x);
  }
  if (x <= -2.0) {
    return 2.0 - erfc_cf(-x);
  }
  return 1.0 - erf_taylor(x);
}

double erfi(double x) {
  require_finite(x, "erfi");
  if (std::fabs(x) > 6.0) {
    throw RangeError("erfi: |x| > 6 is outside the supported range");
  }
  const long double xl = x;
  const long double x2 = xl * xl;
  long double power = xl;  // x^(2n+1) / n!
  long double sum = xl;
  for (int n = 1; n < 400; ++n) {
    power *= x2 / n;
    const long double term = power / (2 * n + 1);
    sum += term;
    if (std::fabs(term) < 1e-22L * std::fabs(sum)) {
      break;
    }
  }
  return static_cast<double>(kTwoOverSqrtPiL * sum);
}

ErfcErfi erfc_erfi(double x) { return {erfc(x), erfi(x)}; }

double normal_cdf(double x) {
  require_finite(x, "normal_cdf");
  // Same quantity as (1 + erf(x/sqrt2))/2, without cancellation for x << 0.
  return 0.5 * erfc(-x / std::sqrt(2.0));
}

IncompleteGamma incomplete_gamma(double s, double x) {
  require_finite(s, "incomplete_gamma");
  require_finite(x, "incomplete_gamma");
  if (s <= 0.0) {
    throw DomainError("incomplete_gamma: s must be positive");
  }
  if (x < 0.0) {
    throw DomainError("incomplete_gamma: x must be non-negative");
  }
  const double twice = 2.0 * s;
  if (std::fabs(twice - std::nearbyint(twice)) > 1e-12) {
    throw DomainError("incomplete_gamma: s must be a half-integer");
  }
  if (s > 170.0) {
    throw RangeError("incomplete_gamma: Gamma(s) overflows for s > 170");
  }
  const long twice_int = std::lround(twice);
  const double s_exact = 0.5 * static_cast<double>(twice_int);
  const double complete = std::tgamma(s_exact);

  auto power_exp = [x](double p) {  // x^p e^-x
    return x == 0.0 ? 0.0 : std::exp(p * std::log(x) - x);
  };

  // Upward recurrence Gamma(t+1, x) = t Gamma(t, x) + x^t e^-x.
  double t;
  double upper;
  if (twice_int % 2 == 1) {
    t = 0.5;
    upper = kSqrtPi * erfc(std::sqrt(x));
  } else {
    t = 1.0;
    upper = std::exp(-x);
  }
  for (; t < s_exact; t += 1.0) {
    upper = t * upper + power_exp(t);
  }

  double lower;
  if (x < s_exact + 1.0) {
    // gamma(s, x) = x^s e^-x sum_n x^n / (s (s+1) ... (s+n))
    double term = 1.0 / s_exact;
    double sum = term;
    for (int n = 1; n < 1000; ++n) {
      term *= x / (s_exact + n);
      sum += term;
      if (term < 1e-17 * sum) {
        break;
      }
    }
    lower = power_exp(s_exact) * sum;
  } else {
    lower = complete - upper;
  }
  return {lower, upper};
}

double gen_expint(double nu, double z) {
  require_finite(nu, "gen_expint");
  require_finite(z, "gen_expint");
  if (z <= 0.0) {
    throw DomainError("gen_expint: z must be positive");
  }
  const double k = (0.5 - nu) / 2.0;
  if (k < -1e-12 || std::fabs(k - std::nearbyint(k)) > 1e-12) {
    throw PreconditionError("gen_expint: only orders nu = 1/2 - 2k, k >= 0, are supported");
  }
  const double order = 0.5 - 2.0 * std::nearbyint(k);
  return std::pow(z, order - 1.0) * incomplete_gamma(1.0 - order, z).upper;
}

namespace {

bool below_tolerance(double term, double sum, const ToleranceSpec& tol) {
  const double bound = std::fmax(tol.abs_tol, tol.rel_tol * std::fabs(sum));
  return std::fabs(term) <= bound;
}

// Sum of a hypergeometric series whose term ratio is supplied by `ratio(n)`
// (t_{n+1} = t_n * ratio(n), t_0 = 1).
template <class Ratio>
double sum_series(Ratio ratio, const ToleranceSpec& tol, const char* who) {
  tol.validate();
  // Extended precision: alternating sums at |z| ~ 6 cancel terms of size e^|z|.
  long double term = 1.0L;
  long double sum = 1.0L;
  int quiet = 0;
  for (int n = 0; n < tol.max_terms; ++n) {
    term *= ratio(n);
    sum += term;
    if (!std::isfinite(static_cast<double>(sum))) {
      throw ConvergenceError(std::string(who) + ": series overflowed");
    }
    quiet = below_tolerance(static_cast<double>(term), static_cast<double>(sum), tol) ? quiet + 1 : 0;
    if (quiet == 2) {
      return static_cast<double>(sum);
    }
  }
  throw ConvergenceError(std::string(who) + ": no convergence within max_terms");
}

}  // namespace

double hyp1f1(double a, double b, double z, const ToleranceSpec& tol) {
  if (is_nonpositive_integer(b)) {
    throw DomainError("hyp1f1: b must not be a non-positive integer");
  }
  if (z < -1.0 && b > 0.0 && b - a > 0.0) {
    // Kummer: 1F1(a;b;z) = e^z 1F1(b-a;b;-z); the right side has positive terms.
    const long double c = static_cast<long double>(b) - a;
    const long double w = -static_cast<long double>(z);
    const long double bl = b;
    return std::exp(z) * sum_series(
        [=](int n) { return (c + n) / (bl + n) * w / (n + 1.0L); }, tol, "hyp1f1");
  }
  const long double al = a, bl = b, zl = z;
  return sum_series([=](int n) { return (al + n) / (bl + n) * zl / (n + 1.0L); }, tol, "hyp1f1");
}

double hyp2f1(double a, double b, double c, double z, const ToleranceSpec& tol) {
  if (!(std::fabs(z) < 1.0)) {
    throw DomainError("hyp2f1: requires |z| < 1");
  }
  if (is_nonpositive_integer(c)) {
    throw DomainError("hyp2f1: c must not be a non-positive integer");
  }
  const long double al = a, bl = b, cl = c, zl = z;
  return sum_series([=](int n) { return (al + n) * (bl + n) / ((cl + n) * (n + 1.0L)) * zl; }, tol,
                    "hyp2f1");
}

double appell_f1(double a, double b1, double b2, double c, double x, double y,
                 const ToleranceSpec& tol) {
  if (!(std::fabs(x) < 1.0) || !(std::fabs(y) < 1.0)) {
    throw DomainError("appell_f1: requires |x| < 1 and |y| < 1");
  }
  if (is_nonpositive_integer(c)) {
    throw DomainError("appell_f1: c must not be a non-positive integer");
  }
  tol.validate();

  // u[m] = (b1)_m x^m / m!, v[n] = (b2)_n y^n / n!, grown with the diagonal.
  std::vector<long double> u{1.0L};
  std::vector<long double> v{1.0L};
  long double weight = 1.0L;  // (a)_d / (c)_d
  long double sum = 0.0L;
  int quiet = 0;
  for (int d = 0; d < tol.max_terms; ++d) {
    if (d > 0) {
      weight *= (a + d - 1.0L) / (c + d - 1.0L);
      u.push_back(u.back() * (b1 + d - 1.0L) * x / d);
      v.push_back(v.back() * (b2 + d - 1.0L) * y / d);
    }
    long double diag = 0.0L;
    long double magnitude = 0.0L;
    for (int m = 0; m <= d; ++m) {
      const long double p = u[m] * v[d - m];
      diag += p;
      magnitude += std::fabs(p);
    }
    sum += weight * diag;
    if (!std::isfinite(static_cast<double>(sum))) {
      throw ConvergenceError("appell_f1: series overflowed");
    }
    quiet = below_tolerance(static_cast<double>(weight * magnitude), static_cast<double>(sum), tol)
                ? quiet + 1
                : 0;
    if (quiet == 2) {
      return static_cast<double>(sum);
    }
  }
  throw ConvergenceError("appell_f1: no convergence within max_terms");
}

double hermite(int n, double x) {
  if (n < 0) {
    throw DomainError("hermite: degree must be non-negative");
  }
  if (n > 200) {
    throw RangeError("hermite: degree above 200 is not supported");
  }
  double prev = 1.0;
  if (n == 0) {
    return prev;
  }
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  if (!std::isfinite(cur)) {
    throw RangeError("hermite: value overflows double");
  }
  return cur;
}

}  // namespace kernels
}  // namespace tspecial
