#include "tspecial/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <stdexcept>

#include "tspecial/kernels.hpp"

namespace tspecial::series {
namespace {

mpz_class factorial(int n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

void require_order(int order, int minimum, const char* who) {
  if (order < minimum) {
    throw DomainError(std::string(who) + ": order too small");
  }
}

}  // namespace

PowerSeries PowerSeries::truncated(int m) const {
  if (m < 0 || m > order) {
    throw DomainError("PowerSeries::truncated: order out of range");
  }
  PowerSeries out(m);
  std::copy_n(coeffs.begin(), m + 1, out.coeffs.begin());
  return out;
}

PowerSeries erf_series(int order) {
  require_order(order, 0, "erf_series");
  PowerSeries out(order);
  for (int n = 0; 2 * n + 1 <= order; ++n) {
    mpq_class q(mpz_class(n % 2 == 0 ? 2 : -2), factorial(n) * (2 * n + 1));
    out[2 * n + 1] = PiHalfRational(q, -1);
  }
  return out;
}

PowerSeries inner_series(int order) {
  require_order(order, 0, "inner_series");
  PowerSeries out(order);
  // A_j = 2 (-1)^((j-1)/2) / ((j-2) ((j-3)/2)! sqrt(pi)) for odd j >= 3.
  for (int j = 3; j <= order; j += 2) {
    const int sign = ((j - 1) / 2) % 2 == 0 ? 1 : -1;
    mpq_class q(mpz_class(2 * sign), factorial((j - 3) / 2) * (j - 2));
    out[j] = PiHalfRational(q, -1);
  }
  return out;
}

PowerSeries exp_compose(const PowerSeries& f, int order) {
  require_order(order, 0, "exp_compose");
  if (!f.coeffs.front().is_zero()) {
    throw PreconditionError("exp_compose: constant term must be exactly zero");
  }
  if (f.order < order) {
    throw PreconditionError("exp_compose: input series is not known to the requested order");
  }
  PowerSeries h(order);
  h[0] = PiHalfRational(1L);
  for (int n = 1; n <= order; ++n) {
    PiHalfRational acc;
    for (int k = 1; k <= n; ++k) {
      if (f[k].is_zero() || h[n - k].is_zero()) continue;
      acc += f[k] * h[n - k] * mpq_class(k);
    }
    h[n] = acc * mpq_class(1, n);
  }
  return h;
}

PowerSeries t_series_exp(int order) {
  require_order(order, 1, "t_series");
  const PowerSeries d = exp_compose(inner_series(order - 1), order - 1);
  PowerSeries c(order);
  for (int p = 1; p <= order; ++p) {
    c[p] = d[p - 1] * mpq_class(1, p);
  }
  return c;
}

PowerSeries t_series_faa_di_bruno(int order) {
  require_order(order, 1, "t_series");
  const int nmax = order - 1;
  // Derivatives at 0 of f(x) = x^2 erf(x): f^(j)(0) = j! [x^j] f.
  const PowerSeries inner = inner_series(nmax);
  std::vector<PiHalfRational> derivs;
  for (int j = 1; j <= nmax; ++j) {
    derivs.push_back(-inner[j] * mpq_class(factorial(j)));
  }
  const auto bell = bell_table<PiHalfRational>(nmax, derivs);

  PowerSeries c(order);
  c[1] = PiHalfRational(1L);  // d_0 = 1
  for (int n = 1; n <= nmax; ++n) {
    PiHalfRational d;
    for (int k = 1; k <= n; ++k) {
      if (k % 2 == 0) {
        d += bell[n][k];
      } else {
        d -= bell[n][k];
      }
    }
    c[n + 1] = d * mpq_class(mpz_class(1), factorial(n) * (n + 1));
  }
  return c;
}

PowerSeries t_series(int order, bool cross_check) {
  PowerSeries c = t_series_exp(order);
  if (cross_check && !(c == t_series_faa_di_bruno(order))) {
    throw std::logic_error("t_series: Faa di Bruno and exponential recurrence disagree");
  }
  return c;
}

double partial_sum(const PowerSeries& ps, double t, int n) {
  if (n < 0 || n > ps.order) {
    throw DomainError("partial_sum: n must lie in 0..order");
  }
  double acc = 0.0;
  for (int p = n; p >= 0; --p) {
    acc = acc * t + eval_pihalf(ps[p]);
  }
  return acc;
}

std::vector<double> erf_taylor_at(double a, int order) {
  require_order(order, 0, "erf_taylor_at");
  std::vector<double> out(static_cast<size_t>(order) + 1);
  out[0] = kernels::erf(a);
  if (order == 0) {
    return out;
  }
  // scaled[k] = H_k(a) / (k+1)!, propagated without forming the factorials.
  const double front = kTwoOverSqrtPi * std::exp(-a * a);
  double prev = 0.0;     // H_{k-1}/k!
  double cur = 1.0;      // H_0 / 1!
  for (int n = 1; n <= order; ++n) {
    const int k = n - 1;
    out[n] = front * (k % 2 == 0 ? cur : -cur);
    // H_{k+1}/(k+2)! = (2a H_k/(k+1)! - 2k H_{k-1}/k! / (k+1)) / (k+2)
    const double next = (2.0 * a * cur - 2.0 * k * prev / (k + 1)) / (k + 2);
    prev = cur;
    cur = next;
  }
  return out;
}

}  // namespace tspecial::series
