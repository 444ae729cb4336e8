#include "tspecial/integrals.hpp"

#include <cmath>

#include "tspecial/approx.hpp"
#include "tspecial/errors.hpp"
#include "tspecial/kernels.hpp"
#include "tspecial/quadrature.hpp"

namespace tspecial::integrals {
namespace {

constexpr ToleranceSpec kOracleTol{1e-300, 1e-14, 2000000};

double binomial(int n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Even integrand on [-1, 1]: twice the half-interval integral.
double symmetric(const quadrature::Integrand& f) {
  return 2.0 * quadrature::integrate(f, 0.0, 1.0, kOracleTol).value;
}

double hyper_form(int k, PadeVariant variant, double p) {
  const double prefactor = 2.0 / (6 * k + 1) * std::pow(4.0 / kPi, k);
  if (variant == PadeVariant::simple) {
    return prefactor * kernels::hyp2f1(2.0 * k, p + 0.5, p + 1.5, -1.0 / 3.0);
  }
  return prefactor * kernels::appell_f1(p + 0.5, -2.0 * k, 2.0 * k, p + 1.5, 1.0 / 30.0, -0.3);
}

void check_pade_k(int k) {
  if (k < 1) throw DomainError("i2k_pade: k must be positive");
  if (k > 8) throw RangeError("i2k_pade: k above 8 is outside the supported range");
}

void check_a(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("a must be positive and finite");
}

void fill_errors(ComparisonRow& row) {
  row.abs_errors.clear();
  for (const auto& [name, value] : row.approx_variants) {
    row.abs_errors[name] = std::fabs(value - row.oracle);
  }
}

}  // namespace

double default_a() {
  const double ln2 = std::log(2.0);
  return std::cbrt((1.0 + kPi) * (1.0 + kPi)) * ln2 * ln2;
}

double j_n(int n, double a) {
  if (n < 1) throw DomainError("j_n: n must be positive");
  if (n > 60) throw RangeError("j_n: n above 60 overflows the binomial weights");
  check_a(a);
  long double sum = 0.0L;
  for (int k = 1; k <= n; ++k) {
    const long double term = binomial(n, k) * kernels::erf(std::sqrt(a * k)) / std::sqrt(static_cast<double>(k));
    sum += (k % 2 == 0) ? term : -term;
  }
  return static_cast<double>(2.0L + std::sqrt(kPi / a) * sum);
}

double j_n_quadrature(int n, double a) {
  if (n < 0) throw DomainError("j_n_quadrature: n must be non-negative");
  check_a(a);
  return symmetric([n, a](double x) { return std::pow(-std::expm1(-a * x * x), n); });
}

double j_nk(int n, int k, double a) {
  if (n < 0 || k < 0) throw DomainError("j_nk: n and k must be non-negative");
  check_a(a);
  if (n == 0) return 2.0 / (4 * k + 1);
  const double b = n * a;
  const double s = 2 * k + 0.5;
  return std::pow(b, -s) * kernels::incomplete_gamma(s, b).lower;
}

double j_nk_antiderivative(int n, int k, double a) {
  if (n < 1 || k < 0) throw DomainError("j_nk_antiderivative: need n >= 1, k >= 0");
  check_a(a);
  const double b = n * a;
  const double s = 2 * k + 0.5;
  return std::pow(b, -s) * std::tgamma(s) - kernels::gen_expint(0.5 - 2 * k, b);
}

double i2k_oracle(int k) {
  if (k < 0) throw DomainError("i2k_oracle: k must be non-negative");
  if (k > 20) throw RangeError("i2k_oracle: k above 20 is outside the supported range");
  if (k == 0) return 2.0;
  return symmetric([k](double x) {
    const double e = kernels::erf(x);
    return std::pow(x, 4 * k) * std::pow(e, 2 * k);
  });
}

double parity_integral(int k) {
  if (k < 0) throw DomainError("parity_integral: k must be non-negative");
  return quadrature::integrate([k](double x) { return std::pow(x, 2 * k) * std::pow(kernels::erf(x), k); },
                               -1.0, 1.0, {1e-15, 1e-13, 1000000})
      .value;
}

double i2k_gauss(int k, double a) {
  if (k < 0) throw DomainError("i2k_gauss: k must be non-negative");
  if (k > 20) throw RangeError("i2k_gauss: k above 20 is outside the supported range");
  long double sum = 0.0L;
  for (int j = 0; j <= k; ++j) {
    const long double term = binomial(k, j) * j_nk(j, k, a);
    sum += (j % 2 == 0) ? term : -term;
  }
  return static_cast<double>(sum);
}

double i2k_gauss_quadrature(int k, double a) {
  if (k < 0) throw DomainError("i2k_gauss_quadrature: k must be non-negative");
  check_a(a);
  return symmetric([k, a](double x) { return std::pow(x, 4 * k) * std::pow(-std::expm1(-a * x * x), k); });
}

double i2k_pade(int k, PadeVariant variant) {
  check_pade_k(k);
  return hyper_form(k, variant, 3.0 * k);
}

double i2k_pade_shifted(int k, PadeVariant variant) {
  check_pade_k(k);
  return hyper_form(k, variant, 6.0 * k);
}

double i2k_pade_quadrature(int k, PadeVariant variant) {
  if (k < 0) throw DomainError("i2k_pade_quadrature: k must be non-negative");
  return symmetric([k, variant](double x) { return std::pow(x, 4 * k) * std::pow(approx::pade_erf(x, variant), 2 * k); });
}

ComparisonRow i_n_forms(int n) {
  if (n < 0) throw DomainError("i_n_forms: n must be non-negative");
  if (n > 8) throw RangeError("i_n_forms: n above 8 is outside the supported range");
  ComparisonRow row;
  row.index = n;
  if (n == 0) {
    row.oracle = row.closed_form = 2.0;
    row.alt_oracle = 2.0;
    for (const char* name : {"jn", "pade_2f1", "pade_appell", "shifted_2f1", "shifted_appell"}) {
      row.approx_variants[name] = 2.0;
    }
    row.best_reading = "unweighted";
    fill_errors(row);
    return row;
  }

  row.oracle = symmetric([n](double x) { return std::pow(kernels::erf(x), 2 * n); });
  row.alt_oracle = i2k_oracle(n);
  row.closed_form = j_n(n, default_a());

  const double prefactor = 2.0 / (2 * n + 1) * std::pow(4.0 / kPi, n);
  const double shifted_2f1 = prefactor * kernels::hyp2f1(2.0 * n, 2.0 * n + 0.5, 2.0 * n + 1.5, -1.0 / 3.0);
  const double shifted_appell =
      prefactor * kernels::appell_f1(2.0 * n + 0.5, -2.0 * n, 2.0 * n, 2.0 * n + 1.5, 1.0 / 30.0, -0.3);
  // Exact integrals of the Pade forms without the x^{4n} weight (u = x^2).
  const double exact_2f1 = prefactor * kernels::hyp2f1(2.0 * n, n + 0.5, n + 1.5, -1.0 / 3.0);
  const double exact_appell =
      prefactor * kernels::appell_f1(n + 0.5, -2.0 * n, 2.0 * n, n + 1.5, 1.0 / 30.0, -0.3);

  row.approx_variants["jn"] = row.closed_form;
  row.approx_variants["pade_2f1"] = exact_2f1;
  row.approx_variants["pade_appell"] = exact_appell;
  row.approx_variants["shifted_2f1"] = shifted_2f1;
  row.approx_variants["shifted_appell"] = shifted_appell;
  fill_errors(row);

  const double unweighted_gap = std::fabs(shifted_2f1 - row.oracle) + std::fabs(shifted_appell - row.oracle);
  const double weighted_gap = std::fabs(shifted_2f1 - *row.alt_oracle) + std::fabs(shifted_appell - *row.alt_oracle);
  row.best_reading = unweighted_gap <= weighted_gap ? "unweighted" : "weighted";
  return row;
}

ComparisonRow i2k_row(int k, double a) {
  if (k < 0) throw DomainError("i2k_row: k must be non-negative");
  if (k > 8) throw RangeError("i2k_row: k above 8 is outside the supported range");
  ComparisonRow row;
  row.index = k;
  row.oracle = i2k_oracle(k);
  row.closed_form = i2k_gauss(k, a);
  row.approx_variants["gauss"] = row.closed_form;
  if (k >= 1) {
    row.approx_variants["pade_simple"] = i2k_pade(k, PadeVariant::simple);
    row.approx_variants["pade_refined"] = i2k_pade(k, PadeVariant::refined);
    row.approx_variants["shifted_simple"] = i2k_pade_shifted(k, PadeVariant::simple);
    row.approx_variants["shifted_refined"] = i2k_pade_shifted(k, PadeVariant::refined);
  }
  row.best_reading = "weighted";
  fill_errors(row);
  return row;
}

double exp_expansion(int K) {
  if (K < 0) throw DomainError("exp_expansion: K must be non-negative");
  if (K > 20) throw RangeError("exp_expansion: K above 20 is outside the supported range");
  long double sum = 0.0L;
  long double factorial = 1.0L;  // (2j)!
  for (int j = 0; j <= K; ++j) {
    if (j > 0) factorial *= static_cast<long double>(2 * j - 1) * (2 * j);
    sum += i2k_oracle(j) / factorial;
  }
  return static_cast<double>(sum);
}

double exp_integral_oracle() {
  return quadrature::integrate([](double x) { return std::exp(-x * x * kernels::erf(x)); }, -1.0, 1.0,
                               kOracleTol)
      .value;
}

std::vector<ComparisonRow> i_n_table(int n_max) {
  std::vector<ComparisonRow> rows;
  for (int n = 1; n <= n_max; ++n) rows.push_back(i_n_forms(n));
  return rows;
}

std::vector<ComparisonRow> i2k_table(int k_max, double a) {
  std::vector<ComparisonRow> rows;
  for (int k = 1; k <= k_max; ++k) rows.push_back(i2k_row(k, a));
  return rows;
}

}  // namespace tspecial::integrals
