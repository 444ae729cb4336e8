#pragma once

// Exact Taylor machinery for T(x) = int_0^x exp(-t^2 erf t) dt.
//
// All series carry PiHalfRational coefficients, so the expansion of T is
// computed without rounding and only the final evaluation touches doubles.

#include <span>
#include <vector>

#include "tspecial/errors.hpp"
#include "tspecial/pihalf.hpp"

namespace tspecial::series {

/// Truncated power series sum_{p <= order} coeffs[p] x^p. Coefficients past
/// `order` are unknown, not zero.
struct PowerSeries {
  int order = 0;
  std::vector<PiHalfRational> coeffs;

  explicit PowerSeries(int order_) : order(order_), coeffs(static_cast<size_t>(order_) + 1) {}

  const PiHalfRational& operator[](int p) const { return coeffs.at(static_cast<size_t>(p)); }
  PiHalfRational& operator[](int p) { return coeffs.at(static_cast<size_t>(p)); }

  /// Same series known only through order m <= order.
  PowerSeries truncated(int m) const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;
};

/// Maclaurin series of erf: coefficient of z^(2n+1) is (2/sqrt pi)(-1)^n / (n! (2n+1)).
PowerSeries erf_series(int order);

/// Maclaurin series of -x^2 erf(x); only odd powers j >= 3 are non-zero.
PowerSeries inner_series(int order);

/// exp(f(x)) for a series with an exactly zero constant term, computed from
/// h' = f' h, i.e. n h_n = sum_k k f_k h_{n-k}.
PowerSeries exp_compose(const PowerSeries& f, int order);

/// All partial Bell polynomials B_{n,k}(a_1, ..., a_{n-k+1}) for n <= nmax,
/// via B_{n,k} = sum_j C(n-1, j-1) a_j B_{n-j,k-1}. `a[0]` holds a_1.
/// Result is indexed [n][k].
template <class T>
std::vector<std::vector<T>> bell_table(int nmax, std::span<const T> a) {
  if (nmax < 0) {
    throw DomainError("bell_table: nmax must be non-negative");
  }
  if (nmax > 0 && static_cast<int>(a.size()) < nmax) {
    throw DomainError("bell_table: need a_1 .. a_nmax");
  }
  std::vector<std::vector<T>> table(static_cast<size_t>(nmax) + 1,
                                    std::vector<T>(static_cast<size_t>(nmax) + 1, T(0L)));
  table[0][0] = T(1L);
  // binom[n][j] = C(n, j); n <= 60 keeps it inside 64 bits.
  std::vector<std::vector<long>> binom(static_cast<size_t>(nmax) + 1);
  for (int n = 0; n <= nmax; ++n) {
    binom[n].assign(static_cast<size_t>(n) + 1, 1L);
    for (int j = 1; j < n; ++j) {
      binom[n][j] = binom[n - 1][j - 1] + binom[n - 1][j];
    }
  }
  for (int n = 1; n <= nmax; ++n) {
    for (int k = 1; k <= n; ++k) {
      T acc(0L);
      for (int j = 1; j <= n - k + 1; ++j) {
        const T& lower = table[n - j][k - 1];
        if (lower == T(0L)) continue;
        acc += T(binom[n - 1][j - 1]) * a[j - 1] * lower;
      }
      table[n][k] = acc;
    }
  }
  return table;
}

/// Single partial Bell polynomial B_{n,k}; `a` must supply a_1..a_{n-k+1}.
template <class T>
T bell_partial(int n, int k, std::span<const T> a) {
  if (n < 1) {
    throw DomainError("bell_partial: n must be positive");
  }
  if (k < 1 || k > n) {
    throw DomainError("bell_partial: k must lie in 1..n");
  }
  if (static_cast<int>(a.size()) < n - k + 1) {
    throw DomainError("bell_partial: need a_1 .. a_{n-k+1}");
  }
  // Entries a_j with j > n-k+1 never enter B_{n,k}; pad so the table can be built.
  std::vector<T> padded(a.begin(), a.end());
  padded.resize(static_cast<size_t>(n), T(0L));
  return bell_table<T>(n, padded)[n][k];
}

/// Coefficients c_0..c_order of T(x), c_p = d_{p-1}/p with d the series of
/// exp(-x^2 erf x), computed by the exponential recurrence.
PowerSeries t_series_exp(int order);

/// Same coefficients via Faa di Bruno: g(y) = e^-y composed with
/// f(x) = x^2 erf(x), d_n = (1/n!) sum_k (-1)^k B_{n,k}(f'(0), f''(0), ...).
PowerSeries t_series_faa_di_bruno(int order);

/// t_series_exp, optionally verified against the Faa di Bruno route
/// (std::logic_error if they ever differ).
PowerSeries t_series(int order, bool cross_check = true);

/// Horner evaluation of sum_{p <= n} c_p t^p; n <= ps.order.
double partial_sum(const PowerSeries& ps, double t, int n);

/// Taylor coefficients of erf about a, for (x - a)^0 .. (x - a)^order:
///   erf(a), then (2/sqrt pi) e^{-a^2} (-1)^(n-1) H_{n-1}(a) / n!.
std::vector<double> erf_taylor_at(double a, int order);

}  // namespace tspecial::series
