#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace tspecial::series {

/// Exact element of Q[sqrt(pi), 1/sqrt(pi)]: a finite sum of q_m * pi^(m/2)
/// with rational q_m.
///
/// Canonical form: no stored coefficient is zero, so two values are equal
/// exactly when their term maps are equal.
class PiHalfRational {
public:
  using Terms = std::map<int, mpq_class>;

  PiHalfRational() = default;
  explicit PiHalfRational(long integer);
  /// q * pi^(m/2)
  PiHalfRational(const mpq_class& q, int m);

  static PiHalfRational from_terms(Terms terms);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  PiHalfRational& operator+=(const PiHalfRational& rhs);
  PiHalfRational& operator-=(const PiHalfRational& rhs);
  PiHalfRational& operator*=(const PiHalfRational& rhs);
  PiHalfRational& operator*=(const mpq_class& scalar);

  friend PiHalfRational operator+(PiHalfRational lhs, const PiHalfRational& rhs) {
    return lhs += rhs;
  }
  friend PiHalfRational operator-(PiHalfRational lhs, const PiHalfRational& rhs) {
    return lhs -= rhs;
  }
  friend PiHalfRational operator*(PiHalfRational lhs, const PiHalfRational& rhs) {
    return lhs *= rhs;
  }
  friend PiHalfRational operator*(PiHalfRational lhs, const mpq_class& scalar) {
    return lhs *= scalar;
  }
  friend PiHalfRational operator*(const mpq_class& scalar, PiHalfRational rhs) {
    return rhs *= scalar;
  }
  PiHalfRational operator-() const;

  friend bool operator==(const PiHalfRational& lhs, const PiHalfRational& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

  /// Human-readable form, e.g. "1/210*pi^(-1/2) - 2/15*pi^(-3/2)".
  std::string to_string() const;

private:
  void prune();

  Terms terms_;
};

/// Numeric value in double precision; RangeError if it overflows.
double eval_pihalf(const PiHalfRational& x);

}  // namespace tspecial::series
