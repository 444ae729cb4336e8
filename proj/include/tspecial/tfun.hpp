#pragma once

// The function T(x) = int_0^x exp(-t^2 erf t) dt and its limit T(+inf).
// Quadrature supplies reference values; a piecewise form evaluates fast.

#include <span>
#include <string>

#include "tspecial/approx.hpp"
#include "tspecial/quadrature.hpp"

namespace tspecial::tfun {

/// exp(-t^2 erf t), the integrand that defines T.
double composition_integrand(double t);

/// e^{-t^2} erf t, whose integral (sqrt(pi)/4) erf(x)^2 is elementary.
double product_integrand(double t);

/// Adaptive quadrature of the composition integrand; the ground truth.
/// Negative x integrates backwards and returns the signed value.
double t_reference(double x, const ToleranceSpec& tol = quadrature::default_tolerance());

enum class EvaluatorSource { stored, regenerated };

/// Degree-11 pieces on [0, 3/2] and [3/2, 3], then
/// phi(x) = tail_constant + (sqrt(pi)/2)(erf(x) - erf(3)) for x > 3.
struct TEvaluator {
  approx::ChebyshevApproximant piece1;
  approx::ChebyshevApproximant piece2;
  double tail_constant = 0.0;
  EvaluatorSource source = EvaluatorSource::stored;

  /// Checks the interval endpoints, cross-piece continuity (1e-5) and the
  /// range of the tail constant; throws PreconditionError.
  void validate() const;
};

/// Stored monomial coefficients of the two pieces, ascending powers.
std::span<const double> stored_piece1_monomial();
std::span<const double> stored_piece2_monomial();

/// stored converts the reference monomials to Chebyshev form and takes
/// the tail constant from the second piece at x = 3. regenerated fits
/// t_reference with 64 nodes and uses t_reference(3).
TEvaluator build_evaluator(EvaluatorSource source);

/// Piecewise evaluation; negative x throws DomainError (use t_reference).
double t_eval(const TEvaluator& ev, double x);

/// Tail formula phi(x) for x >= 3 given T(3).
double tail_phi(double x, double t3);

enum class TInfinityMode { stored, quadrature, heuristic };

/// T(+inf) to 50 digits, as a decimal string.
const std::string& t_infinity_digits();

/// stored: the 50-digit constant rounded to double. quadrature: recomputed
/// over [0, inf). heuristic: (pi^(1/6) Gamma(4/3) / 2^(1/3)) 1F1(1/2; 3/2; -pi e^2),
/// an estimate rather than an identity.
double t_infinity(TInfinityMode mode);

/// a - a^4/(2 sqrt(pi)), the two leading series terms; only good for small a.
double taylor_head(double a);

}  // namespace tspecial::tfun
