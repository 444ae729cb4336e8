#include "tspecial/tfun.hpp"

#include <array>
#include <cmath>
#include <cstdlib>

#include "tspecial/errors.hpp"
#include "tspecial/kernels.hpp"

namespace tspecial::tfun {
namespace {

constexpr double kSplit = 1.5;
constexpr double kEnd = 3.0;
constexpr int kDegree = 11;
constexpr int kNodes = 64;

// Ascending powers x^0 .. x^11.
constexpr std::array<double, 12> kPiece1 = {
    0.0,
    1.00003172454,
    -0.00104123958376,
    0.0133517048763,
    -0.370071852413,
    0.338453415662,
    -0.746480407376,
    1.31691631085,
    -1.16161653976,
    0.548169602543,
    -0.135129528505,
    0.0137936039435,
};

constexpr std::array<double, 12> kPiece2 = {
    1.04191571066,
    -4.69093970289,
    13.5920479951,
    -18.4622672665,
    15.3046428836,
    -8.55140470408,
    3.35913844398,
    -0.937675010268,
    0.183255163671,
    -0.0239397852528,
    0.00188305739843,
    -0.0000675632422240,
};

const std::string kTInfinityDigits = "0.97210699276917859315107787544239117555427218338557";

}  // namespace

double composition_integrand(double t) { return std::exp(-t * t * kernels::erf(t)); }

double product_integrand(double t) { return std::exp(-t * t) * kernels::erf(t); }

double t_reference(double x, const ToleranceSpec& tol) {
  if (!std::isfinite(x)) throw DomainError("t_reference: x must be finite");
  if (x == 0.0) return 0.0;
  if (x < 0.0) return -quadrature::integrate(composition_integrand, x, 0.0, tol).value;
  return quadrature::integrate(composition_integrand, 0.0, x, tol).value;
}

void TEvaluator::validate() const {
  if (piece1.a != 0.0 || piece1.b != kSplit || piece2.a != kSplit || piece2.b != kEnd) {
    throw PreconditionError("TEvaluator: pieces must cover [0, 3/2] and [3/2, 3]");
  }
  const double jump = approx::cheb_eval(piece1, kSplit).value - approx::cheb_eval(piece2, kSplit).value;
  if (std::fabs(jump) > 1e-5) {
    throw PreconditionError("TEvaluator: pieces disagree at x = 3/2");
  }
  if (!(tail_constant > 0.97 && tail_constant < 0.973)) {
    throw PreconditionError("TEvaluator: tail constant outside (0.97, 0.973)");
  }
}

std::span<const double> stored_piece1_monomial() { return kPiece1; }
std::span<const double> stored_piece2_monomial() { return kPiece2; }

TEvaluator build_evaluator(EvaluatorSource source) {
  TEvaluator ev;
  ev.source = source;
  if (source == EvaluatorSource::stored) {
    ev.piece1 = approx::monomial_to_cheb(kPiece1, 0.0, kSplit);
    ev.piece2 = approx::monomial_to_cheb(kPiece2, kSplit, kEnd);
    ev.tail_constant = approx::eval_monomial(kPiece2, kEnd);
  } else {
    auto reference = [](double x) { return t_reference(x); };
    ev.piece1 = approx::cheb_fit(reference, 0.0, kSplit, kDegree, kNodes);
    ev.piece2 = approx::cheb_fit(reference, kSplit, kEnd, kDegree, kNodes);
    ev.tail_constant = t_reference(kEnd);
  }
  ev.validate();
  return ev;
}

double t_eval(const TEvaluator& ev, double x) {
  if (std::isnan(x) || x < 0.0) {
    throw DomainError("t_eval: x must be >= 0; use t_reference for negative arguments");
  }
  if (x <= kSplit) return approx::cheb_eval(ev.piece1, x).value;
  if (x <= kEnd) return approx::cheb_eval(ev.piece2, x).value;
  return tail_phi(x, ev.tail_constant);
}

double tail_phi(double x, double t3) {
  // erf(x) - erf(3) = erfc(3) - erfc(x) keeps the small difference accurate.
  return t3 + 0.5 * kSqrtPi * (kernels::erfc(kEnd) - kernels::erfc(x));
}

const std::string& t_infinity_digits() { return kTInfinityDigits; }

double t_infinity(TInfinityMode mode) {
  switch (mode) {
    case TInfinityMode::stored:
      return std::strtod(kTInfinityDigits.c_str(), nullptr);
    case TInfinityMode::quadrature:
      return quadrature::integrate_semi_infinite(composition_integrand, 0.0, {1e-15, 1e-14, 1000000}).value;
    case TInfinityMode::heuristic: {
      const double prefactor = std::pow(kPi, 1.0 / 6.0) * std::tgamma(4.0 / 3.0) / std::cbrt(2.0);
      const double e = std::exp(1.0);
      return prefactor * kernels::hyp1f1(0.5, 1.5, -kPi * e * e);
    }
  }
  throw DomainError("t_infinity: unknown mode");
}

double taylor_head(double a) {
  if (std::isnan(a) || a < 0.0) throw DomainError("taylor_head: a must be >= 0");
  return a - a * a * a * a / (2.0 * kSqrtPi);
}

}  // namespace tspecial::tfun
