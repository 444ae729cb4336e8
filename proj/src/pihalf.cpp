#include "tspecial/pihalf.hpp"

#include <cmath>
#include <sstream>

#include "tspecial/errors.hpp"
#include "tspecial/kernels.hpp"

namespace tspecial::series {

PiHalfRational::PiHalfRational(long integer) {
  if (integer != 0) {
    terms_.emplace(0, mpq_class(integer));
  }
}

PiHalfRational::PiHalfRational(const mpq_class& q, int m) {
  if (q != 0) {
    mpq_class canonical(q);
    canonical.canonicalize();
    terms_.emplace(m, std::move(canonical));
  }
}

PiHalfRational PiHalfRational::from_terms(Terms terms) {
  PiHalfRational out;
  out.terms_ = std::move(terms);
  for (auto& [m, q] : out.terms_) {
    q.canonicalize();
  }
  out.prune();
  return out;
}

void PiHalfRational::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

PiHalfRational& PiHalfRational::operator+=(const PiHalfRational& rhs) {
  for (const auto& [m, q] : rhs.terms_) {
    terms_[m] += q;
  }
  prune();
  return *this;
}

PiHalfRational& PiHalfRational::operator-=(const PiHalfRational& rhs) {
  for (const auto& [m, q] : rhs.terms_) {
    terms_[m] -= q;
  }
  prune();
  return *this;
}

PiHalfRational& PiHalfRational::operator*=(const PiHalfRational& rhs) {
  Terms product;
  for (const auto& [m1, q1] : terms_) {
    for (const auto& [m2, q2] : rhs.terms_) {
      product[m1 + m2] += q1 * q2;
    }
  }
  terms_ = std::move(product);
  prune();
  return *this;
}

PiHalfRational& PiHalfRational::operator*=(const mpq_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, q] : terms_) {
    q *= scalar;
  }
  return *this;
}

PiHalfRational PiHalfRational::operator-() const {
  PiHalfRational out(*this);
  for (auto& [m, q] : out.terms_) {
    q = -q;
  }
  return out;
}

std::string PiHalfRational::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  // Highest power of pi first, matching how such coefficients are usually written.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, q] = *it;
    mpq_class magnitude = abs(q);
    if (first) {
      if (q < 0) out << "-";
    } else {
      out << (q < 0 ? " - " : " + ");
    }
    first = false;
    out << magnitude.get_str();
    if (m != 0) {
      out << "*pi^(" << (m % 2 == 0 ? std::to_string(m / 2) : std::to_string(m) + "/2") << ")";
    }
  }
  return out.str();
}

double eval_pihalf(const PiHalfRational& x) {
  double sum = 0.0;
  for (const auto& [m, q] : x.terms()) {
    sum += q.get_d() * std::pow(kSqrtPi, m);
  }
  if (!std::isfinite(sum)) {
    throw RangeError("eval_pihalf: value overflows double");
  }
  return sum;
}

}  // namespace tspecial::series
