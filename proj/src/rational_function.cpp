#include "cw/exact/rational_function.hpp"

#include <stdexcept>

namespace cw {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Polynomial::divmod(num_, g).first;
      den_ = Polynomial::divmod(den_, g).first;
    }
  }
  Rational lead = den_.lead();
  if (!lead.is_one()) {
    Rational inv = *lead.try_inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

std::optional<RationalFunction> RationalFunction::try_inverse() const {
  if (is_zero()) return std::nullopt;
  return RationalFunction(den_, num_);
}

std::optional<Rational> RationalFunction::evaluate(const Rational& at) const {
  Rational d = den_.evaluate(at);
  if (d.is_zero()) return std::nullopt;
  return num_.evaluate(at) / d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  auto inv = o.try_inverse();
  if (!inv) throw std::domain_error("rational function division by zero");
  return *this *= *inv;
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace cw
