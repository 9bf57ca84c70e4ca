#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "cw/exact/polynomial.hpp"

namespace cw {

/// Element of Q(u): a reduced fraction num/den with monic denominator.
class RationalFunction {
 public:
  static constexpr bool is_field = true;

  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Rational c) : num_(std::move(c)), den_(1) {}  // NOLINT
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction zero() { return {}; }
  static RationalFunction one() { return {1}; }
  static RationalFunction from_int(long v) { return {v}; }
  static RationalFunction u() { return {Polynomial::x()}; }

  bool is_zero() const { return num_.is_zero(); }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  std::optional<RationalFunction> try_inverse() const;
  /// Value at a rational point; nullopt when the denominator vanishes there.
  std::optional<Rational> evaluate(const Rational& at) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::string& var = "u") const;
  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

}  // namespace cw
