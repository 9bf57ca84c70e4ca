#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "cw/exact/rational.hpp"

namespace cw {

/// Multivariate Laurent polynomial Q[x_0^{±1}, ..., x_5^{±1}].
///
/// Used wherever several independent symbols are needed at once (one
/// parameter per conjugacy class of simple reflections, lambda, the bar
/// variables v_s). Only monomials are invertible, so this is a ring and
/// not a field; field-only algorithms reject it at compile time.
class Laurent {
 public:
  static constexpr bool is_field = false;
  static constexpr int kMaxVars = 6;
  using Exponents = std::array<std::int16_t, kMaxVars>;
  struct Term {
    Exponents exponents{};
    Rational coefficient;
  };

  Laurent() = default;
  Laurent(long c);      // NOLINT(google-explicit-constructor)
  Laurent(Rational c);  // NOLINT(google-explicit-constructor)

  static Laurent zero() { return {}; }
  static Laurent one() { return {1}; }
  static Laurent from_int(long v) { return {v}; }
  /// x_var^power.
  static Laurent var(int var, int power = 1);
  static Laurent monomial(const Exponents& e, Rational c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_constant() const;
  /// Invertible iff a single term.
  std::optional<Laurent> try_inverse() const;

  /// Ring automorphism x_i -> x_i^{-1} on the variables in `mask` (bit i).
  Laurent bar(std::uint32_t mask = 0x3F) const;
  /// Degree bounds in one variable (0 for the zero polynomial).
  int max_degree_in(int var) const;
  int min_degree_in(int var) const;
  /// Sum of the terms whose exponent of `var` equals `degree`, with that variable removed.
  Laurent coefficient_in(int var, int degree) const;
  Laurent derivative(int var) const;
  /// Substitute x_var := value (other variables untouched).
  Laurent substitute(int var, const Laurent& value) const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b);

  Laurent pow(unsigned e) const;

  /// Canonical text, highest monomial first. Default names x0..x5.
  std::string to_string(std::span<const std::string> names = {}) const;
  friend std::ostream& operator<<(std::ostream& os, const Laurent& l) { return os << l.to_string(); }

 private:
  static void canonicalize(std::vector<Term>& terms);
  std::vector<Term> terms_;  // sorted by exponents ascending, no zero coefficients
};

}  // namespace cw
