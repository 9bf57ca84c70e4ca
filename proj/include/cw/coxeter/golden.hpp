#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace cw {

/// a + b*phi in Z[phi], phi = (1 + sqrt 5) / 2, phi^2 = phi + 1.
///
/// Root coordinates of every supported type lie in this ring (integers for
/// the crystallographic types), so no field arithmetic is needed to build
/// the root systems.
struct GoldenInt {
  std::int64_t a = 0;
  std::int64_t b = 0;

  constexpr GoldenInt() = default;
  constexpr GoldenInt(std::int64_t a_, std::int64_t b_ = 0) : a(a_), b(b_) {}  // NOLINT
  static constexpr GoldenInt phi() { return {0, 1}; }

  constexpr bool is_zero() const { return a == 0 && b == 0; }
  /// Sign of the real number a + b*phi, decided exactly.
  int sign() const;

  friend constexpr GoldenInt operator+(GoldenInt x, GoldenInt y) { return {x.a + y.a, x.b + y.b}; }
  friend constexpr GoldenInt operator-(GoldenInt x, GoldenInt y) { return {x.a - y.a, x.b - y.b}; }
  friend constexpr GoldenInt operator-(GoldenInt x) { return {-x.a, -x.b}; }
  friend constexpr GoldenInt operator*(GoldenInt x, GoldenInt y) {
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }
  GoldenInt& operator+=(GoldenInt o) { return *this = *this + o; }
  GoldenInt& operator-=(GoldenInt o) { return *this = *this - o; }
  friend constexpr auto operator<=>(const GoldenInt&, const GoldenInt&) = default;

  std::string to_string() const;
};

}  // namespace cw
