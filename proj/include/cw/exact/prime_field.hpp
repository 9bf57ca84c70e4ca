#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <optional>
#include <ostream>
#include <string>

#include "cw/exact/rational.hpp"

namespace cw {

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;            // 2^31 - 1
inline constexpr std::uint64_t kConfirmationPrime = 2305843009213693951ULL;  // 2^61 - 1

/// Integers modulo a compile-time prime P. Both supported primes are
/// Mersenne numbers, so reduction is shift-and-add.
template <std::uint64_t P>
class PrimeField {
  static_assert(P > 2 && P < (1ULL << 62));

 public:
  static constexpr bool is_field = true;
  static constexpr std::uint64_t modulus = P;
  static constexpr bool mersenne = (P & (P + 1)) == 0;

  constexpr PrimeField() = default;
  PrimeField(long v) {  // NOLINT(google-explicit-constructor)
    long r = v % static_cast<long>(P);
    value_ = static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(P) : r);
  }
  static constexpr PrimeField from_raw(std::uint64_t raw) {
    PrimeField f;
    f.value_ = raw;
    return f;
  }
  static PrimeField zero() { return PrimeField(); }
  static PrimeField one() { return from_raw(1); }
  static PrimeField from_int(long v) { return PrimeField(v); }
  /// Image of a rational; throws if P divides the denominator.
  static PrimeField from_rational(const Rational& r);

  static constexpr std::uint64_t reduce(unsigned __int128 x) {
    if constexpr (mersenne) {
      constexpr int k = std::bit_width(P);
      std::uint64_t lo = static_cast<std::uint64_t>(x & P);
      unsigned __int128 hi = x >> k;
      // x < P^2 < 2^(2k): one fold leaves < 2^(k+1).
      std::uint64_t r = lo + static_cast<std::uint64_t>(hi & P) + static_cast<std::uint64_t>(hi >> k);
      while (r >= P) r -= P;
      return r;
    } else {
      return static_cast<std::uint64_t>(x % P);
    }
  }

  constexpr std::uint64_t raw() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  PrimeField pow(std::uint64_t e) const {
    PrimeField base = *this, acc = one();
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }
  std::optional<PrimeField> try_inverse() const {
    if (is_zero()) return std::nullopt;
    return pow(P - 2);
  }

  PrimeField operator-() const { return from_raw(value_ == 0 ? 0 : P - value_); }
  PrimeField& operator+=(const PrimeField& o) {
    value_ += o.value_;
    if (value_ >= P) value_ -= P;
    return *this;
  }
  PrimeField& operator-=(const PrimeField& o) {
    value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + P - o.value_;
    return *this;
  }
  PrimeField& operator*=(const PrimeField& o) {
    value_ = reduce(static_cast<unsigned __int128>(value_) * o.value_);
    return *this;
  }
  PrimeField& operator/=(const PrimeField& o) { return *this *= *o.try_inverse(); }

  friend PrimeField operator+(PrimeField a, const PrimeField& b) { return a += b; }
  friend PrimeField operator-(PrimeField a, const PrimeField& b) { return a -= b; }
  friend PrimeField operator*(PrimeField a, const PrimeField& b) { return a *= b; }
  friend PrimeField operator/(PrimeField a, const PrimeField& b) { return a /= b; }
  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.value_ == b.value_; }

  std::string to_string() const { return std::to_string(value_); }
  friend std::ostream& operator<<(std::ostream& os, const PrimeField& f) { return os << f.value_; }

 private:
  std::uint64_t value_ = 0;
};

template <std::uint64_t P>
PrimeField<P> PrimeField<P>::from_rational(const Rational& r) {
  auto reduce_mpz = [](const mpz_class& z) {
    mpz_class m = z % mpz_class(std::to_string(P));
    if (m < 0) m += mpz_class(std::to_string(P));
    return from_raw(std::stoull(m.get_str()));
  };
  PrimeField num = reduce_mpz(r.numerator());
  PrimeField den = reduce_mpz(r.denominator());
  auto inv = den.try_inverse();
  if (!inv) throw std::domain_error("denominator vanishes modulo p");
  return num * *inv;
}

using Fp31 = PrimeField<kDefaultPrime>;
using Fp61 = PrimeField<kConfirmationPrime>;

}  // namespace cw
