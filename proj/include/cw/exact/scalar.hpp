#pragma once

#include <concepts>
#include <optional>
#include <string>

namespace cw {

template <class S>
concept Scalar = std::regular<S> && requires(S a, const S& b, long n) {
  { S::zero() } -> std::same_as<S>;
  { S::one() } -> std::same_as<S>;
  { S::from_int(n) } -> std::same_as<S>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.try_inverse() } -> std::same_as<std::optional<S>>;
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { S::is_field } -> std::convertible_to<bool>;
};

template <class S>
concept FieldScalar = Scalar<S> && S::is_field;

}  // namespace cw
