#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace cw {

enum class Family { A, B, D, I2, H3, H4, F4, E6, E7 };

/// Irreducible finite Coxeter type. `m` is only meaningful for I2.
struct CoxeterType {
  Family family = Family::A;
  int rank = 1;
  int m = 0;

  static CoxeterType A(int n) { return {Family::A, n, 0}; }
  static CoxeterType B(int n) { return {Family::B, n, 0}; }
  static CoxeterType D(int n) { return {Family::D, n, 0}; }
  static CoxeterType I2(int m) { return {Family::I2, 2, m}; }
  static CoxeterType G2() { return I2(6); }
  static CoxeterType H3() { return {Family::H3, 3, 0}; }
  static CoxeterType H4() { return {Family::H4, 4, 0}; }
  static CoxeterType F4() { return {Family::F4, 4, 0}; }
  static CoxeterType E6() { return {Family::E6, 6, 0}; }
  static CoxeterType E7() { return {Family::E7, 7, 0}; }

  /// "A3", "B4", "D5", "G2", "I2:7", "H3", "H4", "F4", "E6", "E7".
  /// Throws BadConfig on malformed text, UnsupportedType for E8.
  static CoxeterType parse(std::string_view text);
  /// Throws BadConfig if rank/m violate the family constraints.
  void validate() const;

  std::string name() const;
  bool crystallographic() const;
  std::uint64_t group_order() const;
  /// Number of reflections (= positive roots).
  int num_reflections() const;

  friend auto operator<=>(const CoxeterType&, const CoxeterType&) = default;
};

}  // namespace cw
