#include "cw/coxeter/golden.hpp"

namespace cw {

int GoldenInt::sign() const {
  // 2(a + b*phi) = x + y*sqrt5 with x = 2a + b, y = b.
  const std::int64_t x = 2 * a + b, y = b;
  auto sgn = [](std::int64_t v) { return (v > 0) - (v < 0); };
  if (sgn(x) == sgn(y) || y == 0) return sgn(x) != 0 ? sgn(x) : sgn(y);
  if (x == 0) return sgn(y);
  // opposite signs: compare x^2 with 5 y^2
  const __int128 lhs = static_cast<__int128>(x) * x, rhs = static_cast<__int128>(5) * y * y;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sgn(x) : sgn(y);
}

std::string GoldenInt::to_string() const {
  if (b == 0) return std::to_string(a);
  std::string s = a == 0 ? "" : std::to_string(a) + (b > 0 ? "+" : "");
  return s + std::to_string(b) + "*phi";
}

}  // namespace cw
