#include "cw/exact/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "cw/errors.hpp"

namespace cw {

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw BadConfig("empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw BadConfig("bad rational literal: " + s);
  }
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw BadConfig("bad rational literal: " + std::string(text));
  if (q.get_den() == 0) throw BadConfig("zero denominator: " + std::string(text));
  return Rational(q);
}

}  // namespace cw
