#include "cw/coxeter/type.hpp"

#include <cctype>
#include <charconv>

#include "cw/errors.hpp"

namespace cw {

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw BadConfig("malformed Coxeter type: '" + std::string(whole) + "'");
  return v;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

CoxeterType CoxeterType::parse(std::string_view text) {
  if (text.size() < 2) throw BadConfig("malformed Coxeter type: '" + std::string(text) + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  std::string_view rest = text.substr(1);
  CoxeterType t;
  switch (f) {
    case 'A': t = A(parse_int(rest, text)); break;
    case 'B': t = B(parse_int(rest, text)); break;
    case 'C': throw UnsupportedType("type C shares its Coxeter group with type B; use B" + std::string(rest));
    case 'D': t = D(parse_int(rest, text)); break;
    case 'G':
      if (rest != "2") throw BadConfig("malformed Coxeter type: '" + std::string(text) + "'");
      t = G2();
      break;
    case 'I': {
      if (rest.size() < 3 || rest[0] != '2' || (rest[1] != ':' && rest[1] != '('))
        throw BadConfig("malformed Coxeter type: '" + std::string(text) + "'");
      std::string_view num = rest.substr(2);
      if (rest[1] == '(') {
        if (num.empty() || num.back() != ')') throw BadConfig("malformed Coxeter type: '" + std::string(text) + "'");
        num.remove_suffix(1);
      }
      t = I2(parse_int(num, text));
      break;
    }
    case 'H': {
      int n = parse_int(rest, text);
      if (n == 3) t = H3();
      else if (n == 4) t = H4();
      else throw BadConfig("type H exists only in ranks 3 and 4");
      break;
    }
    case 'F':
      if (parse_int(rest, text) != 4) throw BadConfig("type F exists only in rank 4");
      t = F4();
      break;
    case 'E': {
      int n = parse_int(rest, text);
      if (n == 6) t = E6();
      else if (n == 7) t = E7();
      else if (n == 8) throw UnsupportedType("E8 is not supported");
      else throw BadConfig("type E exists only in ranks 6, 7, 8");
      break;
    }
    default: throw BadConfig("unknown Coxeter family in '" + std::string(text) + "'");
  }
  t.validate();
  return t;
}

void CoxeterType::validate() const {
  bool ok = true;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::D: ok = rank >= 2; break;  // D2 = A1 x A1, D3 = A3
    case Family::I2: ok = rank == 2 && m >= 3; break;
    case Family::H3: ok = rank == 3; break;
    case Family::H4: ok = rank == 4; break;
    case Family::F4: ok = rank == 4; break;
    case Family::E6: ok = rank == 6; break;
    case Family::E7: ok = rank == 7; break;
  }
  if (ok && rank > 12) throw UnsupportedType("rank above 12 is not supported: " + name());
  if (!ok) throw BadConfig("invalid Coxeter type " + name());
}

std::string CoxeterType::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::I2: return m == 6 ? "G2" : "I2:" + std::to_string(m);
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
  }
  return "?";
}

bool CoxeterType::crystallographic() const {
  switch (family) {
    case Family::H3:
    case Family::H4: return false;
    case Family::I2: return m == 6;
    default: return true;
  }
}

std::uint64_t CoxeterType::group_order() const {
  switch (family) {
    case Family::A: return factorial(rank + 1);
    case Family::B: return (std::uint64_t{1} << rank) * factorial(rank);
    case Family::D: return (std::uint64_t{1} << (rank - 1)) * factorial(rank);
    case Family::I2: return 2 * static_cast<std::uint64_t>(m);
    case Family::H3: return 120;
    case Family::H4: return 14400;
    case Family::F4: return 1152;
    case Family::E6: return 51840;
    case Family::E7: return 2903040;
  }
  return 0;
}

int CoxeterType::num_reflections() const {
  switch (family) {
    case Family::A: return rank * (rank + 1) / 2;
    case Family::B: return rank * rank;
    case Family::D: return rank * (rank - 1);
    case Family::I2: return m;
    case Family::H3: return 15;
    case Family::H4: return 60;
    case Family::F4: return 24;
    case Family::E6: return 36;
    case Family::E7: return 63;
  }
  return 0;
}

}  // namespace cw
