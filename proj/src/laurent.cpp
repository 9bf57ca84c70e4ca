#include "cw/exact/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cw {

Laurent::Laurent(long c) : Laurent(Rational(c)) {}

Laurent::Laurent(Rational c) {
  if (!c.is_zero()) terms_.push_back(Term{Exponents{}, std::move(c)});
}

Laurent Laurent::var(int var, int power) {
  if (var < 0 || var >= kMaxVars) throw std::out_of_range("Laurent variable index");
  Exponents e{};
  e[static_cast<std::size_t>(var)] = static_cast<std::int16_t>(power);
  return monomial(e, Rational(1));
}

Laurent Laurent::monomial(const Exponents& e, Rational c) {
  Laurent r;
  if (!c.is_zero()) r.terms_.push_back(Term{e, std::move(c)});
  return r;
}

bool Laurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponents == Exponents{});
}

std::optional<Laurent> Laurent::try_inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  Term t = terms_[0];
  for (auto& x : t.exponents) x = static_cast<std::int16_t>(-x);
  t.coefficient = *t.coefficient.try_inverse();
  Laurent r;
  r.terms_.push_back(std::move(t));
  return r;
}

void Laurent::canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponents < b.exponents; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term acc = std::move(terms[i]);
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].exponents == acc.exponents; ++j) acc.coefficient += terms[j].coefficient;
    if (!acc.coefficient.is_zero()) terms[out++] = std::move(acc);
    i = j;
  }
  terms.resize(out);
}

Laurent Laurent::bar(std::uint32_t mask) const {
  Laurent r = *this;
  for (auto& t : r.terms_)
    for (int v = 0; v < kMaxVars; ++v)
      if (mask & (1U << v)) t.exponents[static_cast<std::size_t>(v)] = static_cast<std::int16_t>(-t.exponents[static_cast<std::size_t>(v)]);
  canonicalize(r.terms_);
  return r;
}

int Laurent::max_degree_in(int var) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int e = t.exponents[static_cast<std::size_t>(var)];
    d = first ? e : std::max(d, e);
    first = false;
  }
  return d;
}

int Laurent::min_degree_in(int var) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int e = t.exponents[static_cast<std::size_t>(var)];
    d = first ? e : std::min(d, e);
    first = false;
  }
  return d;
}

Laurent Laurent::coefficient_in(int var, int degree) const {
  Laurent r;
  for (const auto& t : terms_) {
    if (t.exponents[static_cast<std::size_t>(var)] != degree) continue;
    Term c = t;
    c.exponents[static_cast<std::size_t>(var)] = 0;
    r.terms_.push_back(std::move(c));
  }
  canonicalize(r.terms_);
  return r;
}

Laurent Laurent::derivative(int var) const {
  Laurent r;
  for (const auto& t : terms_) {
    int e = t.exponents[static_cast<std::size_t>(var)];
    if (e == 0) continue;
    Term c = t;
    c.coefficient *= Rational(e);
    c.exponents[static_cast<std::size_t>(var)] = static_cast<std::int16_t>(e - 1);
    r.terms_.push_back(std::move(c));
  }
  canonicalize(r.terms_);
  return r;
}

Laurent Laurent::substitute(int var, const Laurent& value) const {
  Laurent r;
  std::optional<Laurent> inv;
  for (const auto& t : terms_) {
    int e = t.exponents[static_cast<std::size_t>(var)];
    Term rest = t;
    rest.exponents[static_cast<std::size_t>(var)] = 0;
    Laurent piece = monomial(rest.exponents, rest.coefficient);
    if (e >= 0) {
      piece *= value.pow(static_cast<unsigned>(e));
    } else {
      if (!inv) inv = value.try_inverse();
      if (!inv) throw std::domain_error("substituting a non-invertible value for a negative power");
      piece *= inv->pow(static_cast<unsigned>(-e));
    }
    r += piece;
  }
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].exponents < o.terms_[j].exponents)) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].exponents < terms_[i].exponents) {
      merged.push_back(o.terms_[j++]);
    } else {
      Term t = std::move(terms_[i++]);
      t.coefficient += o.terms_[j++].coefficient;
      if (!t.coefficient.is_zero()) merged.push_back(std::move(t));
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Laurent::Term t;
      for (std::size_t v = 0; v < Laurent::kMaxVars; ++v)
        t.exponents[v] = static_cast<std::int16_t>(x.exponents[v] + y.exponents[v]);
      t.coefficient = x.coefficient * y.coefficient;
      r.terms_.push_back(std::move(t));
    }
  }
  Laurent::canonicalize(r.terms_);
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

bool operator==(const Laurent& a, const Laurent& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exponents != b.terms_[i].exponents) return false;
    if (!(a.terms_[i].coefficient == b.terms_[i].coefficient)) return false;
  }
  return true;
}

Laurent Laurent::pow(unsigned e) const {
  Laurent acc(1), base = *this;
  while (e) {
    if (e & 1U) acc *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return acc;
}

std::string Laurent::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->coefficient;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool any_var = false;
    std::ostringstream mono;
    for (int v = 0; v < kMaxVars; ++v) {
      int e = it->exponents[static_cast<std::size_t>(v)];
      if (e == 0) continue;
      if (any_var) mono << "*";
      any_var = true;
      if (static_cast<std::size_t>(v) < names.size()) {
        mono << names[static_cast<std::size_t>(v)];
      } else {
        mono << "x" << v;
      }
      if (e != 1) mono << "^" << e;
    }
    if (!any_var) {
      os << mag;
    } else {
      if (!mag.is_one()) os << mag << "*";
      os << mono.str();
    }
  }
  return os.str();
}

}  // namespace cw
