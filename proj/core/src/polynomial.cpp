#include "symcoh/polynomial.hpp"

#include <sstream>

#include "symcoh/error.hpp"

namespace symcoh {

Monomial Monomial::variable(int i, int power) {
  if (i < 0 || i >= kMaxVariables) throw DomainError("polynomial variable index out of range");
  if (power < 0 || power > 255) throw DomainError("monomial exponent out of range");
  Monomial m;
  m.packed_ = static_cast<std::uint64_t>(power) << (8 * i);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int i = 0; i < kMaxVariables; ++i) d += exponent(i);
  return d;
}

Monomial operator*(Monomial a, Monomial b) {
  for (int i = 0; i < Monomial::kMaxVariables; ++i) {
    if (a.exponent(i) + b.exponent(i) > 255) throw DomainError("monomial exponent overflow");
  }
  Monomial m;
  m.packed_ = a.packed_ + b.packed_;
  return m;
}

Monomial Monomial::lowered(int i) const {
  Monomial m;
  m.packed_ = packed_ - (std::uint64_t{1} << (8 * i));
  return m;
}

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(int i) { return term(Monomial::variable(i), Rational(1)); }

Polynomial Polynomial::term(Monomial m, const Rational& c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Polynomial::max_variable() const {
  int v = -1;
  for (const auto& [m, c] : terms_) {
    for (int i = Monomial::kMaxVariables - 1; i > v; --i) {
      if (m.exponent(i) > 0) {
        v = i;
        break;
      }
    }
  }
  return v;
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) <= max_variable()) throw ContextError("evaluation point has too few coordinates");
  Rational out;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < static_cast<int>(point.size()) && i < Monomial::kMaxVariables; ++i) {
      for (int e = 0; e < m.exponent(i); ++e) v *= point[i];
    }
    out += v;
  }
  return out;
}

void Polynomial::add_term(Monomial m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= r;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial partial(const Polynomial& f, int i) {
  Polynomial out;
  for (const auto& [m, c] : f.terms_) {
    const int e = m.exponent(i);
    if (e == 0) continue;
    out.terms_.emplace(m.lowered(i), c * Rational(e));
  }
  return out;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational mag = c.sign() < 0 ? -c : c;
    const bool unit = mag == Rational(1);
    if (!unit || m.is_one()) os << mag;
    bool need_star = !unit;
    for (int i = 0; i < Monomial::kMaxVariables; ++i) {
      const int e = m.exponent(i);
      if (e == 0) continue;
      if (need_star) os << "*";
      need_star = true;
      if (i < static_cast<int>(names.size())) {
        os << names[i];
      } else {
        os << "x" << (i + 1);
      }
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace symcoh
