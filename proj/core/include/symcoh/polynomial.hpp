#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "symcoh/rational.hpp"

namespace symcoh {

/// Exponent vector over at most 8 variables, packed one byte per variable.
class Monomial {
 public:
  static constexpr int kMaxVariables = 8;

  constexpr Monomial() = default;
  static Monomial variable(int i, int power = 1);

  int exponent(int i) const { return static_cast<int>((packed_ >> (8 * i)) & 0xffu); }
  int degree() const;
  bool is_one() const { return packed_ == 0; }
  std::uint64_t packed() const { return packed_; }

  /// Throws DomainError if some exponent would exceed 255.
  friend Monomial operator*(Monomial a, Monomial b);
  /// Removes one power of variable i; the caller checks exponent(i) > 0.
  Monomial lowered(int i) const;

  friend constexpr bool operator==(Monomial, Monomial) = default;
  friend constexpr auto operator<=>(Monomial a, Monomial b) { return a.packed_ <=> b.packed_; }

 private:
  std::uint64_t packed_ = 0;
};

/// Multivariate polynomial with rational coefficients, zero-pruned.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(const Rational& c);
  static Polynomial variable(int i);
  static Polynomial term(Monomial m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  int total_degree() const;
  /// Highest variable index that occurs, or -1.
  int max_variable() const;
  Rational constant_term() const;
  Rational evaluate(std::span<const Rational> point) const;

  void add_term(Monomial m, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& r);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& r) { return a *= r; }
  friend Polynomial operator*(const Rational& r, Polynomial a) { return a *= r; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// d/dx_i
  friend Polynomial partial(const Polynomial& f, int i);

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace symcoh
