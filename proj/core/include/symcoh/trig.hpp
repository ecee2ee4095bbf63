#pragma once

// Trigonometric polynomials with rational coefficients on R^{2n}/(tau Z)^{2n}:
//   f = sum_k c_k cos(k.theta) + s_k sin(k.theta),
// stored with each wave vector k lexicographically positive (or zero).

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "symcoh/rational.hpp"

namespace symcoh {

class WaveVector {
 public:
  static constexpr int kMaxComponents = 8;

  constexpr WaveVector() = default;
  static WaveVector unit(int j);

  int operator[](int j) const { return k_[j]; }
  void set(int j, int value);
  bool is_zero() const;
  /// First nonzero component is positive.
  bool is_positive() const;
  /// Highest index with a nonzero component, or -1.
  int max_component() const;

  WaveVector operator-() const;
  friend WaveVector operator+(const WaveVector& a, const WaveVector& b);
  friend WaveVector operator-(const WaveVector& a, const WaveVector& b);
  friend bool operator==(const WaveVector&, const WaveVector&) = default;
  friend auto operator<=>(const WaveVector&, const WaveVector&) = default;

 private:
  std::array<std::int16_t, kMaxComponents> k_{};
};

class TrigFunction {
 public:
  struct Coefficients {
    Rational c;
    Rational s;
    bool is_zero() const { return c.is_zero() && s.is_zero(); }
    friend bool operator==(const Coefficients&, const Coefficients&) = default;
  };
  using Terms = std::map<WaveVector, Coefficients>;

  TrigFunction() = default;
  explicit TrigFunction(const Rational& c);
  static TrigFunction cos(const WaveVector& k, const Rational& c = Rational(1));
  static TrigFunction sin(const WaveVector& k, const Rational& s = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  /// Highest coordinate index that occurs, or -1.
  int max_variable() const;

  void add_cos(WaveVector k, const Rational& c);
  void add_sin(WaveVector k, const Rational& s);

  /// Mean value over the torus (the k = 0 coefficient).
  Rational constant_term() const;
  /// f(0)
  Rational eval_at_zero() const;
  /// Substitutes theta_j = c with c = 0 (half = false) or c = tau/2 (half = true);
  /// the result no longer depends on theta_j.
  TrigFunction substitute(int j, bool half) const;

  TrigFunction operator-() const;
  TrigFunction& operator+=(const TrigFunction& o);
  TrigFunction& operator-=(const TrigFunction& o);
  TrigFunction& operator*=(const Rational& r);

  friend TrigFunction operator+(TrigFunction a, const TrigFunction& b) { return a += b; }
  friend TrigFunction operator-(TrigFunction a, const TrigFunction& b) { return a -= b; }
  friend TrigFunction operator*(const TrigFunction& a, const TrigFunction& b);
  friend TrigFunction operator*(TrigFunction a, const Rational& r) { return a *= r; }
  friend TrigFunction operator*(const Rational& r, TrigFunction a) { return a *= r; }
  friend bool operator==(const TrigFunction&, const TrigFunction&) = default;

  friend TrigFunction partial(const TrigFunction& f, int j);

  /// e.g. "1/2 + 3*cos(1,0) - sin(0,2)"; wave vectors list `dims` components
  /// (at least max_variable()+1).
  std::string str(int dims = 0) const;
  /// Inverse of str(): a sum of terms [coeff*]cos(k...), [coeff*]sin(k...) or coeff.
  static TrigFunction parse(std::string_view text);

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const TrigFunction& f);

}  // namespace symcoh
