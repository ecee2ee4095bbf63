#pragma once

// Sparse exterior algebra over an exact coefficient ring.
//
// A form is a map from basis monomials e_I = e_{i1} ^ ... ^ e_{ik}
// (i1 < ... < ik, zero-based generator positions) to coefficients. Signs are
// pushed into the coefficients when terms are built, so two forms are equal
// iff their term maps are equal.

#include <bit>
#include <compare>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "symcoh/error.hpp"
#include "symcoh/rational.hpp"

namespace symcoh {

/// Exact commutative ring with decidable equality, acted on by the rationals.
template <class S>
concept Scalar = std::regular<S> && requires(const S a, const S b, const Rational r) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a * r } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a.is_zero() } -> std::convertible_to<bool>;
  S(r);
};

/// Strictly increasing set of generator positions, stored as a bit set.
class MultiIndex {
 public:
  static constexpr int kMaxGenerators = 32;

  constexpr MultiIndex() = default;

  static constexpr MultiIndex from_bits(std::uint32_t bits) {
    MultiIndex m;
    m.bits_ = bits;
    return m;
  }

  /// Zero-based, strictly increasing positions.
  static MultiIndex of(std::initializer_list<int> positions) {
    return of(std::span<const int>(positions.begin(), positions.size()));
  }
  static MultiIndex of(std::span<const int> positions) {
    MultiIndex m;
    int prev = -1;
    for (int p : positions) {
      if (p <= prev || p >= kMaxGenerators) {
        throw DomainError("multi-index positions must be strictly increasing and < 32");
      }
      m.bits_ |= (1u << p);
      prev = p;
    }
    return m;
  }
  static constexpr MultiIndex single(int position) { return from_bits(1u << position); }
  /// {0, 1, ..., count-1}
  static constexpr MultiIndex full(int count) {
    return from_bits(count >= 32 ? ~0u : ((1u << count) - 1u));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int degree() const { return std::popcount(bits_); }
  constexpr bool contains(int p) const { return (bits_ >> p) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int max_position() const { return bits_ == 0 ? -1 : 31 - std::countl_zero(bits_); }

  std::vector<int> positions() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  constexpr MultiIndex without(int p) const { return from_bits(bits_ & ~(1u << p)); }
  constexpr MultiIndex with(int p) const { return from_bits(bits_ | (1u << p)); }
  /// Number of members strictly below position p.
  constexpr int count_below(int p) const { return std::popcount(bits_ & ((1u << p) - 1u)); }

  friend constexpr bool operator==(MultiIndex a, MultiIndex b) = default;
  /// Degree first, then lexicographic on the sorted position sequence.
  friend constexpr std::strong_ordering operator<=>(MultiIndex a, MultiIndex b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return reverse(b.bits_) <=> reverse(a.bits_);
  }

 private:
  static constexpr std::uint32_t reverse(std::uint32_t v) {
    std::uint32_t r = 0;
    for (int i = 0; i < 32; ++i) r |= ((v >> i) & 1u) << (31 - i);
    return r;
  }

  std::uint32_t bits_ = 0;
};

/// Sign of e_a ^ e_b relative to e_{a|b}; 0 when a and b share a generator.
constexpr int wedge_sign(MultiIndex a, MultiIndex b) {
  if ((a.bits() & b.bits()) != 0) return 0;
  int inversions = 0;
  for (std::uint32_t bb = b.bits(); bb != 0; bb &= bb - 1) {
    const int j = std::countr_zero(bb);
    inversions += std::popcount(a.bits() >> j);
  }
  return (inversions & 1) ? -1 : 1;
}

/// Sign of the permutation sorting an arbitrary sequence of distinct positions; 0 on repeats.
inline int sort_sign(std::span<const int> seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
      if (seq[i] > seq[j]) ++inversions;
    }
  }
  return (inversions & 1) ? -1 : 1;
}

template <Scalar S>
class GradedForm {
 public:
  using Terms = std::map<MultiIndex, S>;

  GradedForm() = default;
  explicit GradedForm(int generators) : generators_(check_generators(generators)) {}

  static GradedForm constant(int generators, S c) {
    GradedForm f(generators);
    f.add_term(MultiIndex{}, std::move(c));
    return f;
  }
  static GradedForm monomial(int generators, MultiIndex idx, S c = S(Rational(1))) {
    GradedForm f(generators);
    f.add_term(idx, std::move(c));
    return f;
  }
  /// e_position
  static GradedForm generator(int generators, int position) {
    return monomial(generators, MultiIndex::single(position));
  }

  int generators() const { return generators_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Accumulates c into the coefficient of idx, pruning zeros.
  void add_term(MultiIndex idx, const S& c) {
    if (idx.max_position() >= generators_) {
      throw ContextError("multi-index refers to a generator outside the context");
    }
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(idx, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  S coefficient_of(MultiIndex idx) const {
    if (idx.max_position() >= generators_) {
      throw ContextError("multi-index refers to a generator outside the context");
    }
    auto it = terms_.find(idx);
    return it == terms_.end() ? S{} : it->second;
  }

  std::set<int> degree_support() const {
    std::set<int> out;
    for (const auto& [idx, c] : terms_) out.insert(idx.degree());
    return out;
  }

  /// True for the zero form and for forms whose terms all have degree k.
  bool is_homogeneous(int k) const {
    for (const auto& [idx, c] : terms_) {
      if (idx.degree() != k) return false;
    }
    return true;
  }

  /// Component of degree k.
  GradedForm part(int k) const {
    GradedForm out(generators_);
    for (const auto& [idx, c] : terms_) {
      if (idx.degree() == k) out.terms_.emplace(idx, c);
    }
    return out;
  }

  template <class F>
  auto map_coefficients(F&& fn) const {
    using T = std::decay_t<decltype(fn(std::declval<const S&>()))>;
    GradedForm<T> out(generators_);
    for (const auto& [idx, c] : terms_) out.add_term(idx, fn(c));
    return out;
  }

  GradedForm operator-() const {
    GradedForm out(generators_);
    for (const auto& [idx, c] : terms_) out.terms_.emplace(idx, -c);
    return out;
  }
  GradedForm& operator+=(const GradedForm& o) {
    require_same_context(o);
    for (const auto& [idx, c] : o.terms_) add_term(idx, c);
    return *this;
  }
  GradedForm& operator-=(const GradedForm& o) {
    require_same_context(o);
    for (const auto& [idx, c] : o.terms_) add_term(idx, -c);
    return *this;
  }
  GradedForm& operator*=(const S& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    Terms scaled;
    for (auto& [idx, c] : terms_) {
      S v = c * s;
      if (!v.is_zero()) scaled.emplace(idx, std::move(v));
    }
    terms_ = std::move(scaled);
    return *this;
  }

  friend GradedForm operator+(GradedForm a, const GradedForm& b) { return a += b; }
  friend GradedForm operator-(GradedForm a, const GradedForm& b) { return a -= b; }
  friend GradedForm operator*(GradedForm a, const S& s) { return a *= s; }
  friend GradedForm operator*(const S& s, GradedForm a) { return a *= s; }

  friend bool operator==(const GradedForm& a, const GradedForm& b) {
    return a.generators_ == b.generators_ && a.terms_ == b.terms_;
  }

  void require_same_context(const GradedForm& o) const {
    if (generators_ != o.generators_) {
      throw ContextError("forms over different generator sets (" + std::to_string(generators_) +
                         " vs " + std::to_string(o.generators_) + ")");
    }
  }

 private:
  static int check_generators(int g) {
    if (g < 0 || g > MultiIndex::kMaxGenerators) throw ContextError("generator count out of range");
    return g;
  }

  int generators_ = 0;
  Terms terms_;
};

template <Scalar S>
GradedForm<S> wedge(const GradedForm<S>& a, const GradedForm<S>& b) {
  a.require_same_context(b);
  GradedForm<S> out(a.generators());
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      const int s = wedge_sign(ia, ib);
      if (s == 0) continue;
      const MultiIndex idx = MultiIndex::from_bits(ia.bits() | ib.bits());
      out.add_term(idx, s > 0 ? ca * cb : -(ca * cb));
    }
  }
  return out;
}

/// Contraction i_v with a vector given by its components in the generator-dual basis.
/// Antiderivation of degree -1.
template <Scalar S>
GradedForm<S> interior(std::span<const S> v, const GradedForm<S>& a) {
  if (static_cast<int>(v.size()) != a.generators()) {
    throw ContextError("vector dimension does not match the form's generator count");
  }
  GradedForm<S> out(a.generators());
  for (const auto& [idx, c] : a.terms()) {
    for (std::uint32_t b = idx.bits(); b != 0; b &= b - 1) {
      const int j = std::countr_zero(b);
      if (v[j].is_zero()) continue;
      S term = v[j] * c;
      if (idx.count_below(j) & 1) term = -term;
      out.add_term(idx.without(j), term);
    }
  }
  return out;
}

template <Scalar S>
GradedForm<S> interior(const std::vector<S>& v, const GradedForm<S>& a) {
  return interior(std::span<const S>(v), a);
}

/// i_{d/dx_position}
template <Scalar S>
GradedForm<S> interior_basis(int position, const GradedForm<S>& a) {
  GradedForm<S> out(a.generators());
  for (const auto& [idx, c] : a.terms()) {
    if (!idx.contains(position)) continue;
    out.add_term(idx.without(position), (idx.count_below(position) & 1) ? -c : c);
  }
  return out;
}

template <Scalar S>
S coefficient_of(const GradedForm<S>& a, MultiIndex idx) {
  return a.coefficient_of(idx);
}

/// a ^ a ^ ... (k factors); k = 0 gives the unit.
template <Scalar S>
GradedForm<S> wedge_power(const GradedForm<S>& a, int k) {
  GradedForm<S> out = GradedForm<S>::constant(a.generators(), S(Rational(1)));
  for (int i = 0; i < k; ++i) out = wedge(out, a);
  return out;
}

/// Rational form promoted to coefficient ring S.
template <Scalar S>
GradedForm<S> promote(const GradedForm<Rational>& a) {
  return a.map_coefficients([](const Rational& r) { return S(r); });
}

/// Human-readable rendering, e.g. "(3)*e1*e2 + -e3". Positions are printed 1-based
/// unless names are supplied.
template <Scalar S>
std::string to_string(const GradedForm<S>& a, const std::vector<std::string>& names = {}) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const S one(Rational(1));
  for (const auto& [idx, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    const bool scalar = idx.empty();
    bool lead = true;
    if (c == one && !scalar) {
      // unit coefficient is implicit
    } else if (c == -one && !scalar) {
      os << "-";
    } else {
      os << "(" << c << ")";
      lead = false;
    }
    for (int p : idx.positions()) {
      if (!lead) os << "*";
      lead = false;
      if (p < static_cast<int>(names.size())) {
        os << names[p];
      } else {
        os << "e" << (p + 1);
      }
    }
  }
  return os.str();
}

template <Scalar S>
std::ostream& operator<<(std::ostream& os, const GradedForm<S>& a) {
  return os << to_string(a);
}

}  // namespace symcoh
