#include "symcoh/trig.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <vector>

#include "symcoh/error.hpp"

namespace symcoh {

WaveVector WaveVector::unit(int j) {
  WaveVector k;
  k.set(j, 1);
  return k;
}

void WaveVector::set(int j, int value) {
  if (j < 0 || j >= kMaxComponents) throw DomainError("wave vector index out of range");
  if (value < std::numeric_limits<std::int16_t>::min() || value > std::numeric_limits<std::int16_t>::max()) {
    throw DomainError("wave vector component out of range");
  }
  k_[j] = static_cast<std::int16_t>(value);
}

bool WaveVector::is_zero() const {
  for (auto v : k_) {
    if (v != 0) return false;
  }
  return true;
}

bool WaveVector::is_positive() const {
  for (auto v : k_) {
    if (v != 0) return v > 0;
  }
  return false;
}

int WaveVector::max_component() const {
  for (int j = kMaxComponents - 1; j >= 0; --j) {
    if (k_[j] != 0) return j;
  }
  return -1;
}

WaveVector WaveVector::operator-() const {
  WaveVector out;
  for (int j = 0; j < kMaxComponents; ++j) out.set(j, -k_[j]);
  return out;
}

WaveVector operator+(const WaveVector& a, const WaveVector& b) {
  WaveVector out;
  for (int j = 0; j < WaveVector::kMaxComponents; ++j) out.set(j, a.k_[j] + b.k_[j]);
  return out;
}

WaveVector operator-(const WaveVector& a, const WaveVector& b) {
  WaveVector out;
  for (int j = 0; j < WaveVector::kMaxComponents; ++j) out.set(j, a.k_[j] - b.k_[j]);
  return out;
}

// ---------------------------------------------------------------------------

TrigFunction::TrigFunction(const Rational& c) { add_cos(WaveVector{}, c); }

TrigFunction TrigFunction::cos(const WaveVector& k, const Rational& c) {
  TrigFunction f;
  f.add_cos(k, c);
  return f;
}

TrigFunction TrigFunction::sin(const WaveVector& k, const Rational& s) {
  TrigFunction f;
  f.add_sin(k, s);
  return f;
}

int TrigFunction::max_variable() const {
  int v = -1;
  for (const auto& [k, coeffs] : terms_) v = std::max(v, k.max_component());
  return v;
}

void TrigFunction::add_cos(WaveVector k, const Rational& c) {
  if (c.is_zero()) return;
  if (!k.is_zero() && !k.is_positive()) k = -k;
  auto [it, inserted] = terms_.try_emplace(k, Coefficients{c, Rational(0)});
  if (!inserted) {
    it->second.c += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TrigFunction::add_sin(WaveVector k, const Rational& s) {
  if (s.is_zero() || k.is_zero()) return;
  Rational v = s;
  if (!k.is_positive()) {
    k = -k;
    v = -v;
  }
  auto [it, inserted] = terms_.try_emplace(k, Coefficients{Rational(0), v});
  if (!inserted) {
    it->second.s += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational TrigFunction::constant_term() const {
  auto it = terms_.find(WaveVector{});
  return it == terms_.end() ? Rational(0) : it->second.c;
}

Rational TrigFunction::eval_at_zero() const {
  Rational out;
  for (const auto& [k, coeffs] : terms_) out += coeffs.c;
  return out;
}

TrigFunction TrigFunction::substitute(int j, bool half) const {
  TrigFunction out;
  for (const auto& [k, coeffs] : terms_) {
    // cos(k.theta) with theta_j = tau/2 picks up (-1)^{k_j}; likewise sin.
    const bool flip = half && (k[j] % 2 != 0);
    WaveVector rest = k;
    rest.set(j, 0);
    out.add_cos(rest, flip ? -coeffs.c : coeffs.c);
    out.add_sin(rest, flip ? -coeffs.s : coeffs.s);
  }
  return out;
}

TrigFunction TrigFunction::operator-() const {
  TrigFunction out = *this;
  for (auto& [k, coeffs] : out.terms_) {
    coeffs.c = -coeffs.c;
    coeffs.s = -coeffs.s;
  }
  return out;
}

TrigFunction& TrigFunction::operator+=(const TrigFunction& o) {
  for (const auto& [k, coeffs] : o.terms_) {
    add_cos(k, coeffs.c);
    add_sin(k, coeffs.s);
  }
  return *this;
}

TrigFunction& TrigFunction::operator-=(const TrigFunction& o) {
  for (const auto& [k, coeffs] : o.terms_) {
    add_cos(k, -coeffs.c);
    add_sin(k, -coeffs.s);
  }
  return *this;
}

TrigFunction& TrigFunction::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, coeffs] : terms_) {
    coeffs.c *= r;
    coeffs.s *= r;
  }
  return *this;
}

TrigFunction operator*(const TrigFunction& a, const TrigFunction& b) {
  static const Rational half(1, 2);
  TrigFunction out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const WaveVector sum = ka + kb;
      const WaveVector diff = ka - kb;
      // cos a cos b = (cos(a-b) + cos(a+b))/2
      // sin a sin b = (cos(a-b) - cos(a+b))/2
      // cos a sin b = (sin(a+b) - sin(a-b))/2
      // sin a cos b = (sin(a+b) + sin(a-b))/2
      const Rational cc = ca.c * cb.c * half;
      const Rational ss = ca.s * cb.s * half;
      const Rational cs = ca.c * cb.s * half;
      const Rational sc = ca.s * cb.c * half;
      out.add_cos(diff, cc + ss);
      out.add_cos(sum, cc - ss);
      out.add_sin(sum, cs + sc);
      out.add_sin(diff, sc - cs);
    }
  }
  return out;
}

TrigFunction partial(const TrigFunction& f, int j) {
  TrigFunction out;
  for (const auto& [k, coeffs] : f.terms_) {
    const int kj = k[j];
    if (kj == 0) continue;
    out.add_sin(k, -coeffs.c * Rational(kj));
    out.add_cos(k, coeffs.s * Rational(kj));
  }
  return out;
}

namespace {

std::string vector_str(const WaveVector& k, int dims) {
  std::string out = "(";
  for (int j = 0; j < dims; ++j) {
    if (j) out += ",";
    out += std::to_string(k[j]);
  }
  return out + ")";
}

void emit(std::ostringstream& os, bool& first, const Rational& c, const std::string& tail) {
  if (c.is_zero()) return;
  const bool neg = c.sign() < 0;
  if (first) {
    if (neg) os << "-";
  } else {
    os << (neg ? " - " : " + ");
  }
  first = false;
  const Rational mag = neg ? -c : c;
  if (tail.empty()) {
    os << mag;
  } else {
    if (mag != Rational(1)) os << mag << "*";
    os << tail;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  TrigFunction parse() {
    TrigFunction f = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("trig expression: " + what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  TrigFunction expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    TrigFunction out = term();
    if (negate) out = -out;
    while (true) {
      if (accept('+')) out += term();
      else if (accept('-')) out -= term();
      else return out;
    }
  }

  TrigFunction term() {
    TrigFunction out = factor();
    while (accept('*')) out = out * factor();
    return out;
  }

  TrigFunction factor() {
    skip();
    if (accept('(')) {
      TrigFunction inner = expr();
      expect(')');
      return inner;
    }
    if (s_.substr(pos_, 3) == "cos" || s_.substr(pos_, 3) == "sin") {
      const bool is_cos = s_[pos_] == 'c';
      pos_ += 3;
      expect('(');
      WaveVector k;
      int j = 0;
      do {
        if (j >= WaveVector::kMaxComponents) fail("too many wave vector components");
        k.set(j++, integer());
      } while (accept(','));
      expect(')');
      return is_cos ? TrigFunction::cos(k) : TrigFunction::sin(k);
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
    if (start == pos_) fail("expected a number, cos(...) or sin(...)");
    return TrigFunction(Rational::parse(s_.substr(start, pos_ - start)));
  }

  int integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 32767) fail("wave vector component too large");
    }
    if (start == pos_) fail("expected an integer");
    return static_cast<int>(neg ? -v : v);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string TrigFunction::str(int dims) const {
  if (terms_.empty()) return "0";
  dims = std::max(dims, max_variable() + 1);
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, coeffs] : terms_) {
    if (k.is_zero()) {
      emit(os, first, coeffs.c, "");
      continue;
    }
    emit(os, first, coeffs.c, "cos" + vector_str(k, dims));
    emit(os, first, coeffs.s, "sin" + vector_str(k, dims));
  }
  return os.str();
}

TrigFunction TrigFunction::parse(std::string_view text) { return Parser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const TrigFunction& f) { return os << f.str(); }

}  // namespace symcoh
