#pragma once

// Multivariate Laurent polynomials over the rationals in the four variables
// (p, z, rho, tau). The Laurent variable is p with q = p^2, so q-powers are
// even p-powers and half-integer q-powers are odd p-powers. Only p may carry
// negative exponents.

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asmlab/error.hpp"
#include "asmlab/rational.hpp"

namespace asmlab {

enum class Var : std::size_t { p = 0, z = 1, rho = 2, tau = 3 };

inline constexpr std::size_t kNumVars = 4;
inline constexpr std::array<std::string_view, kNumVars> kVarNames{"p", "z", "rho", "tau"};

/// Exponent vector. The defaulted ordering is lexicographic on (p, z, rho, tau),
/// which is translation invariant and therefore usable for leading terms.
struct Monomial {
  std::array<int, kNumVars> exp{};

  int operator[](Var v) const { return exp[static_cast<std::size_t>(v)]; }
  int& operator[](Var v) { return exp[static_cast<std::size_t>(v)]; }

  static Monomial of(Var v, int e) {
    Monomial m;
    m[v] = e;
    return m;
  }

  bool isOne() const {
    return std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i) r.exp[i] = a.exp[i] + b.exp[i];
    return r;
  }
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i) r.exp[i] = a.exp[i] - b.exp[i];
    return r;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

namespace detail {

// 0, 1, -1, 2, -2, ... -> 0, 1, 2, 3, 4, ...
inline int zigzag(int e) { return e > 0 ? 2 * e - 1 : -2 * e; }

/// Serialization order: total absolute degree, then lexicographic on the
/// zigzag-encoded exponents of (p, z, rho, tau).
inline bool canonicalLess(const Monomial& a, const Monomial& b) {
  int ga = 0;
  int gb = 0;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    ga += std::abs(a.exp[i]);
    gb += std::abs(b.exp[i]);
  }
  if (ga != gb) return ga < gb;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    int za = zigzag(a.exp[i]);
    int zb = zigzag(b.exp[i]);
    if (za != zb) return za < zb;
  }
  return false;
}

}  // namespace detail

/// Values for MPoly::evaluate. q may stand in for p when every p-exponent is even.
struct Assignment {
  std::optional<Rational> p;
  std::optional<Rational> q;
  std::optional<Rational> z;
  std::optional<Rational> rho;
  std::optional<Rational> tau;
};

class MPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  MPoly() = default;
  MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MPoly(int c) : MPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)
  MPoly(const Integer& c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Monomial{}, c);
  }

  static MPoly term(const Rational& c, const Monomial& m) {
    MPoly r;
    if (c != 0) {
      checkExponents(m);
      r.terms_.emplace(m, c);
    }
    return r;
  }
  static MPoly variable(Var v, int e = 1) { return term(1, Monomial::of(v, e)); }
  /// q^e = p^{2e}.
  static MPoly qPower(int e) { return variable(Var::p, 2 * e); }

  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.isOne()); }
  Rational constantValue() const { return coefficient(Monomial{}); }

  /// Smallest/largest exponent of v over all terms; 0 for the zero polynomial.
  int minExponent(Var v) const {
    if (terms_.empty()) return 0;
    int m = terms_.begin()->first[v];
    for (const auto& [mono, c] : terms_) m = std::min(m, mono[v]);
    return m;
  }
  int maxExponent(Var v) const {
    if (terms_.empty()) return 0;
    int m = terms_.begin()->first[v];
    for (const auto& [mono, c] : terms_) m = std::max(m, mono[v]);
    return m;
  }

  bool dependsOn(Var v) const {
    return std::any_of(terms_.begin(), terms_.end(), [v](const auto& t) { return t.first[v] != 0; });
  }

  bool hasIntegerCoefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return isIntegral(t.second); });
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, -c);
    return *this;
  }
  MPoly& operator*=(const MPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(MPoly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.isZero() || b.isZero()) return {};
    const MPoly& big = a.size() >= b.size() ? a : b;
    const MPoly& small = a.size() >= b.size() ? b : a;
    MPoly r;
    Rational prod;
    for (const auto& [ms, cs] : small.terms_) {
      auto hint = r.terms_.begin();
      for (const auto& [mb, cb] : big.terms_) {
        prod = cs * cb;
        Monomial m = ms * mb;
        hint = r.terms_.lower_bound(m);
        if (hint != r.terms_.end() && hint->first == m) {
          hint->second += prod;
          if (hint->second == 0) hint = r.terms_.erase(hint);
        } else {
          hint = r.terms_.emplace_hint(hint, m, prod);
        }
      }
    }
    return r;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  MPoly pow(unsigned e) const {
    MPoly result(1);
    MPoly base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  MPoly scaled(const Rational& s) const {
    if (s == 0) return {};
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
  }

  /// Multiplies by the monomial m (any exponents allowed for p).
  MPoly shifted(const Monomial& m) const {
    MPoly r;
    for (const auto& [mono, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mono * m, c);
    checkExponents(r);
    return r;
  }

  /// p -> 1/p.
  MPoly invertP() const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
      Monomial inv = m;
      inv[Var::p] = -m[Var::p];
      r.terms_.emplace(inv, c);
    }
    return r;
  }

  /// Replaces v by value. Negative exponents of v require value to be a monomial.
  MPoly substitute(Var v, const MPoly& value) const {
    std::map<int, MPoly> powers;
    auto powerOf = [&](int e) -> const MPoly& {
      auto it = powers.find(e);
      if (it != powers.end()) return it->second;
      MPoly pw;
      if (e >= 0) {
        pw = value.pow(static_cast<unsigned>(e));
      } else {
        if (value.size() != 1) throw Error("substitute: negative exponent needs a monomial value");
        const auto& [m, c] = *value.terms_.begin();
        Monomial inv;
        for (std::size_t i = 0; i < kNumVars; ++i) inv.exp[i] = -m.exp[i];
        pw = term(Rational(1) / c, inv).pow(static_cast<unsigned>(-e));
      }
      return powers.emplace(e, std::move(pw)).first->second;
    };
    MPoly r;
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      int e = rest[v];
      rest[v] = 0;
      r += powerOf(e).shifted(rest).scaled(c);
    }
    return r;
  }

  /// Fixes v at a rational value, removing it from the polynomial.
  MPoly specialize(Var v, const Rational& value) const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      int e = rest[v];
      rest[v] = 0;
      if (e != 0 && value == 0) {
        if (e < 0) throw DegenerateParams("specialize: negative power at zero");
        continue;
      }
      r.addTerm(rest, c * rpow(value, e));
    }
    return r;
  }

  /// Full evaluation; every variable that occurs must be assigned.
  Rational evaluate(const Assignment& at) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      int ep = m[Var::p];
      if (ep != 0) {
        if (at.p) {
          t *= powOrThrow(*at.p, ep);
        } else if (at.q && ep % 2 == 0) {
          t *= powOrThrow(*at.q, ep / 2);
        } else {
          throw Error("evaluate: p is unassigned");
        }
      }
      t *= component(at.z, m[Var::z], "z");
      t *= component(at.rho, m[Var::rho], "rho");
      t *= component(at.tau, m[Var::tau], "tau");
      total += t;
    }
    return total;
  }

  /// True when the coefficient of p^e equals that of p^{-e} for every monomial.
  bool isPalindromicInP() const {
    for (const auto& [m, c] : terms_) {
      Monomial mirror = m;
      mirror[Var::p] = -m[Var::p];
      if (coefficient(mirror) != c) return false;
    }
    return true;
  }

  /// Terms in serialization order.
  std::vector<std::pair<Monomial, Rational>> canonicalTerms() const {
    std::vector<std::pair<Monomial, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return detail::canonicalLess(a.first, b.first); });
    return v;
  }

  /// Canonical text, e.g. "1 + p^2 + p^-2" or "rho*tau^2 + rho^2*tau".
  std::string toString() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : canonicalTerms()) {
      bool negative = c < 0;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      Rational mag = abs(c);
      std::string mono = monomialString(m);
      if (mono.empty()) {
        out += mag.get_str();
      } else if (mag == 1) {
        out += mono;
      } else {
        out += mag.get_str() + "*" + mono;
      }
    }
    return out;
  }

  /// Inverse of toString. Also accepts `q^e` as shorthand for p^{2e}.
  static MPoly parse(std::string_view text);

 private:
  static void checkExponents(const Monomial& m) {
    for (std::size_t i = 1; i < kNumVars; ++i)
      if (m.exp[i] < 0) throw Error("negative exponent for " + std::string(kVarNames[i]));
  }
  static void checkExponents(const MPoly& f) {
    for (const auto& [m, c] : f.terms_) checkExponents(m);
  }

  static Rational powOrThrow(const Rational& x, int e) {
    if (x == 0 && e < 0) throw DegenerateParams("evaluate: negative power of zero");
    return rpow(x, e);
  }
  static Rational component(const std::optional<Rational>& x, int e, const char* name) {
    if (e == 0) return 1;
    if (!x) throw Error(std::string("evaluate: ") + name + " is unassigned");
    return rpow(*x, e);
  }

  static std::string monomialString(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      int e = m.exp[i];
      if (e == 0) continue;
      if (!s.empty()) s += "*";
      s += kVarNames[i];
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

  void addTerm(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend MPoly exactDiv(const MPoly& f, const MPoly& g);
  friend std::optional<MPoly> tryExactDiv(const MPoly& f, const MPoly& g);

  TermMap terms_;
};

inline std::optional<MPoly> tryExactDiv(const MPoly& f, const MPoly& g) {
  if (g.isZero()) throw Error("exactDiv: division by zero");
  if (f.isZero()) return MPoly{};
  // If f = g*h then min_p(h) = min_p(f) - min_p(g); the other exponents of h
  // are nonnegative. Any quotient term outside that box certifies failure and
  // bounds the descent.
  const int pFloor = f.minExponent(Var::p) - g.minExponent(Var::p);
  const auto& [lead, leadCoef] = *g.terms_.rbegin();
  MPoly rem = f;
  MPoly quot;
  while (!rem.isZero()) {
    const auto& [top, topCoef] = *rem.terms_.rbegin();
    Monomial m = top / lead;
    if (m[Var::p] < pFloor) return std::nullopt;
    for (std::size_t i = 1; i < kNumVars; ++i)
      if (m.exp[i] < 0) return std::nullopt;
    Rational c = topCoef / leadCoef;
    quot.terms_.emplace(m, c);
    for (const auto& [gm, gc] : g.terms_) rem.addTerm(gm * m, -c * gc);
  }
  return quot;
}

/// h with f = g*h in the Laurent ring; throws NotDivisible otherwise.
inline MPoly exactDiv(const MPoly& f, const MPoly& g) {
  auto h = tryExactDiv(f, g);
  if (!h) throw NotDivisible("exactDiv: " + g.toString() + " does not divide " + f.toString());
  return *std::move(h);
}

/// Balanced q-integer [k] = (q^k - q^-k)/(q - q^-1), built without division.
inline MPoly qint(int k) {
  if (k == 0) return {};
  if (k < 0) return -qint(-k);
  MPoly r;
  for (int j = 0; j < k; ++j) r += MPoly::qPower(k - 1 - 2 * j);
  return r;
}

inline MPoly operator*(const Rational& s, const MPoly& f) { return f.scaled(s); }

inline MPoly MPoly::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skipSpace = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("polynomial parse error at " + std::to_string(pos) + ": " + why);
  };
  auto readInt = [&]() -> std::string {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw fail("expected integer");
    return std::string(text.substr(start, pos - start));
  };

  MPoly result;
  skipSpace();
  if (text.substr(pos) == "0") return result;
  bool firstTerm = true;
  while (true) {
    skipSpace();
    if (pos >= text.size()) {
      if (firstTerm) throw fail("empty input");
      break;
    }
    Rational sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skipSpace();
    } else if (!firstTerm) {
      throw fail("expected + or -");
    }
    firstTerm = false;

    Rational coef = 1;
    Monomial mono;
    bool haveFactor = false;
    while (true) {
      skipSpace();
      if (pos >= text.size()) break;
      char ch = text[pos];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string num = readInt();
        std::string den = "1";
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          den = readInt();
        }
        coef *= parseRational(num + "/" + den);
      } else if (std::isalpha(static_cast<unsigned char>(ch))) {
        std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string_view name = text.substr(start, pos - start);
        int e = 1;
        skipSpace();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skipSpace();
          e = std::stoi(readInt());
        }
        if (name == "q") {
          mono[Var::p] += 2 * e;
        } else {
          auto it = std::find(kVarNames.begin(), kVarNames.end(), name);
          if (it == kVarNames.end()) throw fail("unknown variable " + std::string(name));
          mono.exp[static_cast<std::size_t>(it - kVarNames.begin())] += e;
        }
      } else {
        throw fail(std::string("unexpected '") + ch + "'");
      }
      haveFactor = true;
      skipSpace();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!haveFactor) throw fail("empty term");
    result += term(sign * coef, mono);
  }
  return result;
}

}  // namespace asmlab
