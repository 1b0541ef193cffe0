#pragma once

// Elements a + b*zeta of Q(zeta) for zeta a primitive 3rd, 4th or 6th root of
// unity. These are the only quadratic cyclotomic fields, and they hold the
// evaluation points q = omega_-, I, omega_+.

#include <cstdlib>
#include <string>

#include "asmlab/error.hpp"
#include "asmlab/mpoly.hpp"
#include "asmlab/rational.hpp"

namespace asmlab {

enum class Root {
  omegaMinus,  ///< (sqrt(3) I - 1)/2, zeta^2 = -zeta - 1, order 3
  i,           ///< I, zeta^2 = -1, order 4
  omegaPlus,   ///< (sqrt(3) I + 1)/2, zeta^2 = zeta - 1, order 6
};

inline int rootOrder(Root r) {
  switch (r) {
    case Root::omegaMinus: return 3;
    case Root::i: return 4;
    case Root::omegaPlus: return 6;
  }
  return 0;
}

inline std::string rootName(Root r) {
  switch (r) {
    case Root::omegaMinus: return "wm";
    case Root::i: return "I";
    case Root::omegaPlus: return "wp";
  }
  return "?";
}

class QuadExt {
 public:
  explicit QuadExt(Root root, Rational a = 0, Rational b = 0) : root_(root), a_(std::move(a)), b_(std::move(b)) {}

  static QuadExt zeta(Root root) { return QuadExt(root, 0, 1); }

  Root root() const { return root_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool isZero() const { return a_ == 0 && b_ == 0; }
  bool isRational() const { return b_ == 0; }

  /// zeta^2 = t*zeta + c.
  static void minimalPoly(Root r, int& t, int& c) {
    switch (r) {
      case Root::omegaMinus: t = -1; c = -1; return;
      case Root::i: t = 0; c = -1; return;
      case Root::omegaPlus: t = 1; c = -1; return;
    }
  }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    x.require(y);
    return QuadExt(x.root_, x.a_ + y.a_, x.b_ + y.b_);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    x.require(y);
    return QuadExt(x.root_, x.a_ - y.a_, x.b_ - y.b_);
  }
  friend QuadExt operator-(const QuadExt& x) { return QuadExt(x.root_, -x.a_, -x.b_); }

  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    x.require(y);
    int t = 0;
    int c = 0;
    minimalPoly(x.root_, t, c);
    Rational bb = x.b_ * y.b_;
    return QuadExt(x.root_, x.a_ * y.a_ + c * bb, x.a_ * y.b_ + x.b_ * y.a_ + t * bb);
  }
  friend QuadExt operator*(const Rational& s, const QuadExt& x) { return QuadExt(x.root_, s * x.a_, s * x.b_); }

  /// Galois conjugate: zeta -> zeta^{-1} (complex conjugation).
  QuadExt conjugate() const {
    int t = 0;
    int c = 0;
    minimalPoly(root_, t, c);
    // zeta + conj(zeta) = t, so conj(a + b zeta) = (a + b t) - b zeta.
    return QuadExt(root_, a_ + b_ * t, -b_);
  }

  /// Field norm x * conj(x), a rational.
  Rational norm() const { return (*this * conjugate()).a(); }

  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    x.require(y);
    Rational n = y.norm();
    if (n == 0) throw Error("QuadExt: division by zero");
    QuadExt num = x * y.conjugate();
    return QuadExt(x.root_, num.a_ / n, num.b_ / n);
  }

  QuadExt pow(long e) const {
    QuadExt base = e >= 0 ? *this : QuadExt(root_, 1) / *this;
    unsigned long k = static_cast<unsigned long>(std::labs(e));
    QuadExt r(root_, 1);
    while (k) {
      if (k & 1u) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.root_ == y.root_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// "3 - 3*I", "-I", "1/2 + wm".
  std::string toString() const {
    if (b_ == 0) return a_.get_str();
    std::string name = rootName(root_);
    Rational mag = abs(b_);
    std::string imag = mag == 1 ? name : mag.get_str() + "*" + name;
    if (a_ == 0) return (b_ < 0 ? "-" : "") + imag;
    return a_.get_str() + (b_ < 0 ? " - " : " + ") + imag;
  }

 private:
  void require(const QuadExt& o) const {
    if (root_ != o.root_) throw RootMismatch("QuadExt: operands over different roots of unity");
  }

  Root root_;
  Rational a_;
  Rational b_;
};

/// Substitutes q by the chosen root of unity. Other variables that occur must
/// be given in `at` (its p/q entries are ignored). Odd p-exponents are
/// half-integer q-powers and have no value at a bare root choice.
inline QuadExt evalRoot(const MPoly& f, Root root, const Assignment& at = {}) {
  const int order = rootOrder(root);
  QuadExt total(root);
  Assignment rest = at;
  rest.p.reset();
  rest.q.reset();
  for (const auto& [m, c] : f.terms()) {
    int ep = m[Var::p];
    if (ep % 2 != 0) throw HalfPowerAtRoot("evalRoot: odd power of p in " + f.toString());
    int k = ((ep / 2) % order + order) % order;
    Monomial others = m;
    others[Var::p] = 0;
    Rational scalar = MPoly::term(c, others).evaluate(rest);
    total = total + scalar * QuadExt::zeta(root).pow(k);
  }
  return total;
}

}  // namespace asmlab
