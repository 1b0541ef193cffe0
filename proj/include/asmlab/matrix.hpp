#pragma once

// Square matrices over an exact commutative ring and their fraction-free
// (Bareiss) determinant.

#include <concepts>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "asmlab/error.hpp"
#include "asmlab/mpoly.hpp"
#include "asmlab/quadext.hpp"
#include "asmlab/rational.hpp"

namespace asmlab {

/// Per-ring hooks the generic algorithms need beyond + - *.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Integer> {
  static bool isZero(const Integer& x) { return x == 0; }
  static Integer zeroLike(const Integer&) { return 0; }
  static Integer exactQuotient(const Integer& a, const Integer& b) {
    Integer r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  static std::string toString(const Integer& x) { return x.get_str(); }
};

template <>
struct RingTraits<Rational> {
  static bool isZero(const Rational& x) { return x == 0; }
  static Rational zeroLike(const Rational&) { return 0; }
  static Rational exactQuotient(const Rational& a, const Rational& b) { return a / b; }
  static std::string toString(const Rational& x) { return x.get_str(); }
};

template <>
struct RingTraits<MPoly> {
  static bool isZero(const MPoly& x) { return x.isZero(); }
  static MPoly zeroLike(const MPoly&) { return {}; }
  static MPoly exactQuotient(const MPoly& a, const MPoly& b) { return exactDiv(a, b); }
  static std::string toString(const MPoly& x) { return x.toString(); }
};

template <>
struct RingTraits<QuadExt> {
  static bool isZero(const QuadExt& x) { return x.isZero(); }
  static QuadExt zeroLike(const QuadExt& x) { return QuadExt(x.root()); }
  static QuadExt exactQuotient(const QuadExt& a, const QuadExt& b) { return a / b; }
  static std::string toString(const QuadExt& x) { return x.toString(); }
};

template <class R>
concept ExactRing = requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { RingTraits<R>::isZero(a) } -> std::convertible_to<bool>;
  { RingTraits<R>::zeroLike(a) } -> std::convertible_to<R>;
  { RingTraits<R>::exactQuotient(a, b) } -> std::convertible_to<R>;
};

template <ExactRing R>
class SqMatrix {
 public:
  SqMatrix(std::size_t n, const R& fill) : n_(n), data_(n * n, fill) {
    if (n == 0) throw UnsupportedSize("SqMatrix: size must be positive");
  }

  /// Builds entry (i, j) from entry(i, j) with 1-based indices.
  template <class F>
    requires std::invocable<F&, int, int>
  static SqMatrix generate(std::size_t n, F&& entry) {
    std::vector<R> data;
    data.reserve(n * n);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) data.push_back(entry(static_cast<int>(i), static_cast<int>(j)));
    return SqMatrix(n, std::move(data));
  }

  static SqMatrix fromRows(const std::vector<std::vector<R>>& rows) {
    const std::size_t n = rows.size();
    std::vector<R> data;
    data.reserve(n * n);
    for (const auto& row : rows) {
      if (row.size() != n) throw UnsupportedSize("SqMatrix: rows must form a square");
      data.insert(data.end(), row.begin(), row.end());
    }
    return SqMatrix(n, std::move(data));
  }

  std::size_t size() const { return n_; }

  /// 0-based access.
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  R& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  void swapRows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < n_; ++j) std::swap(data_[a * n_ + j], data_[b * n_ + j]);
  }

  /// Entrywise image under f, possibly into another ring.
  template <class F>
  auto map(F&& f) const {
    using S = std::decay_t<std::invoke_result_t<F&, const R&>>;
    std::vector<S> out;
    out.reserve(data_.size());
    for (const auto& x : data_) out.push_back(f(x));
    return SqMatrix<S>(n_, std::move(out));
  }

  std::vector<std::vector<std::string>> toStrings() const {
    std::vector<std::vector<std::string>> rows(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) rows[i].push_back(RingTraits<R>::toString((*this)(i, j)));
    return rows;
  }

  friend bool operator==(const SqMatrix& a, const SqMatrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

 private:
  template <ExactRing>
  friend class SqMatrix;

  SqMatrix(std::size_t n, std::vector<R> data) : n_(n), data_(std::move(data)) {
    if (n == 0) throw UnsupportedSize("SqMatrix: size must be positive");
  }

  std::size_t n_;
  std::vector<R> data_;
};

/// Determinant by fraction-free Gaussian elimination. Every division is exact
/// (Sylvester's identity); a zero pivot is replaced by a row swap below it and a
/// column without any nonzero pivot candidate gives 0.
template <ExactRing R>
R bareissDet(SqMatrix<R> m) {
  using T = RingTraits<R>;
  const std::size_t n = m.size();
  bool negate = false;
  R previous = m(0, 0);
  bool havePrevious = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (T::isZero(m(k, k))) {
      std::size_t r = k + 1;
      while (r < n && T::isZero(m(r, k))) ++r;
      if (r == n) return T::zeroLike(m(0, 0));
      m.swapRows(k, r);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = havePrevious ? T::exactQuotient(v, previous) : std::move(v);
      }
      m(i, k) = T::zeroLike(m(0, 0));
    }
    previous = m(k, k);
    havePrevious = true;
  }
  R det = m(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace asmlab
