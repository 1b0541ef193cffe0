#pragma once

// Elementary and complete homogeneous symmetric functions of rational
// specializations, and the rectangular-product factorization of the
// Cauchy-type double kernel determinant.

#include <vector>

#include "asmlab/error.hpp"
#include "asmlab/icemodel.hpp"
#include "asmlab/matrix.hpp"
#include "asmlab/rational.hpp"

namespace asmlab {

using VarList = std::vector<Rational>;

/// e_k(u): coefficient of t^k in prod (1 + t u_j).
inline Rational elemSym(const VarList& u, int k) {
  if (k < 0 || k > static_cast<int>(u.size())) return 0;
  std::vector<Rational> e(k + 1, Rational(0));
  e[0] = 1;
  for (const auto& x : u)
    for (int d = k; d >= 1; --d) e[d] += x * e[d - 1];
  return e[k];
}

/// h_k(u): coefficient of t^k in prod 1/(1 - t u_j).
inline Rational homSym(const VarList& u, int k) {
  if (k < 0) return 0;
  std::vector<Rational> h(k + 1, Rational(0));
  h[0] = 1;
  for (const auto& x : u)
    for (int d = 1; d <= k; ++d) h[d] += x * h[d - 1];
  return h[k];
}

/// e_k of {phi q, q, ..., q, psi q} (n entries) in closed form:
/// [C(n-2,k) + (phi + psi) C(n-2,k-1) + phi psi C(n-2,k-2)] q^k.
inline Rational specializedElem(int n, int k, const Rational& phi, const Rational& psi, const Rational& q) {
  if (n < 2) throw UnsupportedSize("specializedElem: n must be at least 2");
  Rational bracket = Rational(binom(n - 2, k)) + (phi + psi) * Rational(binom(n - 2, k - 1)) +
                     phi * psi * Rational(binom(n - 2, k - 2));
  return bracket * rpow(q, k);
}

namespace detail {

inline Rational vandermonde(const VarList& x) {
  Rational r = 1;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) r *= x[i] - x[j];
  return r;
}

// (q^a - q^b)/(q - 1) as a finite geometric sum; no division by q - 1.
inline Rational geometricDifference(const Rational& q, int a, int b) {
  if (a == b) return 0;
  if (a < b) return -geometricDifference(q, b, a);
  Rational s = 0;
  Rational term = rpow(q, b);
  for (int t = b; t < a; ++t) {
    s += term;
    term *= q;
  }
  return s;
}

}  // namespace detail

/// (-1)^{n(n-1)/2} det(1/((v_i - u_j)(q v_i - u_j))) prod (v_i - u_j)(q v_i - u_j) / (Delta(V) Delta(U)).
inline Rational fqDirect(const VarList& v, const VarList& u, const Rational& q) {
  const int n = static_cast<int>(v.size());
  if (n == 0 || u.size() != v.size()) throw DegenerateParams("fqDirect: need |v| = |u| >= 1");
  std::vector<std::vector<Rational>> kernel(n, std::vector<Rational>(n));
  Rational prod = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational k = (v[i] - u[j]) * (q * v[i] - u[j]);
      if (k == 0) throw DegenerateParams("fqDirect: vanishing kernel factor");
      prod *= k;
      kernel[i][j] = 1 / k;
    }
  }
  Rational vand = detail::vandermonde(v) * detail::vandermonde(u);
  if (vand == 0) throw DegenerateParams("fqDirect: repeated variables");
  Rational sign = (n * (n - 1) / 2) % 2 ? -1 : 1;
  return sign * bareissDet(SqMatrix<Rational>::fromRows(kernel)) * prod / vand;
}

/// det of (h_{j-i}(V))_{n x (2n-1)} times
/// ((q^{j-k+1} - q^{k-1})/(q-1) (-1)^{n-j+k-1} e_{n-j+k-1}(U))_{(2n-1) x n}.
inline Rational fqFactored(const VarList& v, const VarList& u, const Rational& q) {
  const int n = static_cast<int>(v.size());
  if (n == 0 || u.size() != v.size()) throw DegenerateParams("fqFactored: need |v| = |u| >= 1");
  if (q == 1) throw DegenerateParams("fqFactored: q = 1");
  const int w = 2 * n - 1;
  std::vector<std::vector<Rational>> left(n, std::vector<Rational>(w));
  std::vector<std::vector<Rational>> right(w, std::vector<Rational>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= w; ++j) left[i - 1][j - 1] = homSym(v, j - i);
  for (int j = 1; j <= w; ++j) {
    for (int k = 1; k <= n; ++k) {
      int d = n - j + k - 1;
      Rational e = elemSym(u, d);
      if (d % 2) e = -e;
      right[j - 1][k - 1] = detail::geometricDifference(q, j - k + 1, k - 1) * e;
    }
  }
  auto product = SqMatrix<Rational>::generate(n, [&](int i, int k) {
    Rational s = 0;
    for (int j = 0; j < w; ++j) s += left[i - 1][j] * right[j][k - 1];
    return s;
  });
  return bareissDet(std::move(product));
}

/// Z_n = (-1)^{n^2} / ((q^2 - 1)^{n^2-n} prod (v_i u_i)^{n/2} v_i^{-1}) * F_{q^2}(V, U)
/// with U = {a_i^2}, V = {b_j^2}; F is evaluated through the factored form.
inline Rational znViaLascoux(int n, const SpectralParams& p) {
  detail::requireBasic(p);
  if (static_cast<int>(p.order()) != n) throw DegenerateParams("znViaLascoux: size mismatch");
  VarList u(n);
  VarList v(n);
  for (int i = 0; i < n; ++i) {
    u[i] = p.a[i] * p.a[i];
    v[i] = p.b[i] * p.b[i];
  }
  if (detail::vandermonde(u) == 0 || detail::vandermonde(v) == 0)
    throw DegenerateParams("znViaLascoux: repeated spectral parameters");
  const Rational q2 = p.q * p.q;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((v[i] - u[j]) * (q2 * v[i] - u[j]) == 0) throw DegenerateParams("znViaLascoux: vanishing kernel factor");
  Rational den = rpow(q2 - 1, n * n - n);
  for (int i = 0; i < n; ++i) den *= rpow(p.a[i] * p.b[i], n) / v[i];
  Rational sign = (n * n) % 2 ? -1 : 1;
  return sign / den * fqFactored(v, u, q2);
}

}  // namespace asmlab
