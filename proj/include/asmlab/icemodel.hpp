#pragma once

// Square ice (six-vertex model with domain-wall boundary) and its partition
// function, by brute force and by the Izergin-Korepin determinant.
//
// Spectral parameters enter through square roots: a_i plays q^{x_i} and b_j
// plays q^{y_j}, so q^{xi} at vertex (i, j) is a_i / b_j and every weight is a
// rational function of (a, b, q).

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "asmlab/asm.hpp"
#include "asmlab/error.hpp"
#include "asmlab/matrix.hpp"
#include "asmlab/rational.hpp"

namespace asmlab {

/// Arrow directions on the four edges around a vertex, derived from its state.
struct VertexArrows {
  bool leftPointsRight;
  bool rightPointsRight;
  bool topPointsUp;
  bool bottomPointsUp;
};

/// States 1..6 in the usual numbering: 1 and 2 carry the matrix entries +1 and
/// -1, 3..6 are the four zero states.
inline VertexArrows arrowsOf(int state) {
  switch (state) {
    case 1: return {true, false, true, false};   // horizontal in, vertical out
    case 2: return {false, true, false, true};   // horizontal out, vertical in
    case 3: return {true, true, true, true};     // right, up
    case 4: return {false, false, false, false}; // left, down
    case 5: return {false, false, true, true};   // left, up
    case 6: return {true, true, false, false};   // right, down
    default: throw InconsistentArrows("vertex state must be in 1..6");
  }
}

class IceState {
 public:
  /// Validates edge consistency and domain-wall boundary: left and right
  /// boundary edges point inward, top and bottom ones outward.
  static IceState validate(std::vector<std::vector<int>> states) {
    const int n = static_cast<int>(states.size());
    if (n == 0) throw UnsupportedSize("empty ice state");
    for (const auto& row : states)
      if (static_cast<int>(row.size()) != n) throw UnsupportedSize("ice state is not square");
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        VertexArrows a = arrowsOf(states[i][j]);
        const std::string at = " at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        if (j == 0 && !a.leftPointsRight) throw InconsistentArrows("left boundary not inward" + at);
        if (j == n - 1 && a.rightPointsRight) throw InconsistentArrows("right boundary not inward" + at);
        if (i == 0 && !a.topPointsUp) throw InconsistentArrows("top boundary not outward" + at);
        if (i == n - 1 && a.bottomPointsUp) throw InconsistentArrows("bottom boundary not outward" + at);
        if (j + 1 < n && a.rightPointsRight != arrowsOf(states[i][j + 1]).leftPointsRight)
          throw InconsistentArrows("horizontal edge mismatch" + at);
        if (i + 1 < n && a.bottomPointsUp != arrowsOf(states[i + 1][j]).topPointsUp)
          throw InconsistentArrows("vertical edge mismatch" + at);
      }
    }
    return IceState(std::move(states));
  }

  /// n lines of n digits 1-6.
  static IceState parse(const std::string& text) {
    std::vector<std::vector<int>> g;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      std::vector<int> row;
      for (char c : line) {
        if (c >= '1' && c <= '6') {
          row.push_back(c - '0');
        } else if (c != ' ' && c != '\r' && c != '\t') {
          throw ParseError("ice state text: unexpected character");
        }
      }
      if (!row.empty()) g.push_back(std::move(row));
    }
    return validate(std::move(g));
  }

  int order() const { return static_cast<int>(states_.size()); }
  int operator()(int i, int j) const { return states_[i][j]; }
  const std::vector<std::vector<int>>& states() const { return states_; }

  std::string toText() const {
    std::string out;
    for (const auto& row : states_) {
      for (int s : row) out += static_cast<char>('0' + s);
      out += '\n';
    }
    return out;
  }

  friend bool operator==(const IceState&, const IceState&) = default;

 private:
  explicit IceState(std::vector<std::vector<int>> s) : states_(std::move(s)) {}
  std::vector<std::vector<int>> states_;
};

struct StateCounts {
  std::array<long, 6> n{};  ///< n[s-1] = vertices in state s

  long operator[](int state) const { return n[state - 1]; }
  friend bool operator==(const StateCounts&, const StateCounts&) = default;
};

inline StateCounts stateCounts(const IceState& s) {
  StateCounts c;
  for (const auto& row : s.states())
    for (int v : row) ++c.n[v - 1];
  return c;
}

/// The square ice configuration of an ASM. An edge left of (i, j) points right
/// iff the partial row sum before column j is 0; an edge above (i, j) points up
/// iff the partial column sum above row i is 0.
inline IceState asmToIce(const Asm& a) {
  const int n = a.order();
  std::vector<std::vector<int>> st(n, std::vector<int>(n, 0));
  std::vector<int> colSum(n, 0);
  for (int i = 0; i < n; ++i) {
    int rowSum = 0;
    for (int j = 0; j < n; ++j) {
      int x = a(i, j);
      int s = 0;
      if (x == 1) {
        s = 1;
      } else if (x == -1) {
        s = 2;
      } else if (rowSum == 0) {
        s = colSum[j] == 0 ? 3 : 6;
      } else {
        s = colSum[j] == 0 ? 5 : 4;
      }
      st[i][j] = s;
      rowSum += x;
      colSum[j] += x;
    }
  }
  return IceState::validate(std::move(st));
}

inline Asm iceToAsm(const IceState& s) {
  const int n = s.order();
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = s(i, j) == 1 ? 1 : s(i, j) == 2 ? -1 : 0;
  return Asm::validate(std::move(g));
}

struct SpectralParams {
  std::vector<Rational> a;  ///< a_i = q^{x_i}
  std::vector<Rational> b;  ///< b_j = q^{y_j}
  Rational q;

  std::size_t order() const { return a.size(); }
};

namespace detail {

inline void requireBasic(const SpectralParams& p) {
  if (p.a.size() != p.b.size() || p.a.empty()) throw DegenerateParams("spectral parameters: need |a| = |b| >= 1");
  if (p.q == 0 || p.q * p.q == 1) throw DegenerateParams("spectral parameters: q must avoid 0 and +-1");
  for (const auto& x : p.a)
    if (x == 0) throw DegenerateParams("spectral parameters: a_i must be nonzero");
  for (const auto& x : p.b)
    if (x == 0) throw DegenerateParams("spectral parameters: b_j must be nonzero");
}

// [x - y] for q^x = X, q^y = Y.
inline Rational bracket(const Rational& x, const Rational& y, const Rational& q) {
  return (x / y - y / x) / (q - 1 / q);
}

}  // namespace detail

/// Weight of one vertex in `state` at row parameter a and column parameter b.
inline Rational vertexWeight(int state, const Rational& a, const Rational& b, const Rational& q) {
  const Rational qq = q - 1 / q;
  switch (state) {
    case 1: return -b / a;
    case 2: return -a / b;
    case 3:
    case 4: return (a * a - q * q * b * b) / (q * a * b * qq);
    case 5:
    case 6: return (a * a - b * b) / (a * b * qq);
    default: throw InconsistentArrows("vertex state must be in 1..6");
  }
}

inline Rational configWeight(const IceState& s, const SpectralParams& p) {
  detail::requireBasic(p);
  if (static_cast<int>(p.order()) != s.order()) throw DegenerateParams("configWeight: size mismatch");
  Rational w = 1;
  for (int i = 0; i < s.order(); ++i)
    for (int j = 0; j < s.order(); ++j) w *= vertexWeight(s(i, j), p.a[i], p.b[j], p.q);
  return w;
}

/// Z_n by summing the weights of all |ASM(n)| configurations.
inline Rational bruteZn(int n, const SpectralParams& p) {
  if (n > 6) throw CeilingExceeded("bruteZn: n must be at most 6");
  if (static_cast<int>(p.order()) != n) throw DegenerateParams("bruteZn: size mismatch");
  detail::requireBasic(p);
  Rational z = 0;
  walkTriangles(n, [&](const TriangleView& v) { z += configWeight(asmToIce(v.toAsm()), p); });
  return z;
}

/// Izergin-Korepin determinant in bracket form:
/// (-1)^n prod q^{y_i - x_i} prod [x_i - y_j][x_i - y_j - 1] det(1/([x_i - y_j][x_i - y_j - 1]))
/// over prod_{j<i} [x_i - x_j] prod_{i<j} [y_i - y_j].
inline Rational ikZn(int n, const SpectralParams& p) {
  detail::requireBasic(p);
  if (static_cast<int>(p.order()) != n) throw DegenerateParams("ikZn: size mismatch");
  const auto& a = p.a;
  const auto& b = p.b;
  const Rational& q = p.q;
  Rational num = n % 2 ? -1 : 1;
  for (int i = 0; i < n; ++i) num *= b[i] / a[i];
  std::vector<std::vector<Rational>> kernel(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational k = detail::bracket(a[i], b[j], q) * detail::bracket(a[i], b[j] * q, q);
      if (k == 0) throw DegenerateParams("ikZn: vanishing kernel denominator");
      num *= k;
      kernel[i][j] = 1 / k;
    }
  }
  Rational den = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) den *= detail::bracket(a[i], a[j], q);
    for (int j = i + 1; j < n; ++j) den *= detail::bracket(b[i], b[j], q);
  }
  if (den == 0) throw DegenerateParams("ikZn: repeated spectral parameters");
  return num / den * bareissDet(SqMatrix<Rational>::fromRows(kernel));
}

/// The same determinant after u_i = a_i^2, v_j = b_j^2:
/// (-1)^{n(n+1)/2} prod (u_i - v_j)(u_i - q^2 v_j) det(K) over
/// (q^2 - 1)^{n^2-n} prod (v_i u_i)^{n/2} v_i^{-1} prod_{i<j} (u_i - u_j)(v_i - v_j),
/// with (v_i u_i)^{n/2} = (a_i b_i)^n.
inline Rational ikZnUV(int n, const SpectralParams& p) {
  detail::requireBasic(p);
  if (static_cast<int>(p.order()) != n) throw DegenerateParams("ikZnUV: size mismatch");
  const Rational q2 = p.q * p.q;
  std::vector<Rational> u(n);
  std::vector<Rational> v(n);
  for (int i = 0; i < n; ++i) {
    u[i] = p.a[i] * p.a[i];
    v[i] = p.b[i] * p.b[i];
  }
  Rational num = (n * (n + 1) / 2) % 2 ? -1 : 1;
  std::vector<std::vector<Rational>> kernel(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational k = (u[i] - v[j]) * (u[i] - q2 * v[j]);
      if (k == 0) throw DegenerateParams("ikZnUV: vanishing kernel denominator");
      num *= k;
      kernel[i][j] = 1 / k;
    }
  }
  Rational den = rpow(q2 - 1, n * n - n);
  for (int i = 0; i < n; ++i) den *= rpow(p.a[i] * p.b[i], n) / v[i];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) den *= (u[i] - u[j]) * (v[i] - v[j]);
  if (den == 0) throw DegenerateParams("ikZnUV: repeated spectral parameters");
  return num * bareissDet(SqMatrix<Rational>::fromRows(kernel)) / den;
}

}  // namespace asmlab
