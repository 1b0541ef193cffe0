#pragma once

// Factorizations A_{2m+1}(z) = B_{2m+1}(z) B_{2m+2}(z), A_{2m}(z) = 2 B_{2m}(z)
// B_{2m+1}(z), and their rho-refined versions, verified by exact division.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "asmlab/asm.hpp"
#include "asmlab/error.hpp"
#include "asmlab/mpoly.hpp"
#include "asmlab/report.hpp"

namespace asmlab {

struct BPoly {
  int index = 0;
  MPoly poly;
};

namespace detail {

// genFun is the expensive step; conjecture checks at neighbouring n share it.
inline const MPoly& genFunMemo(int n, const EnumOptions& opt) {
  static std::mutex mu;
  static std::map<int, MPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, genFun(n, opt)).first;
  return it->second;
}

inline MPoly aOfZ(int n, const EnumOptions& opt) {
  return genFunMemo(n, opt).specialize(Var::rho, 1).specialize(Var::tau, 1);
}

inline MPoly aOfZRho(int n, const EnumOptions& opt) { return genFunMemo(n, opt).specialize(Var::tau, 1); }

// B_{2m+1}(z, rho); B_1 = 1.
inline MPoly bOdd(int m) { return m == 0 ? MPoly(1) : hsasmGenFunSymmetric(m); }

}  // namespace detail

/// B_1(z), ..., B_{nMax+1}(z). Odd indices come from horizontally symmetric
/// ASMs; even ones are exact quotients, and B_{2m} is computed from both
/// A_{2m-1} and A_{2m}, which must agree.
inline std::vector<BPoly> kuperbergB(int nMax, const EnumOptions& opt = {}) {
  if (nMax < 1) throw UnsupportedSize("kuperbergB: nMax must be positive");
  checkOrder(nMax, opt);
  std::vector<MPoly> b(nMax + 2);
  for (int idx = 1; idx <= nMax + 1; idx += 2) b[idx] = detail::bOdd((idx - 1) / 2).specialize(Var::rho, 1);
  for (int n = 1; n <= nMax; ++n) {
    const MPoly a = detail::aOfZ(n, opt);
    if (n % 2) {
      b[n + 1] = exactDiv(a, b[n]);
    } else {
      MPoly other = exactDiv(a, b[n + 1].scaled(2));
      if (!(other == b[n]))
        throw IdentityFailed("kuperbergB: B_" + std::to_string(n) + " is " + b[n].toString() + " from A_" +
                             std::to_string(n - 1) + " but " + other.toString() + " from A_" + std::to_string(n));
    }
  }
  std::vector<BPoly> out;
  for (int idx = 1; idx <= nMax + 1; ++idx) out.push_back({idx, b[idx]});
  return out;
}

struct ConjectureResult {
  Report report;
  int bIndex = 0;
  std::optional<MPoly> b;  ///< B_{2m+1}(z, rho) for even n, the quotient B_{2m+2}(z, rho) for odd n
  bool nonnegative = false;
};

/// Even n = 2m: A_{2m}(z, rho) = rho (rho+1) B_{2m}(z, 1) B_{2m+1}(z, rho).
/// Odd n = 2m+1: B_{2m+2}(z, rho) = A_{2m+1}(z, rho) / (rho B_{2m+1}(z, 1)) must
/// be a polynomial with integer coefficients. Coefficient signs are recorded.
inline ConjectureResult conjectureCheck(int n, const EnumOptions& opt = {}) {
  if (n < 2) throw UnsupportedSize("conjectureCheck: n must be at least 2");
  checkOrder(n, opt);
  ConjectureResult res;
  const MPoly rho = MPoly::variable(Var::rho);
  res.report = runCheck("conjecture", n, [&]() -> std::optional<std::string> {
    const MPoly a = detail::aOfZRho(n, opt);
    if (n % 2 == 0) {
      const int m = n / 2;
      auto b2m = tryExactDiv(detail::aOfZ(n - 1, opt), detail::bOdd(m - 1).specialize(Var::rho, 1));
      if (!b2m) return "B_" + std::to_string(n) + "(z,1) is not a polynomial";
      MPoly bNext = detail::bOdd(m);
      res.bIndex = n + 1;
      res.b = bNext;
      MPoly rhs = rho * (rho + 1) * *b2m * bNext;
      if (a == rhs) return std::nullopt;
      MPoly diff = a - rhs;
      const auto& [mono, c] = diff.canonicalTerms().front();
      return "A_" + std::to_string(n) + "(z,rho) differs from rho(rho+1)B_" + std::to_string(n) + "(z,1)B_" +
             std::to_string(n + 1) + "(z,rho) at " + MPoly::term(1, mono).toString();
    }
    const int m = (n - 1) / 2;
    const MPoly bz = detail::bOdd(m).specialize(Var::rho, 1);
    auto q = tryExactDiv(a, rho * bz);
    res.bIndex = n + 1;
    if (!q) return "rho B_" + std::to_string(n) + "(z,1) does not divide A_" + std::to_string(n) + "(z,rho)";
    res.b = *q;
    if (!q->hasIntegerCoefficients()) return "B_" + std::to_string(n + 1) + "(z,rho) has non-integer coefficients";
    return std::nullopt;
  });
  if (res.b) {
    res.nonnegative = true;
    for (const auto& [mono, c] : res.b->terms())
      if (c < 0) res.nonnegative = false;
  }
  return res;
}

}  // namespace asmlab
