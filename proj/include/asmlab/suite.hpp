#pragma once

// Verification suites: which checks run for which n, with seeded sampling for
// the identities that are only checked at points.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "asmlab/asm.hpp"
#include "asmlab/decomp.hpp"
#include "asmlab/detformulas.hpp"
#include "asmlab/error.hpp"
#include "asmlab/icemodel.hpp"
#include "asmlab/report.hpp"
#include "asmlab/sampling.hpp"
#include "asmlab/symfunc.hpp"

namespace asmlab {

enum class Suite { core, corollaries, ik, lascoux, conjecture, all };

inline Suite parseSuite(const std::string& s) {
  if (s == "core") return Suite::core;
  if (s == "corollaries") return Suite::corollaries;
  if (s == "ik") return Suite::ik;
  if (s == "lascoux") return Suite::lascoux;
  if (s == "conjecture") return Suite::conjecture;
  if (s == "all") return Suite::all;
  throw UnknownName("unknown suite: " + s);
}

/// Largest maxN a suite accepts.
inline int suiteCeiling(bool deep) { return deep ? 9 : 8; }

/// Samples per (check, n) for the point-evaluated identities.
inline constexpr int kSamplesPerN = 20;

/// Per-check upper limits on n; the suite clamps maxN to these.
struct CheckCaps {
  int count, theorem1, proofChain, rowOperations, tauOne, corollary12;
  int corJRL, symmetry, enumeration, aigner;
  int ik, lascouxF, lascouxZ;
  int conjecture;
};

inline CheckCaps checkCaps(bool deep) {
  if (deep) return {9, 6, 5, 4, 6, 12, 7, 8, 10, 7, 5, 5, 4, 9};
  return {7, 5, 3, 4, 4, 8, 5, 6, 8, 6, 4, 4, 3, 7};
}

namespace detail {

// splitmix64 finalizer; derives independent per-check seeds from the suite seed.
inline std::uint64_t mixSeed(std::uint64_t seed, std::uint64_t tag, int n) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (tag * 64 + static_cast<std::uint64_t>(n) + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline Report countCheck(int n, const EnumOptions& opt) {
  return runCheck("count", n, [&]() -> std::optional<std::string> {
    std::uint64_t c = reduceTriangles(
        n, std::uint64_t{0}, [](std::uint64_t& acc, const TriangleView&) { ++acc; }, opt);
    return valueWitness("|ASM(n)|", std::to_string(c), countClosedForm(n).get_str());
  });
}

inline Report ikCheck(int n, std::uint64_t seed) {
  Report r = runCheck("ik", n, [&]() -> std::optional<std::string> {
    RationalSampler s(seed);
    for (int k = 0; k < kSamplesPerN; ++k) {
      SpectralParams p = s.drawSpectral(n);
      Rational brute = bruteZn(n, p);
      Rational ik = ikZn(n, p);
      Rational uv = ikZnUV(n, p);
      std::string at = " (sample " + std::to_string(k) + ")";
      if (auto w = valueWitness("bracket form" + at, ik.get_str(), brute.get_str())) return w;
      if (auto w = valueWitness("u/v form" + at, uv.get_str(), brute.get_str())) return w;
    }
    return std::nullopt;
  });
  r.seed = seed;
  return r;
}

inline Report lascouxFCheck(int n, std::uint64_t seed) {
  Report r = runCheck("lascoux-F", n, [&]() -> std::optional<std::string> {
    RationalSampler s(seed);
    for (int k = 0; k < kSamplesPerN;) {
      VarList v(n);
      VarList u(n);
      for (auto& x : v) x = s.draw();
      for (auto& x : u) x = s.draw();
      Rational q = s.draw();
      try {
        Rational direct = fqDirect(v, u, q);
        if (q == 1) continue;
        Rational factored = fqFactored(v, u, q);
        if (auto w = valueWitness("F_q direct vs factored (sample " + std::to_string(k) + ")", factored.get_str(),
                                  direct.get_str()))
          return w;
        ++k;
      } catch (const DegenerateParams&) {
      }
    }
    return std::nullopt;
  });
  r.seed = seed;
  return r;
}

inline Report lascouxZCheck(int n, std::uint64_t seed) {
  Report r = runCheck("lascoux-Z", n, [&]() -> std::optional<std::string> {
    RationalSampler s(seed);
    for (int k = 0; k < kSamplesPerN; ++k) {
      SpectralParams p = s.drawSpectral(n);
      if (auto w = valueWitness("Z_n via F_q (sample " + std::to_string(k) + ")", znViaLascoux(n, p).get_str(),
                                ikZn(n, p).get_str()))
        return w;
    }
    return std::nullopt;
  });
  r.seed = seed;
  return r;
}

inline Report proofChainSampled(int n, std::uint64_t seed) {
  RationalSampler s(seed);
  Report total;
  total.check = "proofChain";
  total.n = n;
  total.pass = true;
  for (int k = 0; k < kSamplesPerN / 4;) {
    Rational p = s.draw();
    Rational a = s.draw();
    Rational b = s.draw();
    try {
      Report r = proofChainCheck(n, p, a, b);
      total.elapsedMs += r.elapsedMs;
      if (!r.pass) {
        total.pass = false;
        total.witness = *r.witness + " at p=" + p.get_str() + ", s=" + a.get_str() + ", t=" + b.get_str();
        break;
      }
      ++k;
    } catch (const DegenerateParams&) {
    }
  }
  total.seed = seed;
  return total;
}

}  // namespace detail

/// Runs every check the suite maps to, for n up to maxN (clamped per check),
/// in parallel; reports come back sorted by (check, n).
inline std::vector<Report> runSuite(Suite suite, int maxN, std::uint64_t seed, bool deep) {
  if (maxN < 1) throw UnsupportedSize("runSuite: maxN must be positive");
  if (maxN > suiteCeiling(deep))
    throw CeilingExceeded("runSuite: maxN " + std::to_string(maxN) + " exceeds the ceiling " +
                          std::to_string(suiteCeiling(deep)) + (deep ? "" : " (use --deep for 9)"));
  const CheckCaps cap = checkCaps(deep);
  EnumOptions opt;
  opt.allowBeyondCeiling = deep;
  opt.threads = 1;  // parallelism comes from running checks side by side
  struct Task {
    std::string check;
    int n;
    std::function<Report()> run;
  };
  std::vector<Task> tasks;
  auto upTo = [&](const std::string& check, int lo, int hi, auto&& make) {
    for (int n = lo; n <= std::min(maxN, hi); ++n) tasks.push_back({check, n, [n, make] { return make(n); }});
  };
  auto want = [&](Suite s) { return suite == Suite::all || suite == s; };

  if (want(Suite::core)) {
    upTo("count", 1, cap.count, [opt](int n) { return detail::countCheck(n, opt); });
    upTo("theorem1", 2, cap.theorem1, [](int n) { return theorem1Check(n); });
    upTo("rowOperations", 2, cap.rowOperations, [](int n) { return rowOperationCheck(n); });
    upTo("proofChain", 2, cap.proofChain, [seed](int n) { return detail::proofChainSampled(n, detail::mixSeed(seed, 1, n)); });
    upTo("tauOne", 1, cap.tauOne, [](int n) { return corollaryTauOneCheck(n); });
    upTo("corollary12", 1, cap.corollary12, [](int n) { return corollary12Check(n); });
  }
  if (want(Suite::corollaries)) {
    upTo("corJRL", 1, cap.corJRL, [](int n) { return corJRLCheck(n); });
    upTo("symmetry", 1, cap.symmetry, [](int n) { return symmetryCheck(n); });
    for (EnumVariant v : {EnumVariant::one, EnumVariant::two, EnumVariant::three})
      upTo("enum-" + variantName(v), 1, cap.enumeration, [v](int n) { return enumIdentityCheck(v, n); });
    upTo("aigner", 1, cap.aigner, [](int n) { return aignerCheck(n); });
  }
  if (want(Suite::ik)) upTo("ik", 1, cap.ik, [seed](int n) { return detail::ikCheck(n, detail::mixSeed(seed, 2, n)); });
  if (want(Suite::lascoux)) {
    upTo("lascoux-F", 1, cap.lascouxF, [seed](int n) { return detail::lascouxFCheck(n, detail::mixSeed(seed, 3, n)); });
    upTo("lascoux-Z", 2, cap.lascouxZ, [seed](int n) { return detail::lascouxZCheck(n, detail::mixSeed(seed, 4, n)); });
  }
  if (want(Suite::conjecture)) {
    upTo("kuperberg", 1, cap.conjecture, [opt](int n) {
      return runCheck("kuperberg", n, [&]() -> std::optional<std::string> {
        try {
          kuperbergB(n, opt);
        } catch (const Error& e) {
          return std::string(e.what());
        }
        return std::nullopt;
      });
    });
    upTo("conjecture", 2, cap.conjecture, [opt](int n) { return conjectureCheck(n, opt).report; });
  }

  std::vector<Report> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      try {
        out[k] = tasks[k].run();
      } catch (const std::exception& e) {
        out[k].check = tasks[k].check;
        out[k].n = tasks[k].n;
        out[k].pass = false;
        out[k].witness = std::string("exception: ") + e.what();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(defaultThreads(), static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::stable_sort(out.begin(), out.end(),
                   [](const Report& a, const Report& b) { return a.check != b.check ? a.check < b.check : a.n < b.n; });
  return out;
}

}  // namespace asmlab
