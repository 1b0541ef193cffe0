#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace asmlab {

/// Outcome of one identity check. A failing report always carries a witness.
struct Report {
  std::string check;
  int n = 0;
  bool pass = false;
  std::optional<std::string> witness;
  std::int64_t elapsedMs = 0;
  std::optional<std::uint64_t> seed;
};

/// Runs `body`, which returns a failure witness or nullopt, and times it.
template <class Body>
Report runCheck(std::string name, int n, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  std::optional<std::string> witness = body();
  const auto stop = std::chrono::steady_clock::now();
  Report r;
  r.check = std::move(name);
  r.n = n;
  r.pass = !witness.has_value();
  r.witness = std::move(witness);
  r.elapsedMs = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return r;
}

}  // namespace asmlab
