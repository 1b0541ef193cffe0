#pragma once

// Alternating sign matrices: validation, enumeration through monotone
// triangles, the (mu, f, ell) statistics and their generating functions.
//
// Row i of the monotone triangle is the set of columns whose partial column
// sum equals 1 after the first i rows of the matrix. Consecutive rows
// interlace and row n is {1, ..., n}.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "asmlab/error.hpp"
#include "asmlab/mpoly.hpp"
#include "asmlab/rational.hpp"

namespace asmlab {

/// Largest order the enumerator can represent at all.
inline constexpr int kMaxOrder = 12;
/// Orders above this need an explicit override (|ASM(9)| is about 9.1e8).
inline constexpr int kEnumerationCeiling = 9;

/// Thread budget: ASMLAB_THREADS if set, otherwise the hardware concurrency.
inline unsigned defaultThreads() {
  if (const char* env = std::getenv("ASMLAB_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

struct EnumOptions {
  unsigned threads = defaultThreads();
  bool allowBeyondCeiling = false;
};

inline void checkOrder(int n, const EnumOptions& opt) {
  if (n < 1) throw UnsupportedSize("ASM order must be positive");
  if (n > kMaxOrder) throw CeilingExceeded("ASM order " + std::to_string(n) + " exceeds the representable maximum");
  if (n > kEnumerationCeiling && !opt.allowBeyondCeiling)
    throw CeilingExceeded("ASM order " + std::to_string(n) + " exceeds the enumeration ceiling " +
                          std::to_string(kEnumerationCeiling));
}

struct Stats {
  int mu = 0;   ///< number of -1 entries
  int f = 0;    ///< column of the 1 in the first row
  int ell = 0;  ///< column of the 1 in the last row

  friend bool operator==(const Stats&, const Stats&) = default;
};

class Asm {
 public:
  /// Checks that every row and column alternates 1, -1, ..., 1.
  static Asm validate(std::vector<std::vector<int>> grid) {
    const int n = static_cast<int>(grid.size());
    if (n == 0) throw UnsupportedSize("empty matrix");
    for (const auto& row : grid)
      if (static_cast<int>(row.size()) != n) throw UnsupportedSize("matrix is not square");
    for (int i = 0; i < n; ++i) {
      int s = 0;
      for (int j = 0; j < n; ++j) {
        int x = grid[i][j];
        if (x < -1 || x > 1) throw NotAlternating("row", i + 1);
        s += x;
        if (s < 0 || s > 1) throw NotAlternating("row", i + 1);
      }
      if (s != 1) throw NotAlternating("row", i + 1);
    }
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int i = 0; i < n; ++i) {
        s += grid[i][j];
        if (s < 0 || s > 1) throw NotAlternating("column", j + 1);
      }
      if (s != 1) throw NotAlternating("column", j + 1);
    }
    return Asm(std::move(grid));
  }

  static Asm identity(int n) {
    std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) g[i][i] = 1;
    return Asm(std::move(g));
  }

  /// Rows of space-separated entries.
  static Asm parse(const std::string& text) {
    std::vector<std::vector<int>> grid;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::vector<int> row;
      int x = 0;
      while (ls >> x) row.push_back(x);
      if (!ls.eof()) throw ParseError("ASM text: non-integer entry");
      if (!row.empty()) grid.push_back(std::move(row));
    }
    return validate(std::move(grid));
  }

  int order() const { return static_cast<int>(grid_.size()); }
  /// 0-based entry.
  int operator()(int i, int j) const { return grid_[i][j]; }
  const std::vector<std::vector<int>>& rows() const { return grid_; }

  Stats stats() const {
    Stats s;
    const int n = order();
    for (const auto& row : grid_)
      for (int x : row) s.mu += x == -1;
    s.f = static_cast<int>(std::find(grid_[0].begin(), grid_[0].end(), 1) - grid_[0].begin()) + 1;
    s.ell = static_cast<int>(std::find(grid_[n - 1].begin(), grid_[n - 1].end(), 1) - grid_[n - 1].begin()) + 1;
    return s;
  }

  /// A_{i,j} = A_{n+1-i,j}.
  bool isHorizontallySymmetric() const {
    const int n = order();
    for (int i = 0; i < n / 2; ++i)
      if (grid_[i] != grid_[n - 1 - i]) return false;
    return true;
  }

  std::string toText() const {
    std::string out;
    for (const auto& row : grid_) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) out += ' ';
        out += std::to_string(row[j]);
      }
      out += '\n';
    }
    return out;
  }

  friend bool operator==(const Asm&, const Asm&) = default;
  friend auto operator<=>(const Asm& a, const Asm& b) { return a.grid_ <=> b.grid_; }

 private:
  explicit Asm(std::vector<std::vector<int>> grid) : grid_(std::move(grid)) {}
  std::vector<std::vector<int>> grid_;
};

// ---------------------------------------------------------------------------
// Monotone triangle walk

/// A complete triangle as seen by a visitor. Row n is implicit.
struct TriangleView {
  int n = 0;
  int mu = 0;
  int f = 0;
  int ell = 0;
  const std::array<std::array<std::int8_t, kMaxOrder>, kMaxOrder + 1>* rows = nullptr;

  /// k-th smallest column (0-based k) of triangle row i, 1 <= i <= n.
  int entry(int i, int k) const { return i == n ? k + 1 : (*rows)[i][k]; }

  Stats stats() const { return {mu, f, ell}; }

  Asm toAsm() const {
    std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
    for (int i = 1; i <= n; ++i) {
      for (int k = 0; k < i; ++k) g[i - 1][entry(i, k) - 1] += 1;
      for (int k = 0; k + 1 < i; ++k) g[i - 1][entry(i - 1, k) - 1] -= 1;
    }
    return Asm::validate(std::move(g));
  }
};

namespace detail {

template <class Visitor>
class TriangleWalker {
 public:
  TriangleWalker(int n, Visitor& visit) : n_(n), visit_(visit) { view_.n = n; view_.rows = &rows_; }

  /// Walks every triangle whose first `fixed` rows equal the given prefix.
  void run(const std::vector<std::vector<int>>& prefix) {
    if (n_ == 1) {
      view_.mu = 0;
      view_.f = 1;
      view_.ell = 1;
      visit_(static_cast<const TriangleView&>(view_));
      return;
    }
    int mu = 0;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      const int row = static_cast<int>(i) + 1;
      for (int k = 0; k < row; ++k) rows_[row][k] = static_cast<std::int8_t>(prefix[i][k]);
      if (row > 1) mu += missing(row - 1, row);
    }
    const int next = static_cast<int>(prefix.size()) + 1;
    if (next == n_) {
      leaf(mu);
    } else {
      choose(next, 0, mu);
    }
  }

 private:
  // Elements of row `upper` absent from row `upper + 1` (both materialized).
  int missing(int upper, int lower) const {
    int count = 0;
    for (int k = 0; k < upper; ++k) {
      int y = rows_[upper][k];
      bool present = false;
      for (int t = 0; t < lower; ++t) present |= rows_[lower][t] == y;
      count += !present;
    }
    return count;
  }

  void leaf(int mu) {
    view_.mu = mu;
    view_.f = rows_[1][0];
    int ell = n_;
    for (int k = 0; k < n_ - 1; ++k) {
      if (rows_[n_ - 1][k] != k + 1) {
        ell = k + 1;
        break;
      }
    }
    view_.ell = ell;
    visit_(static_cast<const TriangleView&>(view_));
  }

  // Picks element j of row i; row i-1 is complete. mu counts entries of
  // earlier rows already known to be missing from their successor.
  void choose(int i, int j, int mu) {
    const auto& up = rows_[i - 1];
    auto& cur = rows_[i];
    int lo = 1;
    if (j > 0) lo = std::max<int>(up[j - 1], cur[j - 1] + 1);
    int hi = j == i - 1 ? n_ : up[j];
    for (int x = lo; x <= hi; ++x) {
      cur[j] = static_cast<std::int8_t>(x);
      int m = mu;
      // up[j-1] is now settled: it survives only as cur[j-1] or cur[j].
      if (j > 0 && cur[j - 1] != up[j - 1] && x != up[j - 1]) ++m;
      if (j + 1 < i) {
        choose(i, j + 1, m);
      } else if (i + 1 == n_) {
        leaf(m);
      } else {
        choose(i + 1, 0, m);
      }
    }
  }

  int n_;
  Visitor& visit_;
  std::array<std::array<std::int8_t, kMaxOrder>, kMaxOrder + 1> rows_{};
  TriangleView view_;
};

/// All valid prefixes of length `depth` (rows 1..depth) in walk order.
inline std::vector<std::vector<std::vector<int>>> trianglePrefixes(int n, int depth) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> cur;
  std::function<void(int)> rec = [&](int i) {
    if (i > depth) {
      out.push_back(cur);
      return;
    }
    std::vector<int> row(i);
    std::function<void(int)> pick = [&](int j) {
      if (j == i) {
        cur.push_back(row);
        rec(i + 1);
        cur.pop_back();
        return;
      }
      int lo = 1;
      if (j > 0) lo = std::max(cur.back()[j - 1], row[j - 1] + 1);
      int hi = j == i - 1 ? n : cur.back()[j];
      for (int x = lo; x <= hi; ++x) {
        row[j] = x;
        pick(j + 1);
      }
    };
    if (i == 1) {
      for (int x = 1; x <= n; ++x) {
        cur.push_back({x});
        rec(2);
        cur.pop_back();
      }
    } else {
      pick(0);
    }
  };
  rec(1);
  return out;
}

}  // namespace detail

/// Visits every monotone triangle of order n once, in a fixed order.
template <class Visitor>
void walkTriangles(int n, Visitor&& visit, const EnumOptions& opt = {}) {
  checkOrder(n, opt);
  detail::TriangleWalker<std::remove_reference_t<Visitor>> walker(n, visit);
  walker.run({});
}

/// Partitioned-parallel reduction over all triangles of order n. Each worker
/// folds leaves into its own accumulator (`leaf(acc, view)`); accumulators are
/// combined with `acc += other`, so the result is independent of scheduling.
template <class Acc, class Leaf>
Acc reduceTriangles(int n, Acc init, Leaf leaf, const EnumOptions& opt = {}) {
  checkOrder(n, opt);
  const unsigned threads = std::max(1u, opt.threads);
  if (threads == 1 || n <= 3) {
    Acc acc = init;
    auto visit = [&](const TriangleView& v) { leaf(acc, v); };
    detail::TriangleWalker<decltype(visit)> walker(n, visit);
    walker.run({});
    return acc;
  }
  const auto prefixes = detail::trianglePrefixes(n, std::min(3, n - 1));
  std::atomic<std::size_t> nextTask{0};
  std::vector<Acc> partial(threads, init);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      Acc& acc = partial[t];
      auto visit = [&](const TriangleView& v) { leaf(acc, v); };
      detail::TriangleWalker<decltype(visit)> walker(n, visit);
      for (std::size_t k = nextTask++; k < prefixes.size(); k = nextTask++) walker.run(prefixes[k]);
    });
  }
  for (auto& th : pool) th.join();
  Acc total = init;
  for (auto& p : partial) total += p;
  return total;
}

/// Every n x n ASM exactly once, in triangle-walk order.
inline std::vector<Asm> enumerateAsms(int n, const EnumOptions& opt = {}) {
  std::vector<Asm> out;
  walkTriangles(n, [&](const TriangleView& v) { out.push_back(v.toAsm()); }, opt);
  return out;
}

/// Multiplicities of (mu, f, ell) over ASM(n).
class StatTable {
 public:
  explicit StatTable(int n) : n_(n), maxMu_((n - 1) * (n - 1) / 4 + 1), counts_((maxMu_ + 1) * n * n, 0) {}

  void add(int mu, int f, int ell, std::uint64_t k = 1) { counts_[index(mu, f, ell)] += k; }
  std::uint64_t at(int mu, int f, int ell) const { return counts_[index(mu, f, ell)]; }
  int order() const { return n_; }
  int maxMu() const { return maxMu_; }

  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (auto c : counts_) s += c;
    return s;
  }

  StatTable& operator+=(const StatTable& o) {
    for (std::size_t k = 0; k < counts_.size(); ++k) counts_[k] += o.counts_[k];
    return *this;
  }

  /// sum over (mu, f, ell) of count * z^mu rho^f tau^ell.
  MPoly toPoly() const {
    MPoly r;
    for (int mu = 0; mu <= maxMu_; ++mu)
      for (int f = 1; f <= n_; ++f)
        for (int ell = 1; ell <= n_; ++ell) {
          std::uint64_t c = at(mu, f, ell);
          if (c == 0) continue;
          Monomial m;
          m[Var::z] = mu;
          m[Var::rho] = f;
          m[Var::tau] = ell;
          r += MPoly::term(Rational(Integer(static_cast<unsigned long>(c))), m);
        }
    return r;
  }

 private:
  std::size_t index(int mu, int f, int ell) const {
    return (static_cast<std::size_t>(mu) * n_ + (f - 1)) * n_ + (ell - 1);
  }

  int n_;
  int maxMu_;
  std::vector<std::uint64_t> counts_;
};

inline StatTable statTable(int n, const EnumOptions& opt = {}) {
  return reduceTriangles(
      n, StatTable(n), [](StatTable& t, const TriangleView& v) { t.add(v.mu, v.f, v.ell); }, opt);
}

/// A_n(z, rho, tau) = sum over ASM(n) of z^mu rho^f tau^ell.
inline MPoly genFun(int n, const EnumOptions& opt = {}) { return statTable(n, opt).toPoly(); }

/// Number of n x n ASMs: prod_{j=1}^{n} (3j-2)!/(n+j-1)!.
inline Integer countClosedForm(int n) {
  if (n < 1) throw UnsupportedSize("countClosedForm: n must be positive");
  Rational r = 1;
  for (int j = 1; j <= n; ++j) r *= Rational(factorial(3 * j - 2), factorial(n + j - 1));
  r.canonicalize();
  return r.get_num();
}

/// Number of n x n ASMs whose first-row 1 sits in column r:
/// (r)_{n-1} (n+1-r)_{n-1} / (n-1)! * prod_{j=0}^{n-2} (3j+1)!/(n+j)!.
inline Integer refinedClosedForm(int n, int r) {
  if (n < 1 || r < 1 || r > n) throw UnsupportedSize("refinedClosedForm: need 1 <= r <= n");
  Rational v(risingFactorial(r, n - 1) * risingFactorial(n + 1 - r, n - 1), factorial(n - 1));
  for (int j = 0; j <= n - 2; ++j) v *= Rational(factorial(3 * j + 1), factorial(n + j));
  v.canonicalize();
  return v.get_num();
}

/// B_{2m+1}(z, rho) = sum over HSASM(2m+1) of z^{(mu-m)/2} rho^{f-2}, computed by
/// filtering the full enumeration. Checks the forced middle row on the way.
inline MPoly hsasmGenFun(int m, const EnumOptions& opt = {}) {
  if (m < 1) throw UnsupportedSize("hsasmGenFun: m must be positive");
  const int n = 2 * m + 1;
  MPoly total;
  walkTriangles(
      n,
      [&](const TriangleView& v) {
        // Horizontal symmetry of the matrix <=> row n-i of the triangle is the
        // complement of row i (as 0/1 column vectors, c_{n-i} = 1 - c_i).
        for (int i = 1; i <= m; ++i) {
          std::uint32_t top = 0;
          std::uint32_t bottom = 0;
          for (int k = 0; k < i; ++k) top |= 1u << v.entry(i, k);
          for (int k = 0; k < n - i; ++k) bottom |= 1u << v.entry(n - i, k);
          if ((top | bottom) != ((1u << (n + 1)) - 2u) || (top & bottom) != 0) return;
        }
        Asm a = v.toAsm();
        for (int j = 0; j < n; ++j)
          if (a(m, j) != (j % 2 == 0 ? 1 : -1)) throw Error("HSASM middle row is not alternating");
        if ((v.mu - m) % 2 != 0 || v.mu < m)
          throw OddExponent("HSASM with mu - m odd at order " + std::to_string(n));
        Monomial mono;
        mono[Var::z] = (v.mu - m) / 2;
        mono[Var::rho] = v.f - 2;
        total += MPoly::term(1, mono);
      },
      opt);
  return total;
}

/// Same polynomial as hsasmGenFun, enumerated directly: an HSASM of order 2m+1
/// is fixed by its top m triangle rows, and row m must be {2, 4, ..., 2m}. Each
/// such partial triangle contributes z^{(-1s above the middle row)} rho^{f-2}.
inline MPoly hsasmGenFunSymmetric(int m) {
  if (m < 1) throw UnsupportedSize("hsasmGenFunSymmetric: m must be positive");
  if (2 * m + 1 > kMaxOrder) throw CeilingExceeded("hsasmGenFunSymmetric: order too large");
  std::vector<std::vector<int>> rows(m + 1);
  for (int i = 1; i <= m; ++i) rows[i].assign(i, 0);
  for (int k = 0; k < m; ++k) rows[m][k] = 2 * (k + 1);
  std::vector<std::vector<std::uint64_t>> counts;  // [muTop][f]
  const int n = 2 * m + 1;
  // Fill rows m-1, ..., 1 upward: row i interlaces row i+1.
  std::function<void(int, int, int)> pick = [&](int i, int j, int mu) {
    if (i == 0) {
      int f = rows[1][0];
      if (static_cast<int>(counts.size()) <= mu) counts.resize(mu + 1, std::vector<std::uint64_t>(n + 1, 0));
      ++counts[mu][f];
      return;
    }
    const auto& below = rows[i + 1];
    auto& cur = rows[i];
    int lo = below[j];
    if (j > 0) lo = std::max(lo, cur[j - 1] + 1);
    int hi = below[j + 1];
    for (int x = lo; x <= hi; ++x) {
      cur[j] = x;
      if (j + 1 < i) {
        pick(i, j + 1, mu);
      } else {
        // Row i done: entries of row i missing from row i+1 are -1s in matrix row i+1.
        int miss = 0;
        for (int y : cur) miss += std::find(below.begin(), below.end(), y) == below.end();
        pick(i - 1, 0, mu + miss);
      }
    }
  };
  if (m == 1) {
    counts.assign(1, std::vector<std::uint64_t>(n + 1, 0));
    counts[0][rows[1][0]] = 1;
  } else {
    pick(m - 1, 0, 0);
  }
  MPoly total;
  for (std::size_t mu = 0; mu < counts.size(); ++mu)
    for (int f = 0; f <= n; ++f)
      if (counts[mu][f]) {
        Monomial mono;
        mono[Var::z] = static_cast<int>(mu);
        mono[Var::rho] = f - 2;
        total += MPoly::term(Rational(Integer(static_cast<unsigned long>(counts[mu][f]))), mono);
      }
  return total;
}

}  // namespace asmlab
