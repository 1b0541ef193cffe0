// asmlab: counts, generating functions, named matrices, partition functions
// and the verification suites, as JSON or text on stdout.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "asmlab/asmlab.hpp"

using json = nlohmann::ordered_json;
using namespace asmlab;

namespace {

json integerJson(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json reportJson(const Report& r, bool timings) {
  json j;
  j["check"] = r.check;
  j["n"] = r.n;
  j["pass"] = r.pass;
  if (r.witness) j["witness"] = *r.witness;
  if (r.seed) j["seed"] = *r.seed;
  if (timings) j["elapsedMs"] = r.elapsedMs;
  return j;
}

json matrixJson(const AnyMatrix& m) {
  return std::visit(
      [](const auto& x) {
        using M = std::decay_t<decltype(x)>;
        json rows = json::array();
        for (std::size_t i = 0; i < x.size(); ++i) {
          json row = json::array();
          for (std::size_t j = 0; j < x.size(); ++j) {
            if constexpr (std::is_same_v<M, SqMatrix<Integer>>) {
              row.push_back(integerJson(x(i, j)));
            } else {
              row.push_back(RingTraits<typename std::decay_t<decltype(x(i, j))>>::toString(x(i, j)));
            }
          }
          rows.push_back(std::move(row));
        }
        return rows;
      },
      m);
}

std::string matrixDet(const AnyMatrix& m) {
  return std::visit(
      [](const auto& x) {
        auto d = bareissDet(x);
        return RingTraits<decltype(d)>::toString(d);
      },
      m);
}

std::string ringName(const AnyMatrix& m) {
  switch (m.index()) {
    case 0: return "laurent";
    case 1: return "integer";
    case 2: return "rational";
    default: return "gaussian";
  }
}

std::string readAll(const std::string& path) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and determinant identities for alternating sign matrices"};
  app.require_subcommand(1);

  int n = 0;
  int maxN = 0;
  std::uint64_t seed = 0;
  bool deep = false;
  bool timings = false;
  bool enumerate = false;
  bool withDet = false;
  bool hsasm = false;
  std::string format = "json";
  std::string name;
  std::string suiteName;
  std::string input;
  auto addFormat = [&](CLI::App* c) {
    c->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* count = app.add_subcommand("count", "Number of n x n ASMs");
  count->add_option("--n", n, "Order")->required();
  count->add_flag("--enumerate", enumerate, "Also count by enumeration");
  addFormat(count);

  auto* genfun = app.add_subcommand("genfun", "A_n(z, rho, tau) by enumeration");
  genfun->add_option("--n", n, "Order")->required();
  genfun->add_flag("--hsasm", hsasm, "B_n(z, rho) over horizontally symmetric ASMs instead (odd n)");
  genfun->add_flag("--deep", deep, "Allow orders above the default enumeration ceiling");
  addFormat(genfun);

  auto* matrix = app.add_subcommand("matrix", "Emit a named matrix");
  matrix->add_option("--name", name, "Matrix name")->required();
  matrix->add_option("--n", n, "Size parameter")->required();
  matrix->add_flag("--det", withDet, "Include the determinant");
  addFormat(matrix);

  auto* partition = app.add_subcommand("partition", "Z_n at seeded spectral parameters, by every route");
  partition->add_option("--n", n, "Order")->required();
  partition->add_option("--seed", seed, "Sampler seed");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suiteName, "core, corollaries, ik, lascoux, conjecture or all")->required();
  verify->add_option("--max-n", maxN, "Largest n")->required();
  verify->add_option("--seed", seed, "Seed for sampled checks");
  verify->add_flag("--deep", deep, "Raise the ceilings (long run)");
  verify->add_flag("--timings", timings, "Include elapsedMs in reports");

  auto* conjecture = app.add_subcommand("conjecture", "Refined decomposition A_n(z, rho) into B polynomials");
  conjecture->add_option("--max-n", maxN, "Largest n")->required();
  conjecture->add_flag("--deep", deep, "Allow n up to 9 (long run)");
  conjecture->add_flag("--timings", timings, "Include elapsedMs in reports");

  auto* ice = app.add_subcommand("ice", "Square ice configuration and statistics of an ASM");
  ice->add_option("--input", input, "ASM text file, - for stdin");
  addFormat(ice);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count) {
      Integer c = countClosedForm(n);
      json j;
      j["n"] = n;
      j["count"] = integerJson(c);
      if (enumerate) {
        std::uint64_t e = reduceTriangles(n, std::uint64_t{0}, [](std::uint64_t& a, const TriangleView&) { ++a; });
        j["enumerated"] = e;
        j["agree"] = Integer(std::to_string(e)) == c;
      }
      if (format == "text") {
        std::cout << c.get_str() << "\n";
      } else {
        emit(j);
      }
      return 0;
    }

    if (*genfun) {
      EnumOptions opt;
      opt.allowBeyondCeiling = deep;
      MPoly g;
      if (hsasm) {
        if (n % 2 == 0) throw UnsupportedSize("--hsasm needs odd n");
        g = n == 1 ? MPoly(1) : hsasmGenFunSymmetric((n - 1) / 2);
      } else {
        g = genFun(n, opt);
      }
      if (format == "text") {
        std::cout << g.toString() << "\n";
      } else {
        json j;
        j["n"] = n;
        j[hsasm ? "B" : "genfun"] = g.toString();
        emit(j);
      }
      return 0;
    }

    if (*matrix) {
      AnyMatrix m = buildNamedMatrix(name, n);
      if (format == "text") {
        for (const auto& row : matrixStrings(m)) {
          for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? "\t" : "") << row[j];
          std::cout << "\n";
        }
        if (withDet) std::cout << "det = " << matrixDet(m) << "\n";
      } else {
        json j;
        j["name"] = name;
        j["n"] = n;
        j["ring"] = ringName(m);
        j["entries"] = matrixJson(m);
        if (withDet) j["det"] = matrixDet(m);
        emit(j);
      }
      return 0;
    }

    if (*partition) {
      RationalSampler s(seed);
      SpectralParams p = s.drawSpectral(n);
      json j;
      j["n"] = n;
      j["seed"] = seed;
      j["q"] = p.q.get_str();
      json a = json::array();
      json b = json::array();
      for (const auto& x : p.a) a.push_back(x.get_str());
      for (const auto& x : p.b) b.push_back(x.get_str());
      j["a"] = a;
      j["b"] = b;
      Rational ik = ikZn(n, p);
      json routes;
      if (n <= 6) routes["brute"] = bruteZn(n, p).get_str();
      routes["izergin-korepin"] = ik.get_str();
      routes["uv"] = ikZnUV(n, p).get_str();
      routes["lascoux"] = znViaLascoux(n, p).get_str();
      bool agree = true;
      for (const auto& [key, v] : routes.items()) agree = agree && v.get<std::string>() == ik.get_str();
      j["Z"] = routes;
      j["agree"] = agree;
      emit(j);
      return agree ? 0 : 1;
    }

    if (*verify) {
      Suite suite = parseSuite(suiteName);
      auto reports = runSuite(suite, maxN, seed, deep);
      json j;
      j["suite"] = suiteName;
      j["maxN"] = maxN;
      j["seed"] = seed;
      j["deep"] = deep;
      bool pass = true;
      json list = json::array();
      const Report* firstFailure = nullptr;
      for (const auto& r : reports) {
        list.push_back(reportJson(r, timings));
        if (!r.pass && !firstFailure) firstFailure = &r;
        pass = pass && r.pass;
      }
      j["pass"] = pass;
      j["reports"] = list;
      emit(j);
      if (firstFailure) {
        std::cerr << reportJson(*firstFailure, timings).dump() << "\n";
        return 1;
      }
      return 0;
    }

    if (*conjecture) {
      if (maxN > (deep ? 9 : 7))
        throw CeilingExceeded("conjecture: max-n " + std::to_string(maxN) + " exceeds " + (deep ? "9" : "7 (use --deep)"));
      EnumOptions opt;
      opt.allowBeyondCeiling = deep;
      json j;
      j["maxN"] = maxN;
      json bs = json::array();
      for (const auto& b : kuperbergB(maxN, opt)) {
        json e;
        e["index"] = b.index;
        e["B"] = b.poly.toString();
        bs.push_back(e);
      }
      j["kuperberg"] = bs;
      json list = json::array();
      bool pass = true;
      const Report* firstFailure = nullptr;
      std::vector<ConjectureResult> results;
      for (int k = 2; k <= maxN; ++k) results.push_back(conjectureCheck(k, opt));
      for (const auto& r : results) {
        json e;
        e["n"] = r.report.n;
        e["pass"] = r.report.pass;
        if (r.report.witness) e["witness"] = *r.report.witness;
        e["B_index"] = r.bIndex;
        if (r.b) e["B_polynomial"] = r.b->toString();
        e["nonnegative"] = r.nonnegative;
        if (timings) e["elapsedMs"] = r.report.elapsedMs;
        list.push_back(e);
        if (!r.report.pass && !firstFailure) firstFailure = &r.report;
        pass = pass && r.report.pass;
      }
      j["pass"] = pass;
      j["results"] = list;
      emit(j);
      if (firstFailure) {
        std::cerr << reportJson(*firstFailure, timings).dump() << "\n";
        return 1;
      }
      return 0;
    }

    if (*ice) {
      Asm a = Asm::parse(readAll(input));
      IceState s = asmToIce(a);
      StateCounts c = stateCounts(s);
      Stats st = a.stats();
      if (format == "text") {
        std::cout << s.toText();
        std::cout << "mu=" << st.mu << " f=" << st.f << " ell=" << st.ell << "\n";
      } else {
        json j;
        j["n"] = a.order();
        json rows = json::array();
        std::istringstream lines(s.toText());
        for (std::string line; std::getline(lines, line);) rows.push_back(line);
        j["ice"] = rows;
        json counts = json::array();
        for (int k = 1; k <= 6; ++k) counts.push_back(c[k]);
        j["stateCounts"] = counts;
        j["mu"] = st.mu;
        j["f"] = st.f;
        j["ell"] = st.ell;
        emit(j);
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
