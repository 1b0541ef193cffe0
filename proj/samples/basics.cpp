// Small tour of the library: enumerate, build a determinant, compare.

#include <iostream>

#include "asmlab/asmlab.hpp"

using namespace asmlab;

int main() {
  const int n = 4;

  MPoly a = genFun(n);
  std::cout << "A_" << n << "(z, rho, tau) = " << a.toString() << "\n";

  // A_n(2 + q + 1/q, 1, 1) from enumeration and from Aigner's determinant.
  const MPoly q = MPoly::qPower(1);
  MPoly viaEnum = a.specialize(Var::rho, 1).specialize(Var::tau, 1).substitute(Var::z, 2 + q + MPoly::qPower(-1));
  MPoly viaDet = bareissDet(aignerMatrix(n));
  std::cout << "by enumeration: " << viaEnum.toString() << "\n";
  std::cout << "by determinant: " << viaDet.toString() << "\n";
  std::cout << (viaEnum == viaDet ? "equal" : "DIFFERENT") << "\n";

  // The same count at q = I, over the Gaussian rationals.
  std::cout << "det M_A at n=" << n << ": " << bareissDet(aignerAtIMatrix(n)).toString() << "\n";

  // Z_n at a seeded generic point, brute force against Izergin-Korepin.
  RationalSampler sampler(7);
  SpectralParams p = sampler.drawSpectral(3);
  std::cout << "Z_3 brute " << bruteZn(3, p).get_str() << ", determinant " << ikZn(3, p).get_str() << "\n";

  Report r = theorem1Check(3);
  std::cout << r.check << " n=" << r.n << ": " << (r.pass ? "pass" : "fail") << "\n";
  return viaEnum == viaDet && r.pass ? 0 : 1;
}
