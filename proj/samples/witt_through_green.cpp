// Reads Witt vector arithmetic off the Green functor side: the Teichmuller
// lift of r over C_n, its bottom restriction r^n and its classical Witt
// components.

#include "mackey/wittgreen.hpp"

#include <iostream>

int main() {
  using namespace mackey;
  const long n = 4;
  GreenWittVectors w = witt_green(BaseRing::integers(), n);
  const MackeyFunctor& m = w.underlying();
  for (long r : {2L, 3L, -1L}) {
    Vec t = teichmuller_green(w, r);
    std::cout << "t(" << r << ") = " << to_classical(w, n, t) << ", restricted to the bottom: " << (m.res(n, 1) * t)[0] << '\n';
  }
  ClassicalComparison c = compare_with_classical(BaseRing::parse("F_2"), n);
  std::cout << "F_2, n = " << n << ": " << c.green_group << " against " << c.classical_group << ", " << c.report.str() << '\n';
}
