// Prints the norm of F_p to C_{p^k} level by level, with the orders of the
// restriction kernels.

#include "mackey/norm.hpp"

#include <iostream>

int main() {
  using namespace mackey;
  for (long p : {2L, 3L}) {
    NormFunctor nf(BaseRing::integers_mod(p), p * p * p);
    MackeyFunctor m = nf.mackey().canonicalized();
    std::cout << "norm of F_" << p << " to C_" << m.n() << '\n';
    for (long d : m.divisors()) std::cout << "  level " << d << ": " << m.level(d).str() << '\n';
    for (auto [d, e] : m.edges()) {
      Subquotient k = kernel(AbHom{m.level(e), m.level(d), m.res_step(e, d)});
      std::cout << "  ker res " << e << "->" << d << ": " << k.group.str() << '\n';
    }
  }
}
