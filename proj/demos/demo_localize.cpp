// Minimal usage example: build a diagram, apply the localization functor,
// and print the resulting matrix of fractions.

#include <iostream>

#include "heckeloc/diagram.hpp"

using namespace heckeloc;

int main() {
  auto A2 = builtin::make("A2");
  LambdaEval ev(A2);

  // The 6-valent vertex of the pair (s, t).
  auto vertex = d_pair(*A2, GenKind::Vertex2m, 0, 1, 0);
  LocMatrix m = ev.eval(vertex);
  std::cout << "Lambda(6-valent vertex) on A2, nonzero entries:\n";
  for (const auto& [rc, v] : m.entries())
    std::cout << "  row " << sub_of_index(rc.first, 3).to_string() << "  col "
              << sub_of_index(rc.second, 3).to_string() << "  " << v.to_string() << "\n";

  // A relation: merge after split is the zero morphism.
  auto needle = d_vcomp(d_onecolor(*A2, GenKind::Merge, 0), d_onecolor(*A2, GenKind::Split, 0));
  std::cout << "Lambda(needle) is zero: " << (ev.eval(needle).is_zero() ? "yes" : "no") << "\n";
  return 0;
}
