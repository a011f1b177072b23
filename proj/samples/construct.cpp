// Builds i for m = 6 from every admissible k and checks each polynomial
// against all 4096 deltas.

#include <iostream>

#include "nihopp/nihopp.hpp"

int main() {
  using namespace nihopp;
  const int m = 6;
  const Field F = Field::make(2 * m);
  std::cout << to_json(F).dump() << "\n";
  for (int k = 1; k <= m - 1; ++k) {
    for (auto cls : {ResidueClass::One, ResidueClass::TwoPowK}) {
      try {
        const auto w = construct_i(m, k, cls);
        Json line = to_json(w);
        if (w.applicable) {
          const auto sum = verify_construction(F, m, w.i, DeltaPolicy::all());
          line["deltas_passed"] = sum.passed();
        }
        std::cout << line.dump() << "\n";
      } catch (const NoSolution& e) {
        std::cout << "k=" << k << ": " << e.what() << "\n";
      }
    }
  }
}
