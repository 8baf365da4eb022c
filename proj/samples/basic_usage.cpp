// Computes the curly wedge of D8 and Q8, finds an isoclinism between them and
// transports the wedge along it.

#include <iostream>

#include "grouplab/builtin.hpp"
#include "grouplab/isoclinism.hpp"
#include "grouplab/wedge.hpp"

int main() {
  using namespace grouplab;
  const FiniteGroup d8 = builtin::dihedral(4);
  const FiniteGroup q8 = builtin::quaternion8();

  const auto w1 = compute_wedge(d8, WedgeVariant::Curly);
  const auto w2 = compute_wedge(q8, WedgeVariant::Curly);
  std::cout << d8.label() << ": |G⋏G| = " << w1.order() << ", B0~ = " << kernel_invariants(w1).to_string() << '\n';
  std::cout << q8.label() << ": |G⋏G| = " << w2.order() << ", B0~ = " << kernel_invariants(w2).to_string() << '\n';
  std::cout << "multiplier orders: " << multiplier_order(d8) << ", " << multiplier_order(q8) << '\n';

  const auto witness = are_isoclinic(d8, q8);
  if (!witness) {
    std::cout << "not isoclinic\n";
    return 1;
  }
  const auto gamma = build_gamma(*witness, w1, w2);
  std::cout << "isoclinic; gamma maps " << w1.order() << " elements bijectively, kernel restriction on "
            << gamma.kernel1.group.order() << " elements\n";
}
