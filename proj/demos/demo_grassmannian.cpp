// Walkthrough on Gr(2,4): enumerate the GKM graph, restrict the tautological
// bundles to invariant curves, certify positivity, and compute a Seshadri
// constant. Build and run:
//   cmake --build build --target demo_grassmannian && ./build/demos/demo_grassmannian

#include <iostream>

#include "gpnef/gpnef.hpp"

using namespace gpnef;

int main() {
  // Gr(2,4) = SL4/P with node 2 omitted.
  const RootSystem rs = build_root_system(CartanType::parse("A3"));
  const Parabolic p = Parabolic::from_omitted(rs, {2});
  const GkmGraph g = invariant_curves(rs, p);

  std::cout << "Gr(2,4): " << g.points().size() << " fixed points, "
            << g.curves().size() << " invariant curves, dimension "
            << g.dimension() << "\n\n";

  const BundleExpr q = BundleExpr::taut_quot();
  std::cout << "Q restricted to each curve:\n";
  for (const InvariantCurve& c : g.curves())
    std::cout << "  curve " << c.id << ": " << restrict(q, g, c).to_string()
              << "\n";

  for (const BundleExpr& e :
       {q, BundleExpr::tangent(),
        BundleExpr::tensor(q, BundleExpr::det(q)),
        parse_bundle("dual(S)*det(Q)")}) {
    const PositivityVerdict v = positivity(e, g);
    std::cout << "\n" << e.to_string() << ": " << to_string(v.status)
              << " (min exponent " << v.global_min << " on curve "
              << v.witness.curve << ")";
  }

  const SeshadriResult s = seshadri(q, g, 0);
  std::cout << "\n\nSeshadri constant of Q at fixed point 0: "
            << s.value.to_string() << "\n";
  return 0;
}
