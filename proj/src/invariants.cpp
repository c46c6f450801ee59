#include "lensracks/invariants.hpp"

namespace lensracks {

Permutation symmetry_permutation(const LensDiagram& d, const RackTable& t,
                                 const Homomorphism& f) {
  auto sigma = sigma_closure(d, t, f);
  if (!sigma)
    fail(Err::ClosureConflict,
         "induced map has conflicting pairs; input is not a rack homomorphism");
  std::vector<int> images(t.order());
  for (int u = 1; u <= t.order(); ++u) {
    auto it = sigma->find(u);
    images[u - 1] = it == sigma->end() ? u : it->second;
  }
  return Permutation(std::move(images));
}

InvariantBundle compute_invariants(const LensDiagram& d, const RackTable& t, KernelMode mode,
                                   bool use_oracle) {
  const int n = d.component_count();
  InvariantBundle b;
  for (int c = 1; c <= n; ++c) b.phi_w.vars.push_back("q" + std::to_string(c));
  b.phi_sym.vars = {"x"};
  b.phi_wsym.vars = b.phi_w.vars;
  b.phi_wsym.vars.push_back("x");

  for (const auto& [w, dw] : d.framing_representatives(t.rank())) {
    auto homs = use_oracle ? oracle_enumerate_homomorphisms(dw, t, mode)
                           : enumerate_homomorphisms(dw, t, mode);
    b.phi_z += static_cast<long long>(homs.size());
    b.phi_w.add(w, static_cast<long long>(homs.size()));
    for (const auto& f : homs) {
      int e = static_cast<int>(symmetry_permutation(dw, t, f).order()) - 1;
      b.phi_sym.add({e}, 1);
      std::vector<int> we = w;
      we.push_back(e);
      b.phi_wsym.add(we, 1);
    }
  }
  return b;
}

long long integral_invariant(const LensDiagram& d, const RackTable& t, KernelMode mode) {
  return compute_invariants(d, t, mode).phi_z;
}

Poly writhe_enhanced_invariant(const LensDiagram& d, const RackTable& t, KernelMode mode) {
  return compute_invariants(d, t, mode).phi_w;
}

Poly symmetry_invariant(const LensDiagram& d, const RackTable& t, KernelMode mode) {
  return compute_invariants(d, t, mode).phi_sym;
}

Poly writhe_symmetry_invariant(const LensDiagram& d, const RackTable& t, KernelMode mode) {
  return compute_invariants(d, t, mode).phi_wsym;
}

}  // namespace lensracks
