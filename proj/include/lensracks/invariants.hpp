#pragma once

#include "lensracks/poly.hpp"
#include "lensracks/solver.hpp"

namespace lensracks {

struct InvariantBundle {
  long long phi_z = 0;
  Poly phi_w;     // variables q1..qn
  Poly phi_sym;   // variable x
  Poly phi_wsym;  // variables q1..qn, x
};

// The induced permutation of X: the closure pairs extended by fixing every
// element outside the closure domain. Throws ClosureConflict when the pairs
// are inconsistent, which cannot happen for solver-produced homomorphisms.
Permutation symmetry_permutation(const LensDiagram& d, const RackTable& t, const Homomorphism& f);

// All four counting invariants over the framing classes (Z_N)^n.
InvariantBundle compute_invariants(const LensDiagram& d, const RackTable& t,
                                   KernelMode mode = KernelMode::Closure,
                                   bool use_oracle = false);

long long integral_invariant(const LensDiagram& d, const RackTable& t,
                             KernelMode mode = KernelMode::Closure);
Poly writhe_enhanced_invariant(const LensDiagram& d, const RackTable& t,
                               KernelMode mode = KernelMode::Closure);
Poly symmetry_invariant(const LensDiagram& d, const RackTable& t,
                        KernelMode mode = KernelMode::Closure);
Poly writhe_symmetry_invariant(const LensDiagram& d, const RackTable& t,
                               KernelMode mode = KernelMode::Closure);

}  // namespace lensracks
