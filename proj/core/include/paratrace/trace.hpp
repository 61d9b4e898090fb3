#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paratrace/algebra.hpp"
#include "paratrace/circle.hpp"
#include "paratrace/matcat.hpp"

namespace paratrace {

// A disk-refinement of S^1 with a duality datum at every marked point and an
// endomorphism of V on every arc (arc i = lift orbit i, counterclockwise from
// the base arc).
struct LabeledCircle {
  CircleConfig config;
  DualityData duality;
  std::vector<ExactMatrix> arc_labels;
};

std::optional<std::string> validate(const LabeledCircle& lc);

// The scalar of the labeled circle: eta at every point, cyclic reassociation
// of the point pairs into arc pairs, the arc endomorphisms, eps on every arc.
Rat evaluate(const LabeledCircle& lc);

// Same scalar via the contracted form tr(E phi_{r-1} H ... E phi_0 H), where
// H and E are eta/eps reshaped to d x d.  Used as the fast path in the wide
// invariance scans; agrees with evaluate() by construction, and both are
// tested against the classical trace.
Rat evaluate_contracted(const LabeledCircle& lc);

// Push labels forward along a refinement move: each target arc carries the
// product of the labels over its preimage, counterclockwise-first applied
// first; empty preimages (inserted arcs) get the identity.
LabeledCircle transport(const LabeledCircle& lc, const CircleMorphism& move);

// evaluate is invariant under all r cyclic shifts of the label list and under
// rational rotations of the underlying configuration.
bool cyclic_invariance_check(const std::vector<ExactMatrix>& labels,
                             const DualityData& duality);

// The cyclic analogue of monad_functor: a paracyclic map with m source and n
// target orbits becomes a matrix A^{(x)m} -> A^{(x)n}, multiplying each fiber
// in the order induced by the lift (wraparound fibers included).
ExactMatrix hochschild_diagram(const AlgebraSC& a, const ParaMap& f);

// The cone-point inclusion 1 -> A^{(x)n} (units in every slot).
ExactMatrix cone_inclusion(const AlgebraSC& a, ParaObj n);

}  // namespace paratrace
