#pragma once

#include <cstdint>
#include <vector>

#include "paratrace/ordsets.hpp"

namespace paratrace {

// The linear order Z with Z acting by x |-> x + orbits.
struct ParaObj {
  std::size_t orbits = 1;
  bool operator==(const ParaObj&) const = default;
};

// Z-equivariant monotone self-map of Z, stored by its values on the
// fundamental domain {0, ..., m-1}; extended by f(x + m) = f(x) + n.
struct ParaMap {
  ParaObj src;  // m orbits
  ParaObj dst;  // n orbits
  std::vector<long long> values;

  bool operator==(const ParaMap&) const = default;
  bool valid() const;  // weakly increasing, v_{m-1} <= v_0 + n
  static ParaMap identity(ParaObj x);
};

long long evaluate(const ParaMap& f, long long x);

ParaMap compose(const ParaMap& g, const ParaMap& f);

// The hom Z-action: (r . f)(x) = f(x) + r * n.
ParaMap z_action(long long r, const ParaMap& f);

// The translation automorphism x |-> x + c of the object with n orbits.
ParaMap translation(ParaObj n, long long c);

// Upper Galois adjoint f^v(y) = max{ x : f(x) <= y }.  Contravariant;
// the double dual is conjugation by translation(-1):
// f^vv = translation(dst,-1) . f . translation(src,+1).
ParaMap poincare_dual(const ParaMap& f);

// Delta -> paracyclic, [p] |-> the object with p+1 orbits (Z-fold join).
ParaObj from_simplex(FinOrd p);
ParaMap from_simplex(const MonotoneMap& phi);

struct ParaFactorization {
  ParaMap surj;
  ParaMap inj;
};
ParaFactorization surj_inj_factorize(const ParaMap& f);

// All maps m -> n with v_0 in [-offset_bound, offset_bound].
std::vector<ParaMap> enumerate_maps(ParaObj m, ParaObj n, long long offset_bound);

// Smallest x with f(x) >= 0; the preimage of one fundamental domain
// [0, n) of the target is exactly {x0, ..., x0 + m - 1}.
long long window_start(const ParaMap& f);

// Fibers f^{-1}(j) for j in [0, n), listed as lifts in increasing order.
std::vector<std::vector<long long>> fibers(const ParaMap& f);

}  // namespace paratrace
