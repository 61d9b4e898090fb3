#pragma once

#include <vector>

#include "paratrace/algebra.hpp"
#include "paratrace/matcat.hpp"

namespace paratrace {

// Cyclic bar complex C_p(A) = A^{(x)(p+1)} with its simplicial and cyclic
// operators.  Slot 0 is the most significant tensor index (row-major).
//
// Conventions (validated by the b^2 = B^2 = bB + Bb = 0 contract):
//   d_i = multiply slots i, i+1 (i < p);  d_p = (a_p a_0) (x) a_1 ... a_{p-1}
//   s_j = insert the unit after slot j
//   t   = (-1)^p * rotation (a_0,...,a_p) |-> (a_p, a_0, ..., a_{p-1})
//   b   = sum (-1)^i d_i,  N = sum_{i=0}^{p} t^i,
//   s_extra = insert the unit in slot 0,  B = (1 - t) . s_extra . N
class HochschildComplex {
 public:
  explicit HochschildComplex(AlgebraSC a);

  const AlgebraSC& algebra() const { return a_; }
  std::size_t chain_dim(std::size_t p) const;  // dim^{p+1}

  ExactMatrix face(std::size_t i, std::size_t p) const;        // C_p -> C_{p-1}
  ExactMatrix degeneracy(std::size_t j, std::size_t p) const;  // C_p -> C_{p+1}
  ExactMatrix rotation(std::size_t p) const;                   // unsigned t
  ExactMatrix t(std::size_t p) const;                          // signed
  ExactMatrix b(std::size_t p) const;                          // C_p -> C_{p-1}
  ExactMatrix N(std::size_t p) const;
  ExactMatrix s_extra(std::size_t p) const;                    // C_p -> C_{p+1}
  ExactMatrix B(std::size_t p) const;                          // C_p -> C_{p+1}

 private:
  AlgebraSC a_;
  ExactMatrix mu_;
  ExactMatrix unit_;
};

// HH_n = ker b_n / im b_{n+1} for 0 <= n <= n_max.  Over a field the
// description is a dimension; over Z free rank plus elementary divisors.
std::vector<ModuleDescription> hh_ranks(const AlgebraSC& a, std::size_t n_max);

// The matrix-trace functional on C_0 = End(V); checks that it kills im b_1.
struct TraceFunctional {
  ExactMatrix row;          // 1 x d^2
  bool descends;            // vanishes on boundaries
  std::size_t rank_on_hh0;  // rank of the induced functional on HH_0
};
TraceFunctional trace_hh0(const DualityData& data);

// Truncated negative cyclic homology: homology of the total complex of the
// (b, B)-bicomplex restricted to columns 0..w-1, Tot_n = (+)_j C_{n+2j}.
// Degrees >= -2(w-1) are reliable; others are reported but flagged.
struct HCMinusEntry {
  long long degree;
  std::size_t dimension;
  bool reliable;
};
std::vector<HCMinusEntry> hc_minus_truncated(const AlgebraSC& a, std::size_t weight,
                                             long long degree_lo, long long degree_hi);

}  // namespace paratrace
