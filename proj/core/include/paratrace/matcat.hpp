#pragma once

#include <vector>

#include "paratrace/matrix.hpp"

namespace paratrace {

// Duality datum for a free module V of rank dim:
//   eta: 1 -> V^dual (x) V   (dim^2 x 1)
//   eps: V (x) V^dual -> 1   (1 x dim^2)
// Tensor flattening is row-major throughout: the pair (i, j) has index i*dim+j.
struct DualityData {
  std::size_t dim = 1;
  ExactMatrix eta;
  ExactMatrix eps;

  ExactRing ring() const { return eta.ring(); }
  // Both zig-zag identities, exactly.
  bool validate() const;
};

DualityData canonical_duality(std::size_t d, ExactRing ring);

// Permutation matrix reordering tensor factors: factor k of the source goes
// to slot perm[k] of the target.  Functorial: symmetry(q o p) =
// symmetry(q after p's dims) * symmetry(p).
ExactMatrix symmetry(const std::vector<std::size_t>& dims,
                     const std::vector<std::size_t>& perm, ExactRing ring);

// Words in the dualizable generator: L stands for V, R for V^dual.
enum class Letter { L, R };
using Word = std::vector<Letter>;

std::size_t word_dimension(const Word& w, std::size_t d);

// Generator 2-cells of the word calculus, as matrices.
// eta insertion: word -> word with (R, L) inserted at position pos.
ExactMatrix eta_insertion(const DualityData& data, const Word& word, std::size_t pos);
// eps contraction of an adjacent (L, R) pair at positions (pos, pos+1).
ExactMatrix eps_contraction(const DualityData& data, const Word& word, std::size_t pos);

}  // namespace paratrace
