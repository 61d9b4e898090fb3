#pragma once

#include <cstddef>
#include <vector>

#include "paratrace/ordsets.hpp"

namespace paratrace {

enum class AdjObj { Minus, Plus };

// Alternating word in L: - -> + and R: + -> -, encoded by endpoints and the
// number of RL-blocks (LR-blocks for + -> +):
//   (- -> -): (RL)^k      (- -> +): L(RL)^k
//   (+ -> -): (RL)^k R    (+ -> +): (LR)^k
struct OneCell {
  AdjObj src = AdjObj::Minus;
  AdjObj dst = AdjObj::Minus;
  std::size_t blocks = 0;

  bool operator==(const OneCell&) const = default;
  static OneCell id(AdjObj x) { return OneCell{x, x, 0}; }
};

OneCell hcompose(const OneCell& g, const OneCell& f);

// 2-cell of the walking adjunction.  `map` is a monotone value list whose
// reading depends on the endpoint pattern:
//   (- -> -): O-map  src blocks -> dst blocks                (covariant)
//   (+ -> +): O-map  dst blocks -> src blocks                (O^op, stored
//             contravariantly: entry i is the source block that target
//             block i comes from)
//   (- -> +): marked map on sizes blocks+1, element 0 = the leading L (MIN)
//   (+ -> -): marked map on sizes blocks+1, last element = trailing R (MAX)
// Blocks are enumerated from the outermost letter inward; in a composite
// g . f the blocks of g precede those of f (word concatenation).
struct TwoCell {
  OneCell src;
  OneCell dst;
  std::vector<std::size_t> map;

  bool operator==(const TwoCell&) const = default;
  bool valid() const;
  bool is_identity() const;
};

TwoCell identity_two_cell(const OneCell& w);
TwoCell vcompose(const TwoCell& beta, const TwoCell& alpha);
TwoCell hcompose(const TwoCell& beta, const TwoCell& alpha);

TwoCell whisker_left(const OneCell& g, const TwoCell& alpha);   // id_g . alpha
TwoCell whisker_right(const TwoCell& beta, const OneCell& f);   // beta . id_f

TwoCell unit_eta();    // id_- => RL
TwoCell counit_eps();  // LR => id_+

// Both triangle identities, computed via the join calculus.
std::pair<bool, bool> triangle_check();

std::vector<OneCell> enumerate_one_cells(AdjObj s, AdjObj t, std::size_t max_blocks);
std::vector<TwoCell> enumerate_two_cells(const OneCell& f, const OneCell& g);

}  // namespace paratrace
