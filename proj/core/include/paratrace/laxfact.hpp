#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "paratrace/adj.hpp"
#include "paratrace/circle.hpp"

namespace paratrace {

// A disk-refinement labeled in the walking adjunction: a sign per marked
// point and a 1-cell per arc (arc i = lift orbit i) whose endpoints are the
// signs of the arc's start and end points.
struct LaxObject {
  CircleConfig config;
  std::vector<AdjObj> point_labels;  // indexed by position in config.points
  std::vector<OneCell> arc_labels;   // indexed by lift orbit

  bool operator==(const LaxObject&) const = default;
};

// A refinement move together with a comparison 2-cell per target arc, from
// the horizontal composite of the source labels over the arc's preimage to
// the target label (empty preimages compare against an identity 1-cell).
struct LaxMorphism {
  LaxObject src;
  LaxObject dst;
  CircleMorphism move;
  std::vector<TwoCell> gamma;  // one per dst arc

  bool operator==(const LaxMorphism&) const = default;
};

std::optional<std::string> validate(const LaxObject& o);
std::optional<std::string> validate(const LaxMorphism& m);

// Horizontal composite of the source labels over a fiber of arc lifts
// (increasing order, later arcs on the left); empty fiber = id_fallback.
OneCell fiber_composite(const LaxObject& o, const std::vector<long long>& fiber,
                        AdjObj fallback);

LaxMorphism identity_lax(const LaxObject& o);
LaxMorphism compose_lax(const LaxMorphism& m2, const LaxMorphism& m1);

struct Membership {
  bool in_plus_monad = false;   // all points +
  bool in_minus_monad = false;  // all points -
  bool in_unit_image = false;   // all points -, all arcs id_-
  bool in_counit_image = false; // all points +, all arcs id_+
  bool in_A0 = false;           // both signs present
  bool in_Aplus = false;        // some +
  bool in_Aminus = false;       // some -

  bool operator==(const Membership&) const = default;
};

Membership classify(const LaxObject& o);

// Closure of the distinguished subcategories along the morphism: source
// membership propagates to the target for the two monads and the counit
// image; the unit image is closed the other way (target membership forces
// source membership).
bool left_fibration_check(const LaxMorphism& m);

// Every comparison 2-cell is invertible (= an identity, the hom-categories
// being skeletal orders).
bool is_cocartesian(const LaxMorphism& m);

struct Reflection {
  LaxObject object;
  LaxMorphism unit;
};

// Deletes every minus point, composing arc labels across them; the unit has
// identity comparison cells.  Requires at least one plus point.
Reflection plus_reflection(const LaxObject& o);
Reflection minus_reflection(const LaxObject& o);

// The -/+, L/R mirror symmetry on objects (block counts are preserved).
LaxObject swap_labels(const LaxObject& o);

// Sample generators for the property suites (deterministic given the rng).
LaxObject random_lax_object(std::mt19937_64& rng, std::size_t max_points,
                            std::size_t max_blocks);
LaxMorphism random_lax_morphism(std::mt19937_64& rng, const LaxObject& src,
                                std::size_t max_blocks);

// All h with compose_lax(h, refl.unit) == m, by exhausting comparison cells
// with target blocks bounded by the blocks appearing in m.dst.
std::vector<LaxMorphism> factor_through(const LaxMorphism& m, const Reflection& refl);

}  // namespace paratrace
