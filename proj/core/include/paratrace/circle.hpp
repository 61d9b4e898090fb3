#pragma once

#include <vector>

#include "paratrace/paracyclic.hpp"
#include "paratrace/ring.hpp"

namespace paratrace {

// Marked points on S^1 = R/Z, strictly increasing in [0,1); arcs are the
// complementary gaps, counterclockwise (increasing angle).  Arc i starts at
// points[i] and ends at points[(i+1) % r].
struct CircleConfig {
  std::vector<Rat> points;

  bool operator==(const CircleConfig&) const = default;
  bool valid() const;
  std::size_t arc_count() const { return points.size(); }
};

// A morphism of disk-refinements, recorded by its Z-equivariant map on the
// universal-cover lifts of the arcs.
struct CircleMorphism {
  CircleConfig src;
  CircleConfig dst;
  ParaMap para_map;

  bool operator==(const CircleMorphism&) const = default;
};

ParaObj to_para(const CircleConfig& c);
ParaMap to_para_map(const CircleMorphism& m);
CircleConfig from_para(ParaObj n);

// Base-arc convention: the arc containing angle 0 (or the arc starting at the
// least point when 0 is a point) is orbit 0 of the lift.
std::size_t base_arc(const CircleConfig& c);

// Start angle of the lifted arc with orbit index k (a rational in R, not R/Z).
Rat lift_start(const CircleConfig& c, long long k);

// Orbit index of the lifted arc containing the lifted angle x
// (x must not be a lift of a marked point).
long long lift_index(const CircleConfig& c, const Rat& x);

// Arc index (in the points list) underlying lift orbit k.
std::size_t arc_of_lift(const CircleConfig& c, long long k);

CircleMorphism identity_morphism(const CircleConfig& c);
CircleMorphism compose_morphism(const CircleMorphism& m2, const CircleMorphism& m1);

// Deletes the end point of arc arc_index (its two neighbouring arcs fuse).
CircleMorphism merge_points(const CircleConfig& c, std::size_t arc_index);

// Adds a marked point at the given angle.
CircleMorphism insert_point(const CircleConfig& c, const Rat& angle);

CircleConfig act_rotation(const CircleConfig& c, const Rat& theta);
// Rotation as a morphism; theta may be any rational, and full loops are
// tracked (theta = 1 gives z_action(kMonodromySign, id)).
CircleMorphism act_rotation_morphism(const CircleConfig& c, const Rat& theta);

// A positive (counterclockwise) full rotation acts on lifts as
// z_action(kMonodromySign, -).
inline constexpr int kMonodromySign = +1;

}  // namespace paratrace
