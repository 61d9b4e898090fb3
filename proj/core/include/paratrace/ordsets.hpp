#pragma once

#include <cstddef>
#include <vector>

namespace paratrace {

// Skeletal finite linear order {0 < 1 < ... < size-1}; size 0 is empty.
struct FinOrd {
  std::size_t size = 0;
  bool operator==(const FinOrd&) const = default;
};

struct MonotoneMap {
  FinOrd src;
  FinOrd dst;
  std::vector<std::size_t> values;  // weakly increasing, in [0, dst.size)

  bool operator==(const MonotoneMap&) const = default;
  bool valid() const;
  static MonotoneMap identity(FinOrd x);
};

MonotoneMap compose_monotone(const MonotoneMap& g, const MonotoneMap& f);

FinOrd join(FinOrd a, FinOrd b);
MonotoneMap join(const MonotoneMap& a, const MonotoneMap& b);

// Marked orders: MIN marks element 0, MAX marks element size-1.
struct MarkedOrd {
  std::size_t size = 0;
  bool min_marked = false;
  bool max_marked = false;

  bool operator==(const MarkedOrd&) const = default;
  bool valid() const;  // doubly marked needs size >= 2
};

struct MarkedMap {
  MarkedOrd src;
  MarkedOrd dst;
  MonotoneMap underlying;

  bool operator==(const MarkedMap&) const = default;
  bool valid() const;  // marks equal, mark preservation
  static MarkedMap identity(MarkedOrd x);
};

MarkedMap compose_marked(const MarkedMap& g, const MarkedMap& f);

// [p] |-> Hom_Delta([p], [1]) as a doubly-marked order of size p+2, and the
// contravariant precomposition action on maps.
MarkedOrd delta_to_interval(FinOrd p);
MarkedMap delta_to_interval_map(const MonotoneMap& phi);

// Order reversal; swaps MIN/MAX marks, contravariant on maps.
MarkedOrd reverse(MarkedOrd x);
MarkedMap reverse(const MarkedMap& f);

std::vector<MonotoneMap> enumerate_monotone(FinOrd src, FinOrd dst);
std::vector<MarkedMap> enumerate_marked(MarkedOrd src, MarkedOrd dst);

}  // namespace paratrace
