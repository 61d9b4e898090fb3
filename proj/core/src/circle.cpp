#include "paratrace/circle.hpp"

#include <algorithm>
#include <stdexcept>

namespace paratrace {

namespace {

long long floordiv(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

long rat_floor(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return static_cast<long>(q.get_si());
}

Rat frac_part(const Rat& x) { return x - rat_floor(x); }

// Smallest point lift strictly greater than x.
Rat next_point_lift(const CircleConfig& c, const Rat& x) {
  Rat xf = frac_part(x);
  for (const Rat& p : c.points)
    if (p > xf) return x + (p - xf);
  return x + (c.points.front() + 1 - xf);
}

}  // namespace

bool CircleConfig::valid() const {
  if (points.empty()) return false;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] < 0 || points[i] >= 1) return false;
    if (i > 0 && points[i] <= points[i - 1]) return false;
  }
  return true;
}

ParaObj to_para(const CircleConfig& c) { return ParaObj{c.points.size()}; }
ParaMap to_para_map(const CircleMorphism& m) { return m.para_map; }

CircleConfig from_para(ParaObj n) {
  CircleConfig c;
  c.points.reserve(n.orbits);
  for (std::size_t i = 0; i < n.orbits; ++i) {
    Rat p(static_cast<long>(i), static_cast<long>(n.orbits));
    p.canonicalize();
    c.points.push_back(p);
  }
  return c;
}

std::size_t base_arc(const CircleConfig& c) {
  return c.points.front() == 0 ? 0 : c.points.size() - 1;
}

Rat lift_start(const CircleConfig& c, long long k) {
  long long r = static_cast<long long>(c.points.size());
  long long idx = static_cast<long long>(base_arc(c)) + k;
  long long wraps = floordiv(idx, r);
  std::size_t b = static_cast<std::size_t>(idx - wraps * r);
  Rat q = c.points[b] + static_cast<long>(wraps);
  if (c.points.front() != 0) q -= 1;  // base arc starts one turn back, below 0
  return q;
}

long long lift_index(const CircleConfig& c, const Rat& x) {
  std::size_t r = c.points.size();
  Rat xf = frac_part(x);
  // Arc (in point-index terms) whose interior contains xf.
  std::size_t i;
  if (xf < c.points.front() || xf > c.points.back())
    i = r - 1;
  else {
    i = 0;
    while (i + 1 < r && c.points[i + 1] < xf) ++i;
  }
  long long beta = static_cast<long long>(base_arc(c));
  long long k0 = static_cast<long long>(i) - beta;
  k0 -= static_cast<long long>(r) * floordiv(k0, static_cast<long long>(r));
  k0 %= static_cast<long long>(r);
  Rat off = x - lift_start(c, k0);
  return k0 + static_cast<long long>(r) * rat_floor(off);
}

std::size_t arc_of_lift(const CircleConfig& c, long long k) {
  long long r = static_cast<long long>(c.points.size());
  long long idx = static_cast<long long>(base_arc(c)) + k;
  return static_cast<std::size_t>(idx - r * floordiv(idx, r));
}

CircleMorphism identity_morphism(const CircleConfig& c) {
  return CircleMorphism{c, c, ParaMap::identity(to_para(c))};
}

CircleMorphism compose_morphism(const CircleMorphism& m2, const CircleMorphism& m1) {
  if (m1.dst != m2.src) throw std::invalid_argument("compose_morphism: config mismatch");
  return CircleMorphism{m1.src, m2.dst, compose(m2.para_map, m1.para_map)};
}

namespace {

// Shared transcription: each source arc lift maps to the target arc lift
// containing a sample point just after its (possibly deleted) start.
ParaMap containment_para(const CircleConfig& src, const CircleConfig& dst) {
  ParaMap f{to_para(src), to_para(dst), {}};
  std::size_t r = src.points.size();
  f.values.reserve(r);
  for (std::size_t k = 0; k < r; ++k) {
    Rat q = lift_start(src, static_cast<long long>(k));
    Rat sample = (q + next_point_lift(dst, q)) / 2;
    f.values.push_back(lift_index(dst, sample));
  }
  return f;
}

}  // namespace

CircleMorphism merge_points(const CircleConfig& c, std::size_t arc_index) {
  if (c.points.size() < 2)
    throw std::invalid_argument("merge_points: cannot empty a one-point refinement");
  if (arc_index >= c.arc_count()) throw std::out_of_range("merge_points: bad arc index");
  std::size_t del = (arc_index + 1) % c.points.size();
  CircleConfig d;
  for (std::size_t i = 0; i < c.points.size(); ++i)
    if (i != del) d.points.push_back(c.points[i]);
  return CircleMorphism{c, d, containment_para(c, d)};
}

CircleMorphism insert_point(const CircleConfig& c, const Rat& angle_in) {
  Rat angle = angle_in;
  angle.canonicalize();  // callers may pass mpq_class(a, b) with gcd(a, b) > 1
  if (angle < 0 || angle >= 1) throw std::invalid_argument("insert_point: angle out of [0,1)");
  if (std::find(c.points.begin(), c.points.end(), angle) != c.points.end())
    throw std::invalid_argument("insert_point: duplicate point");
  CircleConfig d = c;
  d.points.insert(std::upper_bound(d.points.begin(), d.points.end(), angle), angle);
  return CircleMorphism{c, d, containment_para(c, d)};
}

CircleConfig act_rotation(const CircleConfig& c, const Rat& theta_in) {
  Rat theta = theta_in;
  theta.canonicalize();
  CircleConfig d;
  d.points.reserve(c.points.size());
  for (const Rat& p : c.points) d.points.push_back(frac_part(p + theta));
  std::sort(d.points.begin(), d.points.end());
  return d;
}

CircleMorphism act_rotation_morphism(const CircleConfig& c, const Rat& theta_in) {
  Rat theta = theta_in;
  theta.canonicalize();
  CircleConfig d = act_rotation(c, theta);
  ParaMap f{to_para(c), to_para(d), {}};
  std::size_t r = c.points.size();
  for (std::size_t k = 0; k < r; ++k) {
    Rat mid = (lift_start(c, static_cast<long long>(k)) +
               lift_start(c, static_cast<long long>(k) + 1)) / 2;
    f.values.push_back(lift_index(d, mid + theta));
  }
  return CircleMorphism{c, d, f};
}

}  // namespace paratrace
