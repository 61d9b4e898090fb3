#include "paratrace/acceptance.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "paratrace/adj.hpp"
#include "paratrace/circle.hpp"
#include "paratrace/hochschild.hpp"
#include "paratrace/laxfact.hpp"
#include "paratrace/matcat.hpp"
#include "paratrace/paracyclic.hpp"
#include "paratrace/trace.hpp"

namespace paratrace {

namespace {

struct Checker {
  bool ok = true;
  std::string witness;
  void expect(bool cond, const std::string& w) {
    if (ok && !cond) {
      ok = false;
      witness = w;
    }
  }
};

CriterionResult timed(const std::string& name,
                      const std::function<std::string(Checker&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Checker c;
  std::string summary;
  try {
    summary = body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  auto t1 = std::chrono::steady_clock::now();
  return CriterionResult{name, c.ok, c.ok ? summary : c.witness,
                         std::chrono::duration<double>(t1 - t0).count()};
}

Rat random_scalar(std::mt19937_64& rng) {
  return Rat(static_cast<long>(rng() % 7) - 3);
}

ExactMatrix random_matrix(std::mt19937_64& rng, ExactRing ring, std::size_t d) {
  ExactMatrix m(ring, d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m.set(r, c, random_scalar(rng));
  return m;
}

CircleConfig random_config(std::mt19937_64& rng, std::size_t max_points) {
  std::size_t r = 1 + static_cast<std::size_t>(rng() % max_points);
  std::vector<std::size_t> grid(24);
  for (std::size_t i = 0; i < 24; ++i) grid[i] = i;
  for (std::size_t i = 0; i < r; ++i)
    std::swap(grid[i], grid[i + static_cast<std::size_t>(rng() % (24 - i))]);
  grid.resize(r);
  std::sort(grid.begin(), grid.end());
  CircleConfig c;
  for (std::size_t g : grid) {
    Rat p(static_cast<long>(g), 24);
    p.canonicalize();
    c.points.push_back(p);
  }
  return c;
}

Rat arc_midpoint(const CircleConfig& c, std::size_t a) {
  Rat start = c.points[a];
  Rat end = (a + 1 < c.points.size()) ? c.points[a + 1] : c.points[0] + 1;
  Rat mid = (start + end) / 2;
  if (mid >= 1) mid -= 1;
  return mid;
}

CircleMorphism random_move(std::mt19937_64& rng, const CircleConfig& c) {
  std::size_t r = c.points.size();
  switch (rng() % 3) {
    case 0:
      if (r >= 2) return merge_points(c, static_cast<std::size_t>(rng() % r));
      [[fallthrough]];
    case 1:
      return insert_point(c, arc_midpoint(c, static_cast<std::size_t>(rng() % r)));
    default:
      return act_rotation_morphism(c, Rat(static_cast<long>(rng() % 12), 12));
  }
}

std::string fmt(const char* what, std::size_t a, std::size_t b) {
  std::ostringstream os;
  os << what << " (" << a << ", " << b << ")";
  return os.str();
}

// Independent check for HH of k[x]/x^n over a field of characteristic 0: the
// 2-periodic free resolution of A over its enveloping algebra collapses to
// the complex  A <-0- A <-(n x^{n-1})- A <-0- ...  after tensoring down.
std::vector<std::size_t> truncpoly_periodic_dims(std::size_t n, std::size_t n_max) {
  ExactRing q = ExactRing::Q();
  ExactMatrix v(q, n, n);  // multiplication by n*x^{n-1}
  for (std::size_t i = 0; i + (n - 1) < n; ++i)
    v.set(i + n - 1, i, Rat(static_cast<long>(n)));
  std::size_t rv = v.rank();
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k <= n_max; ++k) {
    if (k == 0) dims.push_back(n);
    else if (k % 2 == 1) dims.push_back(n - rv);        // ker 0 / im v
    else dims.push_back(n - rv);                        // ker v / im 0
  }
  return dims;
}

std::size_t two_torsion_count(const ModuleDescription& m) {
  std::size_t c = 0;
  for (const Int& d : m.torsion)
    if (d % 2 == 0) ++c;
  return c;
}

}  // namespace

std::vector<std::string> criterion_keys() {
  return {"duality", "trace-dim", "independence", "cyclic", "para", "adj",
          "hh", "chain", "hcminus", "laxfact", "circle"};
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::string& only) {
  std::vector<CriterionResult> results;
  auto want = [&](const char* key) { return only.empty() || only == key; };

  if (want("duality"))
  results.push_back(timed("duality zig-zags d=1..6 over Q and F5", [](Checker& c) {
    for (ExactRing ring : {ExactRing::Q(), ExactRing::Fp(5)})
      for (std::size_t d = 1; d <= 6; ++d)
        c.expect(canonical_duality(d, ring).validate(),
                 "zig-zag failed at d=" + std::to_string(d) + " over " + ring.to_string());
    return "12 duality data validated";
  }));

  if (want("trace-dim"))
  results.push_back(timed("trace of identity = dimension, 1..6 points, d=1..4", [](Checker& c) {
    std::size_t cases = 0;
    for (std::size_t d = 1; d <= 4; ++d)
      for (std::size_t r = 1; r <= 6; ++r) {
        CircleConfig even = from_para(ParaObj{r});
        CircleConfig odd;
        for (std::size_t i = 0; i < r; ++i) {
          Rat p(2 * static_cast<long>(i) + 1, 2 * static_cast<long>(r));
          p.canonicalize();
          odd.points.push_back(p);
        }
        for (const CircleConfig& cfg : {even, odd}) {
          LabeledCircle lc{cfg, canonical_duality(d, ExactRing::Q()),
                           std::vector<ExactMatrix>(
                               r, ExactMatrix::identity(ExactRing::Q(), d))};
          c.expect(evaluate(lc) == Rat(static_cast<long>(d)), fmt("pipeline value", d, r));
          c.expect(evaluate_contracted(lc) == Rat(static_cast<long>(d)),
                   fmt("contracted value", d, r));
          ++cases;
        }
      }
    return std::to_string(cases) + " identity circles evaluated";
  }));

  if (want("independence"))
  results.push_back(timed("presentation independence under moves and rotations",
                          [&](Checker& c) {
    std::mt19937_64 rng(seed ^ 0xC3u);
    std::size_t evals = 0;
    for (int trial = 0; trial < 200 && c.ok; ++trial) {
      std::size_t d = 1 + static_cast<std::size_t>(rng() % 4);
      CircleConfig cfg = random_config(rng, 6);
      std::size_t r = cfg.points.size();
      LabeledCircle lc{cfg, canonical_duality(d, ExactRing::Q()), {}};
      for (std::size_t i = 0; i < r; ++i)
        lc.arc_labels.push_back(random_matrix(rng, ExactRing::Q(), d));
      Rat z = evaluate_contracted(lc);
      if (r <= 3 && d <= 3)
        c.expect(evaluate(lc) == z, "pipeline and contracted routes disagree");
      LabeledCircle cur = lc;
      for (int step = 0; step < 5; ++step) {
        cur = transport(cur, random_move(rng, cur.config));
        c.expect(evaluate_contracted(cur) == z,
                 "scalar changed along a move at trial " + std::to_string(trial));
        ++evals;
      }
      for (long qd = 1; qd <= 12; ++qd)
        for (long p = 0; p < qd; ++p) {
          if (std::gcd(p, qd) != 1 && !(p == 0 && qd == 1)) continue;
          CircleMorphism rot = act_rotation_morphism(lc.config, Rat(p, qd));
          c.expect(evaluate_contracted(transport(lc, rot)) == z,
                   "scalar changed under rotation " + rat_to_string(Rat(p, qd)));
          ++evals;
        }
      CircleMorphism loop = act_rotation_morphism(lc.config, Rat(1));
      c.expect(evaluate_contracted(transport(lc, loop)) == z,
               "scalar changed under a full loop");
    }
    return std::to_string(evals) + " transported evaluations constant";
  }));

  if (want("cyclic"))
  results.push_back(timed("cyclic invariance of the trace, r<=5, d<=4", [&](Checker& c) {
    std::mt19937_64 rng(seed ^ 0xC4u);
    for (int trial = 0; trial < 100 && c.ok; ++trial) {
      std::size_t r = 1 + static_cast<std::size_t>(rng() % 5);
      std::size_t d = 1 + static_cast<std::size_t>(rng() % 4);
      std::vector<ExactMatrix> labels;
      for (std::size_t i = 0; i < r; ++i)
        labels.push_back(random_matrix(rng, ExactRing::Q(), d));
      c.expect(cyclic_invariance_check(labels, canonical_duality(d, ExactRing::Q())),
               "cyclic invariance failed at trial " + std::to_string(trial));
    }
    return "100 random label sets cyclically invariant";
  }));

  if (want("para"))
  results.push_back(timed("paracyclic composition laws, exhaustive m,n,k<=3", [](Checker& c) {
    std::vector<std::vector<std::vector<ParaMap>>> maps(4);
    for (std::size_t m = 1; m <= 3; ++m) {
      maps[m].resize(4);
      for (std::size_t n = 1; n <= 3; ++n)
        maps[m][n] = enumerate_maps(ParaObj{m}, ParaObj{n}, 2);
    }
    std::size_t checks = 0;
    for (std::size_t a = 1; a <= 3 && c.ok; ++a)
      for (std::size_t b = 1; b <= 3 && c.ok; ++b)
        for (std::size_t d = 1; d <= 3 && c.ok; ++d)
          for (const ParaMap& f : maps[a][b])
            for (const ParaMap& g : maps[b][d]) {
              ParaMap gf = compose(g, f);
              c.expect(poincare_dual(gf) == compose(poincare_dual(f), poincare_dual(g)),
                       "duality contravariance failed");
              for (long long s = -2; s <= 2; ++s)
                for (long long r = -2; r <= 2; ++r)
                  c.expect(compose(z_action(r, g), z_action(s, f)) ==
                               z_action(s + r, gf),
                           "hom-action equivariance failed");
              for (std::size_t e = 1; e <= 3; ++e)
                for (const ParaMap& h : maps[d][e])
                  c.expect(compose(compose(h, g), f) == compose(h, compose(g, f)),
                           "associativity failed");
              ++checks;
            }
    return std::to_string(checks) + " composable pairs checked";
  }));

  if (want("adj"))
  results.push_back(timed("walking-adjunction interchange and triangles", [](Checker& c) {
    auto tri = triangle_check();
    c.expect(tri.first, "left triangle identity failed");
    c.expect(tri.second, "right triangle identity failed");
    const AdjObj objs[2] = {AdjObj::Minus, AdjObj::Plus};
    std::size_t checks = 0;
    for (AdjObj x : objs)
      for (AdjObj y : objs)
        for (AdjObj z : objs) {
          auto fs = enumerate_one_cells(x, y, 2);
          auto gs = enumerate_one_cells(y, z, 2);
          for (const OneCell& f0 : fs)
            for (const OneCell& f1 : fs)
              for (const OneCell& f2 : fs)
                for (const OneCell& g0 : gs)
                  for (const OneCell& g1 : gs)
                    for (const OneCell& g2 : gs)
                      for (const TwoCell& a1 : enumerate_two_cells(f0, f1))
                        for (const TwoCell& a2 : enumerate_two_cells(f1, f2))
                          for (const TwoCell& b1 : enumerate_two_cells(g0, g1))
                            for (const TwoCell& b2 : enumerate_two_cells(g1, g2)) {
                              c.expect(hcompose(vcompose(b2, b1), vcompose(a2, a1)) ==
                                           vcompose(hcompose(b2, a2), hcompose(b1, a1)),
                                       "interchange failed");
                              ++checks;
                              if (!c.ok) return std::string{};
                            }
        }
    return std::to_string(checks) + " interchange squares verified";
  }));

  if (want("hh"))
  results.push_back(timed("Hochschild ranks: matrix:2, truncpoly:2, group:C2", [](Checker& c) {
    ExactRing q = ExactRing::Q();
    auto dims = [](const std::vector<ModuleDescription>& v) {
      std::vector<std::size_t> d;
      for (const auto& m : v) d.push_back(m.free_rank);
      return d;
    };
    auto m2 = hh_ranks(matrix_algebra(2, q), 3);
    c.expect(dims(m2) == std::vector<std::size_t>{1, 0, 0, 0}, "matrix:2 over Q");
    auto tp = hh_ranks(truncated_polynomial(2, q), 4);
    c.expect(dims(tp) == std::vector<std::size_t>{2, 1, 1, 1, 1}, "truncpoly:2 over Q");
    c.expect(dims(tp) == truncpoly_periodic_dims(2, 4),
             "truncpoly:2 disagrees with the periodic-resolution check");
    auto c2 = hh_ranks(cyclic_group_algebra(2, q), 3);
    c.expect(dims(c2) == std::vector<std::size_t>{2, 0, 0, 0}, "group:C2 over Q");
    auto c2z = hh_ranks(cyclic_group_algebra(2, ExactRing::Z()), 3);
    bool torsion = false;
    for (std::size_t n = 1; n < c2z.size(); ++n)
      for (const Int& d : c2z[n].torsion)
        if (d % 2 == 0) torsion = true;
    c.expect(torsion, "group:C2 over Z shows no 2-torsion in positive degree");
    auto c2f = hh_ranks(cyclic_group_algebra(2, ExactRing::Fp(2)), 3);
    for (std::size_t n = 0; n < 4; ++n) {
      std::size_t expected = c2z[n].free_rank + two_torsion_count(c2z[n]) +
                             (n > 0 ? two_torsion_count(c2z[n - 1]) : 0);
      c.expect(c2f[n].free_rank == expected,
               "mod-2 dimensions disagree with the integral ranks at degree " +
                   std::to_string(n));
    }
    return "rank tables and torsion cross-checks agree";
  }));

  if (want("chain"))
  results.push_back(timed("chain-operator contract p<=4, dim<=4", [](Checker& c) {
    ExactRing q = ExactRing::Q();
    std::vector<AlgebraSC> algebras = {truncated_polynomial(2, q),
                                       cyclic_group_algebra(3, q),
                                       matrix_algebra(2, ExactRing::Fp(5))};
    for (const AlgebraSC& a : algebras) {
      HochschildComplex hc(a);
      for (std::size_t p = 1; p <= 4 && c.ok; ++p) {
        if (p >= 2)
          for (std::size_t j = 1; j <= p; ++j)
            for (std::size_t i = 0; i < j; ++i)
              c.expect(hc.face(i, p - 1) * hc.face(j, p) ==
                           hc.face(j - 1, p - 1) * hc.face(i, p),
                       fmt("simplicial face relation", i, j));
        for (std::size_t j = 0; j < p; ++j)
          for (std::size_t i = 0; i <= p; ++i) {
            ExactMatrix lhs = hc.face(i, p) * hc.degeneracy(j, p - 1);
            if (i == j || i == j + 1) {
              c.expect(lhs.is_identity(), fmt("face-degeneracy identity", i, j));
            } else if (p >= 2) {
              ExactMatrix rhs =
                  i < j ? hc.degeneracy(j - 1, p - 2) * hc.face(i, p - 1)
                        : hc.degeneracy(j, p - 2) * hc.face(i - 1, p - 1);
              c.expect(lhs == rhs, fmt("face-degeneracy relation", i, j));
            }
          }
        ExactMatrix rot = hc.rotation(p);
        c.expect(hc.face(0, p) * rot == hc.face(p, p), "wrap face under rotation");
        for (std::size_t i = 1; i <= p; ++i)
          c.expect(hc.face(i, p) * rot == hc.rotation(p - 1) * hc.face(i - 1, p),
                   fmt("face-rotation relation", i, p));
        c.expect(hc.degeneracy(0, p) * rot ==
                     hc.rotation(p + 1) * (hc.rotation(p + 1) * hc.degeneracy(p, p)),
                 "wrap degeneracy under rotation");
        for (std::size_t i = 1; i <= p; ++i)
          c.expect(hc.degeneracy(i, p) * rot == hc.rotation(p + 1) * hc.degeneracy(i - 1, p),
                   fmt("degeneracy-rotation relation", i, p));
        ExactMatrix power = ExactMatrix::identity(a.ring, hc.chain_dim(p));
        for (std::size_t i = 0; i <= p; ++i) power = rot * power;
        c.expect(power.is_identity(), "rotation order");
        c.expect((hc.b(p - 1) * hc.b(p)).is_zero(), "b^2 = 0");
        if (p >= 1)
          c.expect((hc.b(p + 1) * hc.B(p) + hc.B(p - 1) * hc.b(p)).is_zero(),
                   "bB + Bb = 0");
        if (p <= 3) c.expect((hc.B(p + 1) * hc.B(p)).is_zero(), "B^2 = 0");
      }
      c.expect((hc.b(1) * hc.B(0)).is_zero(), "bB at degree 0");
    }
    return "operator identities exact for 3 algebras";
  }));

  if (want("hcminus"))
  results.push_back(timed("truncated negative cyclic homology", [](Checker& c) {
    AlgebraSC ground{ExactRing::Q(), 1, {Rat(1)}, {Rat(1)}};
    auto entries = hc_minus_truncated(ground, 3, -4, 1);
    for (const auto& e : entries) {
      std::size_t expected = (e.degree <= 0 && e.degree % 2 == 0) ? 1 : 0;
      c.expect(e.dimension == expected,
               "ground-ring dimension wrong at degree " + std::to_string(e.degree));
      c.expect(e.reliable, "degree flagged unreliable inside the window");
    }
    auto m2 = hc_minus_truncated(matrix_algebra(2, ExactRing::Q()), 2, 0, 0);
    c.expect(m2.size() == 1 && m2[0].dimension == 1 && m2[0].reliable,
             "matrix:2 degree 0");
    return "weight-3 ground ring and weight-2 matrix:2 as predicted";
  }));

  if (want("laxfact"))
  results.push_back(timed("labeled-refinement category properties", [&](Checker& c) {
    std::mt19937_64 rng(seed ^ 0xCAu);
    for (int i = 0; i < 1000 && c.ok; ++i) {
      LaxObject o = random_lax_object(rng, 6, 2);
      c.expect(!validate(o).has_value(), "generated object invalid");
      Membership m = classify(o);
      int partition = (m.in_minus_monad ? 1 : 0) + (m.in_plus_monad ? 1 : 0) +
                      (m.in_A0 ? 1 : 0);
      c.expect(partition == 1, "partition not exclusive");
      c.expect(m.in_Aplus || m.in_Aminus, "cover misses an object");
      c.expect((m.in_Aplus && m.in_Aminus) == m.in_A0, "overlap differs from A0");
      c.expect(!m.in_unit_image || m.in_minus_monad, "unit image outside minus monad");
      c.expect(!m.in_counit_image || m.in_plus_monad, "counit image outside plus monad");
      Membership ms = classify(swap_labels(o));
      c.expect(ms.in_plus_monad == m.in_minus_monad &&
                   ms.in_unit_image == m.in_counit_image && ms.in_A0 == m.in_A0,
               "mirror symmetry on memberships");
    }
    for (int i = 0; i < 500 && c.ok; ++i) {
      LaxObject o = random_lax_object(rng, 5, 2);
      LaxMorphism m = random_lax_morphism(rng, o, 2);
      c.expect(!validate(m).has_value(), "generated morphism invalid");
      c.expect(left_fibration_check(m), "left-fibration closure failed");
      c.expect(compose_lax(m, identity_lax(o)) == m, "right unit law");
      c.expect(compose_lax(identity_lax(m.dst), m) == m, "left unit law");
    }
    std::size_t factored = 0;
    for (int i = 0; i < 150 && c.ok; ++i) {
      LaxObject o = random_lax_object(rng, 4, 1);
      if (!classify(o).in_Aplus) continue;
      Reflection refl = plus_reflection(o);
      c.expect(!validate(refl.object).has_value() &&
                   classify(refl.object).in_plus_monad,
               "reflected object not in the plus monad");
      c.expect(is_cocartesian(refl.unit), "reflection unit not coCartesian");
      c.expect(!validate(refl.unit).has_value(), "reflection unit invalid");
      Reflection again = plus_reflection(refl.object);
      c.expect(again.object == refl.object && again.unit == identity_lax(refl.object),
               "reflection not idempotent");
      if (classify(o).in_Aminus)
        c.expect(minus_reflection(o).object ==
                     swap_labels(plus_reflection(swap_labels(o)).object),
                 "reflections do not commute with the mirror symmetry");
      LaxMorphism m = refl.unit;
      for (std::size_t extra = rng() % 3; extra > 0; --extra)
        m = compose_lax(random_lax_morphism(rng, m.dst, 1), m);
      auto hs = factor_through(m, refl);
      c.expect(hs.size() == 1, "factorization through the reflection not unique (" +
                                   std::to_string(hs.size()) + " found)");
      if (!hs.empty())
        c.expect(compose_lax(hs[0], refl.unit) == m, "factorization does not recompose");
      ++factored;
    }
    return "memberships, fibration closure, reflections (" + std::to_string(factored) +
           " factorizations) verified";
  }));

  if (want("circle"))
  results.push_back(timed("circle/arc-map round trip and monodromy", [&](Checker& c) {
    for (std::size_t n = 1; n <= 8; ++n)
      c.expect(to_para(from_para(ParaObj{n})) == ParaObj{n},
               "round trip failed at " + std::to_string(n));
    std::mt19937_64 rng(seed ^ 0xCBu);
    for (int trial = 0; trial < 200 && c.ok; ++trial) {
      CircleConfig cfg = random_config(rng, 4);
      CircleMorphism m1 = random_move(rng, cfg);
      CircleMorphism m2 = random_move(rng, m1.dst);
      CircleMorphism m3 = random_move(rng, m2.dst);
      c.expect(compose_morphism(m3, compose_morphism(m2, m1)) ==
                   compose_morphism(compose_morphism(m3, m2), m1),
               "composite association failed");
      c.expect(to_para_map(compose_morphism(m2, m1)) ==
                   compose(to_para_map(m2), to_para_map(m1)),
               "arc-map transcription not functorial");
      // insert then delete the same point is the identity
      std::size_t a = static_cast<std::size_t>(rng() % cfg.points.size());
      CircleMorphism ins = insert_point(cfg, arc_midpoint(cfg, a));
      std::size_t inserted = 0;
      while (ins.dst.points[inserted] != arc_midpoint(cfg, a)) ++inserted;
      std::size_t rr = ins.dst.points.size();
      CircleMorphism del = merge_points(ins.dst, (inserted + rr - 1) % rr);
      c.expect(compose_morphism(del, ins) == identity_morphism(cfg),
               "insert/merge round trip not the identity");
      // rotation additivity
      Rat t1(static_cast<long>(rng() % 12), 12), t2(static_cast<long>(rng() % 12), 12);
      CircleMorphism r1 = act_rotation_morphism(cfg, t1);
      CircleMorphism r2 = act_rotation_morphism(r1.dst, t2);
      c.expect(compose_morphism(r2, r1) == act_rotation_morphism(cfg, t1 + t2),
               "rotations do not add");
    }
    for (std::size_t n = 1; n <= 4; ++n) {
      CircleConfig cfg = from_para(ParaObj{n});
      c.expect(act_rotation_morphism(cfg, Rat(1)).para_map ==
                   z_action(kMonodromySign, ParaMap::identity(ParaObj{n})),
               "monodromy sign mismatch at " + std::to_string(n) + " points");
    }
    return "round trips, functoriality and monodromy verified";
  }));

  return results;
}

}  // namespace paratrace
