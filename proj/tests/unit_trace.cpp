#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <paratrace/hochschild.hpp>
#include <paratrace/laxfact.hpp>
#include <paratrace/trace.hpp>

#include <random>

using namespace paratrace;

namespace {

ExactMatrix random_square(std::mt19937_64& rng, ExactRing ring, std::size_t d) {
  std::uniform_int_distribution<int> dist(-3, 3);
  ExactMatrix m(ring, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      int v = dist(rng);
      if (v != 0) m.set(i, j, ring.normalize(Rat(v)));
    }
  return m;
}

Rat classical_trace(const std::vector<ExactMatrix>& labels, ExactRing ring) {
  std::size_t d = labels.front().rows();
  ExactMatrix prod = ExactMatrix::identity(ring, d);
  for (const ExactMatrix& m : labels) prod = m * prod;  // later arcs on the left
  Rat tr = 0;
  for (std::size_t i = 0; i < d; ++i) tr += prod.at(i, i);
  return ring.normalize(tr);
}

LabeledCircle random_circle(std::mt19937_64& rng, std::size_t r, std::size_t d,
                            ExactRing ring) {
  LabeledCircle lc{from_para(ParaObj{r}), canonical_duality(d, ring), {}};
  for (std::size_t i = 0; i < r; ++i)
    lc.arc_labels.push_back(random_square(rng, ring, d));
  return lc;
}

bool same_circle(const LabeledCircle& a, const LabeledCircle& b) {
  return a.config == b.config && a.duality.eta == b.duality.eta &&
         a.duality.eps == b.duality.eps && a.arc_labels == b.arc_labels;
}

}  // namespace

TEST_CASE("the circle scalar is the classical trace") {
  std::mt19937_64 rng(7);
  for (ExactRing ring : {ExactRing::Q(), ExactRing::Fp(7)})
    for (std::size_t r = 1; r <= 3; ++r)
      for (std::size_t d = 1; d <= 3; ++d)
        for (int trial = 0; trial < 3; ++trial) {
          LabeledCircle lc = random_circle(rng, r, d, ring);
          REQUIRE(!validate(lc).has_value());
          Rat expect = classical_trace(lc.arc_labels, ring);
          CHECK(evaluate(lc) == expect);
          CHECK(evaluate_contracted(lc) == expect);
        }
}

TEST_CASE("the scalar does not depend on the choice of duality datum") {
  ExactRing q = ExactRing::Q();
  std::size_t d = 2;
  // eta = vec of diag(1, 3), eps its inverse: still a valid duality on V.
  DualityData twisted{d, ExactMatrix(q, d * d, 1), ExactMatrix(q, 1, d * d)};
  twisted.eta.set(0, 0, Rat(1));
  twisted.eta.set(3, 0, Rat(3));
  twisted.eps.set(0, 0, Rat(1));
  twisted.eps.set(0, 3, Rat(1, 3));
  REQUIRE(twisted.validate());
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    LabeledCircle lc = random_circle(rng, 3, d, q);
    Rat expect = classical_trace(lc.arc_labels, q);
    lc.duality = twisted;
    CHECK(evaluate(lc) == expect);
    CHECK(evaluate_contracted(lc) == expect);
  }
}

TEST_CASE("transport preserves the scalar across refinement moves") {
  std::mt19937_64 rng(13);
  ExactRing q = ExactRing::Q();
  LabeledCircle lc = random_circle(rng, 3, 2, q);
  Rat base = evaluate(lc);

  CircleMorphism ins = insert_point(lc.config, Rat(1, 2));
  LabeledCircle fine = transport(lc, ins);
  CHECK(!validate(fine).has_value());
  CHECK(evaluate(fine) == base);

  CircleMorphism mer = merge_points(fine.config, 0);
  LabeledCircle coarse = transport(fine, mer);
  CHECK(evaluate(coarse) == base);

  for (int k = 1; k <= 6; ++k) {
    CircleMorphism rot = act_rotation_morphism(lc.config, Rat(k, 6));
    CHECK(evaluate(transport(lc, rot)) == base);
  }
  // Transport is functorial along composition of moves.
  CircleMorphism rot = act_rotation_morphism(fine.config, Rat(1, 8));
  CHECK(same_circle(transport(lc, compose_morphism(rot, ins)),
                    transport(transport(lc, ins), rot)));
}

TEST_CASE("cyclic invariance check accepts honest label lists") {
  std::mt19937_64 rng(17);
  for (std::size_t d = 1; d <= 2; ++d) {
    DualityData data = canonical_duality(d, ExactRing::Q());
    std::vector<ExactMatrix> labels;
    for (int i = 0; i < 3; ++i)
      labels.push_back(random_square(rng, ExactRing::Q(), d));
    CHECK(cyclic_invariance_check(labels, data));
  }
}

TEST_CASE("paracyclic diagrams: functoriality and special values") {
  AlgebraSC a = truncated_polynomial(2, ExactRing::Q());
  // One orbit, one full turn: the identity on A.
  CHECK(hochschild_diagram(a, z_action(1, ParaMap::identity(ParaObj{1})))
            .is_identity());
  // The unsigned cyclic rotation is the diagram of the +1 translation.
  HochschildComplex hc(a);
  for (std::size_t p = 1; p <= 2; ++p)
    CHECK(hochschild_diagram(a, translation(ParaObj{p + 1}, 1)) ==
          hc.rotation(p));
  // Simplicial maps factor through the monad functor.
  for (const MonotoneMap& phi : enumerate_monotone(FinOrd{3}, FinOrd{2}))
    CHECK(hochschild_diagram(a, from_simplex(phi)) == monad_functor(a, phi));
  // Functoriality on a composable pair with nontrivial winding.
  ParaMap f{ParaObj{2}, ParaObj{3}, {0, 2}};
  ParaMap g{ParaObj{3}, ParaObj{2}, {-1, 0, 0}};
  CHECK(hochschild_diagram(a, compose(g, f)) ==
        hochschild_diagram(a, g) * hochschild_diagram(a, f));
}

TEST_CASE("cone inclusion is natural") {
  AlgebraSC a = cyclic_group_algebra(2, ExactRing::Q());
  for (const ParaMap& f : enumerate_maps(ParaObj{2}, ParaObj{3}, 1))
    CHECK(hochschild_diagram(a, f) * cone_inclusion(a, ParaObj{2}) ==
          cone_inclusion(a, ParaObj{3}));
}

TEST_CASE("lax objects: generation, mirror, classification") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    LaxObject o = random_lax_object(rng, 5, 2);
    REQUIRE(!validate(o).has_value());
    CHECK(swap_labels(swap_labels(o)) == o);
    CHECK(!validate(swap_labels(o)).has_value());
    Membership m = classify(o);
    CHECK((m.in_Aplus || m.in_Aminus));
    CHECK(m.in_A0 == (m.in_Aplus && m.in_Aminus));
    CHECK(m.in_plus_monad == !m.in_Aminus);
    CHECK(m.in_minus_monad == !m.in_Aplus);
    if (m.in_unit_image) CHECK(m.in_minus_monad);
    if (m.in_counit_image) CHECK(m.in_plus_monad);
  }
}

TEST_CASE("lax morphisms: unit laws and associativity") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    LaxObject o = random_lax_object(rng, 4, 2);
    LaxMorphism m1 = random_lax_morphism(rng, o, 2);
    REQUIRE(!validate(m1).has_value());
    CHECK(compose_lax(m1, identity_lax(m1.src)) == m1);
    CHECK(compose_lax(identity_lax(m1.dst), m1) == m1);
    LaxMorphism m2 = random_lax_morphism(rng, m1.dst, 2);
    LaxMorphism m3 = random_lax_morphism(rng, m2.dst, 2);
    CHECK(compose_lax(m3, compose_lax(m2, m1)) ==
          compose_lax(compose_lax(m3, m2), m1));
    CHECK(left_fibration_check(m1));
  }
}

TEST_CASE("reflections: idempotence, coCartesian units, factorization") {
  std::mt19937_64 rng(31);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 25; ++trial) {
    LaxObject o = random_lax_object(rng, 5, 2);
    if (!classify(o).in_Aplus) continue;
    ++done;
    Reflection refl = plus_reflection(o);
    CHECK(!validate(refl.object).has_value());
    CHECK(!validate(refl.unit).has_value());
    CHECK(classify(refl.object).in_plus_monad);
    CHECK(is_cocartesian(refl.unit));
    // Reflecting again does nothing.
    Reflection again = plus_reflection(refl.object);
    CHECK(again.object == refl.object);
    CHECK(again.unit == identity_lax(refl.object));
    // The unit factors uniquely through itself.
    auto hs = factor_through(refl.unit, refl);
    REQUIRE(hs.size() == 1);
    CHECK(hs.front() == identity_lax(refl.object));
    // Mirror symmetry exchanges the two reflections.
    if (classify(o).in_Aminus) {
      Reflection other = minus_reflection(swap_labels(o));
      CHECK(other.object == swap_labels(refl.object));
    }
  }
  CHECK(done >= 10);
}
