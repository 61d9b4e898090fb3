#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <paratrace/adj.hpp>
#include <paratrace/circle.hpp>
#include <paratrace/ordsets.hpp>
#include <paratrace/paracyclic.hpp>

using namespace paratrace;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("monotone maps: validity, composition, enumeration count") {
  FinOrd a{3}, b{4}, c{2};
  for (const MonotoneMap& f : enumerate_monotone(a, b)) {
    CHECK(f.valid());
    CHECK(compose_monotone(MonotoneMap::identity(b), f) == f);
    CHECK(compose_monotone(f, MonotoneMap::identity(a)) == f);
  }
  // Weakly increasing sequences of length m in [0, n): C(n + m - 1, m).
  CHECK(enumerate_monotone(a, b).size() == binomial(3 + 4 - 1, 3));
  CHECK(enumerate_monotone(b, c).size() == binomial(4 + 2 - 1, 4));
  CHECK(enumerate_monotone(FinOrd{0}, c).size() == 1);
  CHECK(enumerate_monotone(a, FinOrd{0}).empty());

  for (const MonotoneMap& f : enumerate_monotone(a, b))
    for (const MonotoneMap& g : enumerate_monotone(b, c)) {
      MonotoneMap gf = compose_monotone(g, f);
      CHECK(gf.valid());
      for (std::size_t x = 0; x < a.size; ++x)
        CHECK(gf.values[x] == g.values[f.values[x]]);
    }
}

TEST_CASE("join is monoidal on orders and maps") {
  CHECK(join(FinOrd{2}, FinOrd{3}) == FinOrd{5});
  MonotoneMap f{FinOrd{2}, FinOrd{1}, {0, 0}};
  MonotoneMap g{FinOrd{1}, FinOrd{2}, {1}};
  MonotoneMap fg = join(f, g);
  CHECK(fg.src == FinOrd{3});
  CHECK(fg.dst == FinOrd{3});
  CHECK(fg.values == std::vector<std::size_t>{0, 0, 2});
  // Functoriality of join in both slots.
  MonotoneMap f2{FinOrd{1}, FinOrd{1}, {0}};
  MonotoneMap g2{FinOrd{2}, FinOrd{2}, {0, 1}};
  CHECK(join(compose_monotone(f2, f), compose_monotone(g2, g)) ==
        compose_monotone(join(f2, g2), join(f, g)));
}

TEST_CASE("marked orders: interval duality and reversal") {
  for (std::size_t n = 1; n <= 4; ++n) {
    MarkedOrd ip = delta_to_interval(FinOrd{n});  // the simplex [n-1]
    CHECK(ip.size == n + 1);
    CHECK(ip.min_marked);
    CHECK(ip.max_marked);
    CHECK(reverse(reverse(ip)) == ip);
  }
  // Contravariance of the interval functor.
  MonotoneMap f{FinOrd{2}, FinOrd{3}, {0, 2}};
  MonotoneMap g{FinOrd{3}, FinOrd{2}, {0, 0, 1}};
  CHECK(delta_to_interval_map(compose_monotone(g, f)) ==
        compose_marked(delta_to_interval_map(f), delta_to_interval_map(g)));
  // Reversal is a contravariant involution.
  MarkedMap mf = delta_to_interval_map(f);
  CHECK(reverse(reverse(mf)) == mf);
  CHECK(reverse(mf).valid());
}

TEST_CASE("paracyclic maps: pointwise composition and equivariance") {
  ParaMap f{ParaObj{2}, ParaObj{3}, {0, 2}};
  ParaMap g{ParaObj{3}, ParaObj{2}, {-1, 0, 0}};
  REQUIRE(f.valid());
  REQUIRE(g.valid());
  ParaMap gf = compose(g, f);
  for (long long x = -7; x <= 7; ++x) {
    CHECK(evaluate(gf, x) == evaluate(g, evaluate(f, x)));
    CHECK(evaluate(f, x + 2) == evaluate(f, x) + 3);  // equivariance
  }
  CHECK(compose(ParaMap::identity(ParaObj{3}), f) == f);
  CHECK(compose(f, ParaMap::identity(ParaObj{2})) == f);
  CHECK(z_action(1, f) == compose(translation(ParaObj{3}, 3), f));
}

TEST_CASE("poincare dual is the upper Galois adjoint") {
  for (const ParaMap& f : enumerate_maps(ParaObj{3}, ParaObj{2}, 2)) {
    ParaMap fv = poincare_dual(f);
    CHECK(fv.valid());
    for (long long x = -5; x <= 5; ++x)
      for (long long y = -5; y <= 5; ++y)
        CHECK((evaluate(f, x) <= y) == (x <= evaluate(fv, y)));
    // Double dual = conjugation by the -1 translation.
    ParaMap fvv = poincare_dual(fv);
    ParaMap conj = compose(translation(ParaObj{2}, -1),
                           compose(f, translation(ParaObj{3}, 1)));
    CHECK(fvv == conj);
  }
  CHECK(poincare_dual(ParaMap::identity(ParaObj{4})) ==
        ParaMap::identity(ParaObj{4}));
}

TEST_CASE("window and fibers partition one fundamental domain") {
  for (const ParaMap& f : enumerate_maps(ParaObj{3}, ParaObj{2}, 2)) {
    long long x0 = window_start(f);
    CHECK(evaluate(f, x0) >= 0);
    CHECK(evaluate(f, x0 - 1) < 0);
    auto fib = fibers(f);
    REQUIRE(fib.size() == 2);
    std::size_t total = 0;
    for (std::size_t j = 0; j < fib.size(); ++j) {
      for (std::size_t i = 0; i < fib[j].size(); ++i) {
        CHECK(evaluate(f, fib[j][i]) == static_cast<long long>(j));
        if (i > 0) CHECK(fib[j][i - 1] < fib[j][i]);
      }
      total += fib[j].size();
    }
    CHECK(total == 3);
  }
}

TEST_CASE("simplex inclusion is functorial") {
  MonotoneMap f{FinOrd{2}, FinOrd{3}, {1, 2}};
  MonotoneMap g{FinOrd{3}, FinOrd{4}, {0, 0, 3}};
  CHECK(from_simplex(compose_monotone(g, f)) ==
        compose(from_simplex(g), from_simplex(f)));
  CHECK(from_simplex(MonotoneMap::identity(FinOrd{3})) ==
        ParaMap::identity(ParaObj{3}));
}

TEST_CASE("surjection-injection factorization") {
  for (const ParaMap& f : enumerate_maps(ParaObj{3}, ParaObj{2}, 1)) {
    auto [surj, inj] = surj_inj_factorize(f);
    CHECK(compose(inj, surj) == f);
    // surj hits every target orbit, inj has singleton-or-empty fibers.
    for (const auto& fb : fibers(surj)) CHECK(!fb.empty());
    for (const auto& fb : fibers(inj)) CHECK(fb.size() <= 1);
  }
}

TEST_CASE("circle roundtrip and base arc convention") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CircleConfig c = from_para(ParaObj{n});
    CHECK(c.valid());
    CHECK(to_para(c) == ParaObj{n});
    CHECK(base_arc(c) == 0);
    for (long long k = -5; k <= 5; ++k) {
      Rat mid = (lift_start(c, k) + lift_start(c, k + 1)) / 2;
      CHECK(lift_index(c, mid) == k);
      CHECK(lift_start(c, k + static_cast<long long>(n)) ==
            lift_start(c, k) + 1);
    }
  }
  // 0 not marked: the base arc is the one wrapping through 0.
  CircleConfig c{{Rat(1, 4), Rat(1, 2)}};
  CHECK(base_arc(c) == 1);
  CHECK(lift_start(c, 0) == Rat(-1, 2));
  CHECK(lift_index(c, Rat(0)) == 0);
  CHECK(lift_index(c, Rat(3, 8)) == 1);
}

TEST_CASE("merge and insert are inverse on the inserted point") {
  CircleConfig c{{Rat(0), Rat(1, 3), Rat(2, 3)}};
  CircleMorphism ins = insert_point(c, Rat(1, 2));
  REQUIRE(ins.dst.points.size() == 4);
  // Deleting the point just inserted: it ends arc 1 of the refined config.
  std::size_t where = 0;
  while (ins.dst.points[where] != Rat(1, 2)) ++where;
  CircleMorphism mer = merge_points(ins.dst, (where + ins.dst.points.size() - 1) %
                                                 ins.dst.points.size());
  CHECK(mer.dst == c);
  CHECK(compose_morphism(mer, ins).para_map == ParaMap::identity(ParaObj{3}));
}

TEST_CASE("rotation morphisms: additivity and monodromy") {
  CircleConfig c{{Rat(0), Rat(1, 4), Rat(5, 8)}};
  CircleMorphism r1 = act_rotation_morphism(c, Rat(1, 5));
  CircleMorphism r2 = act_rotation_morphism(r1.dst, Rat(2, 5));
  CHECK(compose_morphism(r2, r1) == act_rotation_morphism(c, Rat(3, 5)));
  // A full positive turn is the monodromy z-action on the identity.
  CircleMorphism full = act_rotation_morphism(c, Rat(1));
  CHECK(full.dst == c);
  CHECK(full.para_map ==
        z_action(kMonodromySign, ParaMap::identity(ParaObj{3})));
}

TEST_CASE("walking adjunction: cells, identities, triangles") {
  auto [left, right] = triangle_check();
  CHECK(left);
  CHECK(right);

  const AdjObj objs[2] = {AdjObj::Minus, AdjObj::Plus};
  for (AdjObj x : objs)
    for (AdjObj y : objs)
      for (const OneCell& f : enumerate_one_cells(x, y, 2)) {
        CHECK(hcompose(OneCell::id(y), f) == f);
        CHECK(hcompose(f, OneCell::id(x)) == f);
        TwoCell idf = identity_two_cell(f);
        CHECK(idf.valid());
        CHECK(idf.is_identity());
        for (const OneCell& g : enumerate_one_cells(x, y, 2))
          for (const TwoCell& a : enumerate_two_cells(f, g)) {
            CHECK(a.valid());
            CHECK(vcompose(identity_two_cell(g), a) == a);
            CHECK(vcompose(a, idf) == a);
          }
      }
  // Endo 1-cell composition is block addition (join of the words).
  OneCell u{AdjObj::Minus, AdjObj::Minus, 2};
  OneCell v{AdjObj::Minus, AdjObj::Minus, 3};
  CHECK(hcompose(v, u).blocks == 5);
  OneCell l{AdjObj::Minus, AdjObj::Plus, 0};  // the word L
  OneCell r{AdjObj::Plus, AdjObj::Minus, 0};  // the word R
  CHECK(hcompose(r, l) == (OneCell{AdjObj::Minus, AdjObj::Minus, 1}));
  CHECK(hcompose(l, r) == (OneCell{AdjObj::Plus, AdjObj::Plus, 1}));
}

TEST_CASE("whiskering agrees with horizontal composition by identities") {
  OneCell f{AdjObj::Minus, AdjObj::Plus, 1};
  OneCell g{AdjObj::Minus, AdjObj::Plus, 2};
  OneCell w{AdjObj::Plus, AdjObj::Minus, 1};
  for (const TwoCell& a : enumerate_two_cells(f, g)) {
    CHECK(whisker_left(w, a) == hcompose(identity_two_cell(w), a));
    CHECK(whisker_right(a, w) == hcompose(a, identity_two_cell(w)));
  }
  // Unit and counit have the expected frames.
  CHECK(unit_eta().src == OneCell::id(AdjObj::Minus));
  CHECK(unit_eta().dst == (OneCell{AdjObj::Minus, AdjObj::Minus, 1}));
  CHECK(counit_eps().src == (OneCell{AdjObj::Plus, AdjObj::Plus, 1}));
  CHECK(counit_eps().dst == OneCell::id(AdjObj::Plus));
}

TEST_CASE("vertical composition is associative") {
  OneCell f{AdjObj::Minus, AdjObj::Minus, 0};
  OneCell g{AdjObj::Minus, AdjObj::Minus, 1};
  OneCell h{AdjObj::Minus, AdjObj::Minus, 2};
  OneCell k{AdjObj::Minus, AdjObj::Minus, 3};
  for (const TwoCell& a : enumerate_two_cells(f, g))
    for (const TwoCell& b : enumerate_two_cells(g, h))
      for (const TwoCell& c : enumerate_two_cells(h, k))
        CHECK(vcompose(c, vcompose(b, a)) == vcompose(vcompose(c, b), a));
}
