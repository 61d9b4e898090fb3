#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <paratrace/algebra.hpp>
#include <paratrace/hochschild.hpp>
#include <paratrace/matcat.hpp>

using namespace paratrace;

TEST_CASE("built-in algebras validate and parse") {
  ExactRing q = ExactRing::Q();
  for (const char* spec : {"matrix:2", "matrix:3", "truncpoly:2", "truncpoly:4",
                           "group:C1", "group:C2", "group:C5"}) {
    auto a = builtin_algebra(spec, q);
    REQUIRE(a.has_value());
    CHECK(!validate_algebra(*a).has_value());
  }
  CHECK(!builtin_algebra("nonsense:7", q).has_value());
  CHECK(builtin_algebra("matrix:2", q)->dim == 4);
  CHECK(builtin_algebra("group:C3", q)->dim == 3);
}

TEST_CASE("validate_algebra catches broken structure constants") {
  AlgebraSC a = truncated_polynomial(2, ExactRing::Q());
  a.mul[0] = Rat(2);  // e_0 * e_0 = 2 e_0 breaks unitality
  CHECK(validate_algebra(a).has_value());
  AlgebraSC b = cyclic_group_algebra(3, ExactRing::Q());
  b.mul[1 + 3 * (1 + 3 * 1)] += 1;  // perturb associativity
  CHECK(validate_algebra(b).has_value());
}

TEST_CASE("monad functor is monoidal and functorial") {
  AlgebraSC a = truncated_polynomial(3, ExactRing::Q());
  MonotoneMap f{FinOrd{3}, FinOrd{2}, {0, 0, 1}};
  MonotoneMap g{FinOrd{2}, FinOrd{1}, {0, 0}};
  CHECK(monad_functor(a, compose_monotone(g, f)) ==
        monad_functor(a, g) * monad_functor(a, f));
  CHECK(monad_functor(a, MonotoneMap::identity(FinOrd{2})).is_identity());
  CHECK(monad_functor(a, join(f, g)) ==
        kron(monad_functor(a, f), monad_functor(a, g)));
  // Empty fibers insert units.
  MonotoneMap up{FinOrd{0}, FinOrd{1}, {}};
  CHECK(monad_functor(a, up) == a.unit_column());
  CHECK(iterated_mul(a, 1).is_identity());
  CHECK(iterated_mul(a, 2) == a.mul_matrix());
}

TEST_CASE("simplicial and cyclic identities on k[x]/x^2") {
  HochschildComplex hc(truncated_polynomial(2, ExactRing::Q()));
  for (std::size_t p = 1; p <= 3; ++p) {
    // d_i d_j = d_{j-1} d_i for i < j (needs two composable faces).
    if (p >= 2)
      for (std::size_t j = 1; j <= p; ++j)
        for (std::size_t i = 0; i < j; ++i)
          CHECK(hc.face(i, p - 1) * hc.face(j, p) ==
                hc.face(j - 1, p - 1) * hc.face(i, p));
    // Face-degeneracy relations.
    for (std::size_t j = 0; j < p; ++j) {
      CHECK(hc.face(j, p) * hc.degeneracy(j, p - 1) ==
            ExactMatrix::identity(ExactRing::Q(), hc.chain_dim(p - 1)));
      CHECK(hc.face(j + 1, p) * hc.degeneracy(j, p - 1) ==
            ExactMatrix::identity(ExactRing::Q(), hc.chain_dim(p - 1)));
    }
    // Rotation has order p + 1 (unsigned).
    ExactMatrix rho = hc.rotation(p);
    ExactMatrix pw = ExactMatrix::identity(ExactRing::Q(), hc.chain_dim(p));
    for (std::size_t k = 0; k <= p; ++k) pw = rho * pw;
    CHECK(pw.is_identity());
    // Cyclic compatibilities: d_i rho = rho d_{i-1}, d_0 rho = d_p.
    for (std::size_t i = 1; i <= p; ++i)
      CHECK(hc.face(i, p) * hc.rotation(p) ==
            hc.rotation(p - 1) * hc.face(i - 1, p));
    CHECK(hc.face(0, p) * hc.rotation(p) == hc.face(p, p));
    // s_i rho = rho s_{i-1}, s_0 rho = rho^2 s_p.
    for (std::size_t i = 1; i <= p; ++i)
      CHECK(hc.degeneracy(i, p) * hc.rotation(p) ==
            hc.rotation(p + 1) * hc.degeneracy(i - 1, p));
    CHECK(hc.degeneracy(0, p) * hc.rotation(p) ==
          hc.rotation(p + 1) * hc.rotation(p + 1) * hc.degeneracy(p, p));
  }
}

TEST_CASE("differentials square to zero and anticommute") {
  for (const char* spec : {"truncpoly:2", "group:C3"}) {
    AlgebraSC a = *builtin_algebra(spec, ExactRing::Q());
    HochschildComplex hc(a);
    for (std::size_t p = 1; p <= 3; ++p)
      CHECK((hc.b(p) * hc.b(p + 1)).is_zero());
    CHECK((hc.b(1) * hc.B(0)).is_zero());  // p = 0: the Bb term is void
    for (std::size_t p = 0; p <= 2; ++p) {
      CHECK((hc.B(p + 1) * hc.B(p)).is_zero());
      if (p >= 1)
        CHECK((hc.b(p + 1) * hc.B(p) + hc.B(p - 1) * hc.b(p)).is_zero());
    }
  }
}

TEST_CASE("Hochschild dimensions of the standard examples") {
  ExactRing q = ExactRing::Q();
  auto dims = [](const std::vector<ModuleDescription>& v) {
    std::vector<std::size_t> out;
    for (const auto& m : v) out.push_back(m.free_rank);
    return out;
  };
  // Matrix algebras are separable: HH_0 = k, HH_{>0} = 0.
  CHECK(dims(hh_ranks(matrix_algebra(2, q), 2)) ==
        std::vector<std::size_t>{1, 0, 0});
  // k[x]/x^2 in characteristic 0: 2, 1, 1, 1, ...
  CHECK(dims(hh_ranks(truncated_polynomial(2, q), 3)) ==
        std::vector<std::size_t>{2, 1, 1, 1});
  // Group algebra of C2 over Q is semisimple: Q x Q.
  CHECK(dims(hh_ranks(cyclic_group_algebra(2, q), 2)) ==
        std::vector<std::size_t>{2, 0, 0});
  // ... but over F2 it is k[x]/x^2 in characteristic 2: all dims 2.
  CHECK(dims(hh_ranks(cyclic_group_algebra(2, ExactRing::Fp(2)), 2)) ==
        std::vector<std::size_t>{2, 2, 2});
}

TEST_CASE("integral Hochschild homology of Z[C2] has 2-torsion") {
  auto hh = hh_ranks(cyclic_group_algebra(2, ExactRing::Z()), 2);
  REQUIRE(hh.size() == 3);
  CHECK(hh[0].free_rank == 2);
  CHECK(hh[0].torsion.empty());
  CHECK(hh[1].free_rank == 0);
  CHECK(hh[1].torsion == std::vector<Int>{2, 2});
  CHECK(hh[2].free_rank == 0);
  CHECK(hh[2].torsion.empty());
}

TEST_CASE("Hochschild homology is a basis invariant") {
  ExactRing q = ExactRing::Q();
  AlgebraSC a = truncated_polynomial(2, q);
  ExactMatrix g = ExactMatrix::from_rows(q, {{Rat(1), Rat(2)}, {Rat(1), Rat(3)}});
  AlgebraSC b = change_basis(a, g);
  CHECK(!validate_algebra(b).has_value());
  CHECK(hh_ranks(b, 2) == hh_ranks(a, 2));
}

TEST_CASE("matrix trace generates HH_0 of the endomorphism algebra") {
  for (std::size_t d = 1; d <= 3; ++d) {
    TraceFunctional tf = trace_hh0(canonical_duality(d, ExactRing::Q()));
    CHECK(tf.descends);
    CHECK(tf.rank_on_hh0 == 1);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        CHECK(tf.row.at(0, i * d + j) == (i == j ? 1 : 0));
  }
}

TEST_CASE("truncated negative cyclic homology of the ground ring") {
  // For A = k the bicomplex has k in bidegrees (-2j, j) and zero maps, so
  // Tot_n has dimension #{j < w : n + 2j = 0}.
  auto entries = hc_minus_truncated(truncated_polynomial(1, ExactRing::Q()), 3, -5, 1);
  for (const auto& e : entries) {
    std::size_t expect = (e.degree <= 0 && e.degree >= -4 && e.degree % 2 == 0) ? 1 : 0;
    CHECK(e.dimension == expect);
    CHECK(e.reliable == (e.degree >= -4));
  }
  // Separable case: only HH_0 = k survives in each reachable even degree.
  auto m2 = hc_minus_truncated(matrix_algebra(2, ExactRing::Q()), 2, -2, 0);
  for (const auto& e : m2)
    CHECK(e.dimension == ((e.degree % 2 == 0) ? 1 : 0));
}
