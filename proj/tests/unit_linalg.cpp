#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <paratrace/matcat.hpp>
#include <paratrace/matrix.hpp>
#include <paratrace/ring.hpp>

#include <random>

using namespace paratrace;

namespace {

ExactMatrix random_matrix(std::mt19937_64& rng, ExactRing ring, std::size_t r,
                          std::size_t c, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> dist(lo, hi);
  ExactMatrix m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      int v = dist(rng);
      if (v != 0) m.set(i, j, ring.normalize(Rat(v)));
    }
  return m;
}

// gcd of all k x k minors of a small dense integer matrix (0 if all vanish).
Int minor_gcd(const ExactMatrix& a, std::size_t k) {
  std::vector<std::size_t> rows(a.rows()), cols(a.cols());
  Int g = 0;
  std::vector<std::size_t> ri(k), ci(k);
  // Enumerate k-subsets of rows and columns by odometer.
  auto next = [](std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k2 = idx.size();
    for (std::size_t i = k2; i-- > 0;) {
      if (idx[i] + (k2 - i) < n) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k2; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  auto det = [&](const std::vector<std::size_t>& rs,
                 const std::vector<std::size_t>& cs) {
    std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i][j] = a.at(rs[i], cs[j]);
    // Fraction-free enough at this size: plain rational elimination.
    Rat d = 1;
    for (std::size_t p = 0; p < k; ++p) {
      std::size_t piv = p;
      while (piv < k && m[piv][p] == 0) ++piv;
      if (piv == k) return Rat(0);
      if (piv != p) {
        std::swap(m[piv], m[p]);
        d = -d;
      }
      d *= m[p][p];
      for (std::size_t i2 = p + 1; i2 < k; ++i2) {
        Rat f = m[i2][p] / m[p][p];
        for (std::size_t j2 = p; j2 < k; ++j2) m[i2][j2] -= f * m[p][j2];
      }
    }
    return d;
  };
  for (std::size_t i = 0; i < k; ++i) ri[i] = i;
  do {
    for (std::size_t i = 0; i < k; ++i) ci[i] = i;
    do {
      Rat d = det(ri, ci);
      Int di(d.get_num());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), di.get_mpz_t());
    } while (next(ci, a.cols()));
  } while (next(ri, a.rows()));
  return g < 0 ? Int(-g) : g;
}

}  // namespace

TEST_CASE("matrix arithmetic over Q and F5") {
  std::mt19937_64 rng(11);
  for (ExactRing ring : {ExactRing::Q(), ExactRing::Fp(5)}) {
    ExactMatrix a = random_matrix(rng, ring, 3, 4);
    ExactMatrix b = random_matrix(rng, ring, 4, 2);
    ExactMatrix c = random_matrix(rng, ring, 2, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * ExactMatrix::identity(ring, 4) == a);
    CHECK(ExactMatrix::identity(ring, 3) * a == a);
    CHECK(a - a == ExactMatrix::zero(ring, 3, 4));
    CHECK((a + a) == a.scaled(Rat(2)));
    CHECK(a.transpose().transpose() == a);
    // Mixed-product rule: kron(A, B) kron(C, D) = kron(AC, BD).
    ExactMatrix d = random_matrix(rng, ring, 3, 2);
    CHECK(kron(a, c) * kron(b, d) == kron(a * b, c * d));
  }
}

TEST_CASE("rank and kernel agree") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    ExactRing ring = trial % 2 ? ExactRing::Fp(7) : ExactRing::Q();
    ExactMatrix a = random_matrix(rng, ring, 4, 5);
    std::size_t r = a.rank();
    auto ker = a.kernel_basis();
    CHECK(r + ker.size() == 5);  // rank-nullity
    for (const auto& v : ker) {
      ExactMatrix col(ring, 5, 1);
      for (std::size_t i = 0; i < 5; ++i) col.set(i, 0, v[i]);
      CHECK((a * col).is_zero());
    }
    CHECK(a.rank() == a.transpose().rank());
  }
  // A known rank-1 matrix.
  ExactMatrix outer = ExactMatrix::from_rows(
      ExactRing::Q(), {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}, {Rat(3), Rat(6)}});
  CHECK(outer.rank() == 1);
  CHECK(outer.kernel_basis().size() == 1);
}

TEST_CASE("Smith normal form matches the minor-gcd invariants") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    ExactMatrix a = random_matrix(rng, ExactRing::Z(), 3, 4, -5, 5);
    SmithResult snf = smith_normal_form(a);
    // d_1 ... d_k = gcd of k x k minors; divisibility chain.
    Int prod = 1;
    for (std::size_t k = 0; k < snf.divisors.size(); ++k) {
      CHECK(snf.divisors[k] > 0);
      if (k > 0)
        CHECK(snf.divisors[k] % snf.divisors[k - 1] == 0);
      prod *= snf.divisors[k];
      CHECK(prod == minor_gcd(a, k + 1));
    }
    if (snf.divisors.size() < 3) CHECK(minor_gcd(a, snf.divisors.size() + 1) == 0);
    // Trailing columns of V span the kernel.
    for (std::size_t c = snf.divisors.size(); c < 4; ++c) {
      ExactMatrix col(ExactRing::Z(), 4, 1);
      for (std::size_t i = 0; i < 4; ++i) col.set(i, 0, Rat(snf.V[c][i]));
      CHECK((a * col).is_zero());
    }
  }
}

TEST_CASE("integer kernel basis is saturated") {
  // rows: (2, 4) has kernel generated by (2, -1), not (4, -2).
  ExactMatrix a = ExactMatrix::from_rows(ExactRing::Z(), {{Rat(2), Rat(4)}});
  auto k = integer_kernel_basis(a);
  REQUIRE(k.size() == 1);
  Int g;
  mpz_gcd(g.get_mpz_t(), k[0][0].get_mpz_t(), k[0][1].get_mpz_t());
  CHECK(g == 1);
  CHECK(Rat(2) * Rat(k[0][0]) + Rat(4) * Rat(k[0][1]) == 0);
}

TEST_CASE("solve_exact recovers the coefficients") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    ExactMatrix k(ExactRing::Q(), 5, 3);
    do {
      k = random_matrix(rng, ExactRing::Q(), 5, 3);
    } while (k.rank() < 3);
    ExactMatrix x = random_matrix(rng, ExactRing::Q(), 3, 2);
    ExactMatrix b = k * x;
    auto sol = solve_exact(k, b);
    REQUIRE(sol.size() == 2);
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t i = 0; i < 3; ++i) CHECK(sol[c][i] == x.at(i, c));
  }
}

TEST_CASE("symmetry permutations are functorial") {
  ExactRing q = ExactRing::Q();
  std::vector<std::size_t> dims{2, 3, 2};
  std::vector<std::size_t> p{1, 2, 0};  // factor k -> slot p[k]
  std::vector<std::size_t> r{2, 0, 1};
  std::vector<std::size_t> dims_after_p(3);
  for (std::size_t k = 0; k < 3; ++k) dims_after_p[p[k]] = dims[k];
  std::vector<std::size_t> rp(3);
  for (std::size_t k = 0; k < 3; ++k) rp[k] = r[p[k]];
  CHECK(symmetry(dims, rp, q) == symmetry(dims_after_p, r, q) * symmetry(dims, p, q));
  // Identity permutation, and inverse.
  std::vector<std::size_t> idp{0, 1, 2};
  CHECK(symmetry(dims, idp, q).is_identity());
  std::vector<std::size_t> pinv(3);
  for (std::size_t k = 0; k < 3; ++k) pinv[p[k]] = k;
  CHECK((symmetry(dims_after_p, pinv, q) * symmetry(dims, p, q)).is_identity());
}

TEST_CASE("symmetry moves coordinates the right way") {
  ExactRing q = ExactRing::Q();
  // Two factors of dims 2, 3; swap them.
  ExactMatrix s = symmetry({2, 3}, {1, 0}, q);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      ExactMatrix v(q, 6, 1);
      v.set(j + 3 * i, 0, Rat(1));  // basis vector e_i (x) e_j
      ExactMatrix w = s * v;
      CHECK(w.at(i + 2 * j, 0) == 1);  // lands on e_j (x) e_i
      CHECK(w.nonzeros() == 1);
    }
}

TEST_CASE("canonical duality satisfies both zig-zags") {
  for (std::size_t d = 1; d <= 5; ++d) {
    for (ExactRing ring : {ExactRing::Q(), ExactRing::Fp(3), ExactRing::Z()}) {
      DualityData data = canonical_duality(d, ring);
      CHECK(data.dim == d);
      CHECK(data.validate());
    }
  }
}

TEST_CASE("perturbed duality data validates iff eps inverts eta") {
  ExactRing q = ExactRing::Q();
  std::size_t d = 2;
  // eta = vec of diag(1, 3), eps = vec of diag(1, 1/3).
  DualityData good{d, ExactMatrix(q, d * d, 1), ExactMatrix(q, 1, d * d)};
  good.eta.set(0, 0, Rat(1));
  good.eta.set(3, 0, Rat(3));
  good.eps.set(0, 0, Rat(1));
  good.eps.set(0, 3, Rat(1, 3));
  CHECK(good.validate());
  DualityData bad = good;
  bad.eps.set(0, 3, Rat(1, 2));  // no longer inverse
  CHECK(!bad.validate());
}

TEST_CASE("word calculus: snake composites are identities") {
  ExactRing q = ExactRing::Q();
  for (std::size_t d = 1; d <= 3; ++d) {
    DualityData data = canonical_duality(d, q);
    Word vl{Letter::L};
    Word vr{Letter::R};
    CHECK(word_dimension(vl, d) == d);
    CHECK(word_dimension({Letter::L, Letter::R, Letter::L}, d) == d * d * d);
    // (L) -> (L R L) -> (L): insert at 1, contract at 0.
    ExactMatrix up = eta_insertion(data, vl, 1);
    ExactMatrix down = eps_contraction(data, {Letter::L, Letter::R, Letter::L}, 0);
    CHECK((down * up).is_identity());
    // (R) -> (R L R) -> (R): insert at 0, contract at 1.
    ExactMatrix up2 = eta_insertion(data, vr, 0);
    ExactMatrix down2 = eps_contraction(data, {Letter::R, Letter::L, Letter::R}, 1);
    CHECK((down2 * up2).is_identity());
  }
}
