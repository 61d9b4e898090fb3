#include "paratrace/hochschild.hpp"

#include <map>
#include <stdexcept>

namespace paratrace {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

ExactMatrix id_power(ExactRing ring, std::size_t d, std::size_t n) {
  std::size_t dim = 1;
  for (std::size_t i = 0; i < n; ++i) dim *= d;
  return ExactMatrix::identity(ring, dim);
}

void set_block(ExactMatrix& m, std::size_t r0, std::size_t c0, const ExactMatrix& block) {
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (const auto& [c, v] : block.row(r)) m.set(r0 + r, c0 + c, v);
}

}  // namespace

HochschildComplex::HochschildComplex(AlgebraSC a)
    : a_(std::move(a)), mu_(a_.mul_matrix()), unit_(a_.unit_column()) {
  if (auto err = validate_algebra(a_)) throw std::invalid_argument(err->message);
}

std::size_t HochschildComplex::chain_dim(std::size_t p) const {
  std::size_t n = 1;
  for (std::size_t i = 0; i <= p; ++i) n *= a_.dim;
  return n;
}

ExactMatrix HochschildComplex::rotation(std::size_t p) const {
  std::vector<std::size_t> dims(p + 1, a_.dim), perm(p + 1);
  for (std::size_t k = 0; k <= p; ++k) perm[k] = (k + 1) % (p + 1);
  return symmetry(dims, perm, a_.ring);
}

ExactMatrix HochschildComplex::face(std::size_t i, std::size_t p) const {
  require(p >= 1 && i <= p, "face: index out of range");
  if (i < p)
    return kron(kron(id_power(a_.ring, a_.dim, i), mu_),
                id_power(a_.ring, a_.dim, p - 1 - i));
  return kron(mu_, id_power(a_.ring, a_.dim, p - 1)) * rotation(p);
}

ExactMatrix HochschildComplex::degeneracy(std::size_t j, std::size_t p) const {
  require(j <= p, "degeneracy: index out of range");
  return kron(kron(id_power(a_.ring, a_.dim, j + 1), unit_),
              id_power(a_.ring, a_.dim, p - j));
}

ExactMatrix HochschildComplex::t(std::size_t p) const {
  ExactMatrix r = rotation(p);
  return (p % 2 == 1) ? r.scaled(Rat(-1)) : r;
}

ExactMatrix HochschildComplex::b(std::size_t p) const {
  if (p == 0) return ExactMatrix::zero(a_.ring, 0, chain_dim(0));
  ExactMatrix sum = ExactMatrix::zero(a_.ring, chain_dim(p - 1), chain_dim(p));
  for (std::size_t i = 0; i <= p; ++i) {
    ExactMatrix f = face(i, p);
    sum = (i % 2 == 0) ? sum + f : sum - f;
  }
  return sum;
}

ExactMatrix HochschildComplex::N(std::size_t p) const {
  ExactMatrix tp = t(p);
  ExactMatrix acc = ExactMatrix::identity(a_.ring, chain_dim(p));
  ExactMatrix sum = acc;
  for (std::size_t i = 1; i <= p; ++i) {
    acc = tp * acc;
    sum = sum + acc;
  }
  return sum;
}

ExactMatrix HochschildComplex::s_extra(std::size_t p) const {
  return kron(unit_, id_power(a_.ring, a_.dim, p + 1));
}

ExactMatrix HochschildComplex::B(std::size_t p) const {
  ExactMatrix one = ExactMatrix::identity(a_.ring, chain_dim(p + 1));
  return (one - t(p + 1)) * (s_extra(p) * N(p));
}

std::vector<ModuleDescription> hh_ranks(const AlgebraSC& a, std::size_t n_max) {
  HochschildComplex hc(a);
  std::vector<ModuleDescription> out;
  if (a.ring.kind() != ExactRing::Kind::Integers) {
    std::vector<std::size_t> ranks(n_max + 2);
    for (std::size_t n = 0; n <= n_max + 1; ++n) ranks[n] = hc.b(n).rank();
    for (std::size_t n = 0; n <= n_max; ++n) {
      ModuleDescription d;
      d.free_rank = hc.chain_dim(n) - ranks[n] - ranks[n + 1];
      out.push_back(d);
    }
    return out;
  }
  // Over Z: kernel lattice of b_n, then Smith form of the boundary image
  // expressed in kernel coordinates.
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto kb = integer_kernel_basis(hc.b(n));
    std::size_t k = kb.size();
    ExactMatrix K(a.ring, hc.chain_dim(n), k);
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t r = 0; r < hc.chain_dim(n); ++r)
        if (kb[c][r] != 0) K.set(r, c, Rat(kb[c][r]));
    ExactMatrix bn1 = hc.b(n + 1);
    auto X = solve_exact(K, bn1);  // coordinates of boundaries in the kernel
    ExactMatrix Xm(a.ring, k, bn1.cols());
    for (std::size_t c = 0; c < X.size(); ++c)
      for (std::size_t r = 0; r < k; ++r)
        if (X[c][r] != 0) Xm.set(r, c, X[c][r]);
    SmithResult s = smith_normal_form(Xm);
    ModuleDescription d;
    d.free_rank = k - s.divisors.size();
    for (const auto& dv : s.divisors)
      if (dv > 1) d.torsion.push_back(dv);
    out.push_back(d);
  }
  return out;
}

TraceFunctional trace_hh0(const DualityData& data) {
  std::size_t d = data.dim;
  AlgebraSC a = matrix_algebra(d, data.ring());
  HochschildComplex hc(a);
  TraceFunctional f{ExactMatrix(data.ring(), 1, d * d), false, 0};
  for (std::size_t i = 0; i < d; ++i) f.row.set(0, i * d + i, Rat(1));
  f.descends = (f.row * hc.b(1)).is_zero();
  f.rank_on_hh0 = (f.descends && !f.row.is_zero()) ? 1 : 0;
  return f;
}

namespace {

// Column degrees present in Tot_n for truncation weight w.
std::vector<long long> tot_columns(long long n, std::size_t w) {
  std::vector<long long> cols;
  for (std::size_t j = 0; j < w; ++j)
    if (n + 2 * static_cast<long long>(j) >= 0) cols.push_back(static_cast<long long>(j));
  return cols;
}

// Total differential D_n: Tot_n -> Tot_{n-1}, components b (same column)
// and B (next column).
ExactMatrix total_differential(const HochschildComplex& hc, std::size_t w, long long n) {
  auto src_cols = tot_columns(n, w);
  auto dst_cols = tot_columns(n - 1, w);
  std::map<long long, std::size_t> dst_off;
  std::size_t rows = 0;
  for (long long j : dst_cols) {
    dst_off[j] = rows;
    rows += hc.chain_dim(static_cast<std::size_t>(n - 1 + 2 * j));
  }
  std::size_t cols = 0;
  for (long long j : src_cols) cols += hc.chain_dim(static_cast<std::size_t>(n + 2 * j));
  ExactMatrix D = ExactMatrix::zero(hc.algebra().ring, rows, cols);
  std::size_t coff = 0;
  for (long long j : src_cols) {
    std::size_t p = static_cast<std::size_t>(n + 2 * j);
    if (p >= 1 && dst_off.count(j)) set_block(D, dst_off[j], coff, hc.b(p));
    if (dst_off.count(j + 1)) set_block(D, dst_off[j + 1], coff, hc.B(p));
    coff += hc.chain_dim(p);
  }
  return D;
}

}  // namespace

std::vector<HCMinusEntry> hc_minus_truncated(const AlgebraSC& a, std::size_t weight,
                                             long long degree_lo, long long degree_hi) {
  require(weight >= 1, "hc_minus_truncated: weight must be >= 1");
  require(a.ring.is_field(), "hc_minus_truncated: field coefficients only");
  HochschildComplex hc(a);
  std::vector<HCMinusEntry> out;
  for (long long n = degree_hi; n >= degree_lo; --n) {
    ExactMatrix Dn = total_differential(hc, weight, n);
    ExactMatrix Dn1 = total_differential(hc, weight, n + 1);
    std::size_t nullity = Dn.cols() - Dn.rank();
    std::size_t dim = nullity - Dn1.rank();
    out.push_back(HCMinusEntry{n, dim, n >= -2 * (static_cast<long long>(weight) - 1)});
  }
  return out;
}

}  // namespace paratrace
