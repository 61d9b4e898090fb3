#include "paratrace/matcat.hpp"

#include <stdexcept>

namespace paratrace {

namespace {

ExactMatrix id_power(ExactRing ring, std::size_t d, std::size_t n) {
  std::size_t dim = 1;
  for (std::size_t i = 0; i < n; ++i) dim *= d;
  return ExactMatrix::identity(ring, dim);
}

}  // namespace

bool DualityData::validate() const {
  if (dim == 0) return false;
  if (eta.rows() != dim * dim || eta.cols() != 1) return false;
  if (eps.rows() != 1 || eps.cols() != dim * dim) return false;
  if (eta.ring() != eps.ring()) return false;
  ExactMatrix id = ExactMatrix::identity(ring(), dim);
  // (eps (x) id_V) . (id_V (x) eta) = id_V
  ExactMatrix zig1 = kron(eps, id) * kron(id, eta);
  // (id_{V^dual} (x) eps) . (eta (x) id_{V^dual}) = id_{V^dual}
  ExactMatrix zig2 = kron(id, eps) * kron(eta, id);
  return zig1 == id && zig2 == id;
}

DualityData canonical_duality(std::size_t d, ExactRing ring) {
  if (d == 0) throw std::invalid_argument("canonical_duality: d must be >= 1");
  DualityData data{d, ExactMatrix(ring, d * d, 1), ExactMatrix(ring, 1, d * d)};
  for (std::size_t i = 0; i < d; ++i) {
    data.eta.set(i * d + i, 0, Rat(1));
    data.eps.set(0, i * d + i, Rat(1));
  }
  return data;
}

ExactMatrix symmetry(const std::vector<std::size_t>& dims,
                     const std::vector<std::size_t>& perm, ExactRing ring) {
  std::size_t n = dims.size();
  if (perm.size() != n) throw std::invalid_argument("symmetry: length mismatch");
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) throw std::invalid_argument("symmetry: not a permutation");
    seen[p] = true;
  }
  std::vector<std::size_t> out_dims(n);
  for (std::size_t k = 0; k < n; ++k) out_dims[perm[k]] = dims[k];
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  // Strides for flattening (row-major, factor 0 most significant).
  std::vector<std::size_t> in_stride(n, 1), out_stride(n, 1);
  for (std::size_t k = n; k-- > 1;) in_stride[k - 1] = in_stride[k] * dims[k];
  for (std::size_t k = n; k-- > 1;) out_stride[k - 1] = out_stride[k] * out_dims[k];
  ExactMatrix m(ring, total, total);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t col = 0; col < total; ++col) {
    std::size_t row = 0;
    for (std::size_t k = 0; k < n; ++k) row += idx[k] * out_stride[perm[k]];
    m.set(row, col, Rat(1));
    for (std::size_t k = n; k-- > 0;) {
      if (++idx[k] < dims[k]) break;
      idx[k] = 0;
    }
  }
  return m;
}

std::size_t word_dimension(const Word& w, std::size_t d) {
  std::size_t dim = 1;
  for (std::size_t i = 0; i < w.size(); ++i) dim *= d;
  return dim;
}

ExactMatrix eta_insertion(const DualityData& data, const Word& word, std::size_t pos) {
  if (pos > word.size()) throw std::out_of_range("eta_insertion: bad position");
  ExactMatrix pre = id_power(data.ring(), data.dim, pos);
  ExactMatrix post = id_power(data.ring(), data.dim, word.size() - pos);
  return kron(kron(pre, data.eta), post);
}

ExactMatrix eps_contraction(const DualityData& data, const Word& word, std::size_t pos) {
  if (pos + 1 >= word.size() || word[pos] != Letter::L || word[pos + 1] != Letter::R)
    throw std::invalid_argument("eps_contraction: position is not an adjacent (L, R) pair");
  ExactMatrix pre = id_power(data.ring(), data.dim, pos);
  ExactMatrix post = id_power(data.ring(), data.dim, word.size() - pos - 2);
  return kron(kron(pre, data.eps), post);
}

}  // namespace paratrace
