#include "paratrace/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace paratrace {

ExactMatrix AlgebraSC::mul_matrix() const {
  ExactMatrix m(ring, dim, dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        const Rat& v = c(i, j, k);
        if (v != 0) m.set(k, i * dim + j, v);
      }
  return m;
}

ExactMatrix AlgebraSC::unit_column() const {
  ExactMatrix u(ring, dim, 1);
  for (std::size_t k = 0; k < dim; ++k)
    if (unit[k] != 0) u.set(k, 0, unit[k]);
  return u;
}

std::optional<AlgebraError> validate_algebra(const AlgebraSC& a) {
  if (a.dim == 0) return AlgebraError{"dimension must be positive"};
  if (a.unit.size() != a.dim) return AlgebraError{"unit vector has wrong length"};
  if (a.mul.size() != a.dim * a.dim * a.dim)
    return AlgebraError{"structure-constant tensor has wrong length"};
  ExactMatrix mu = a.mul_matrix();
  ExactMatrix id = ExactMatrix::identity(a.ring, a.dim);
  // associativity: mu . (mu (x) id) = mu . (id (x) mu)
  ExactMatrix lhs = mu * kron(mu, id);
  ExactMatrix rhs = mu * kron(id, mu);
  if (lhs != rhs) {
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j)
        for (std::size_t k = 0; k < a.dim; ++k) {
          std::size_t col = (i * a.dim + j) * a.dim + k;
          for (std::size_t r = 0; r < a.dim; ++r)
            if (lhs.at(r, col) != rhs.at(r, col)) {
              std::ostringstream os;
              os << "associativity fails on (e_" << i << " e_" << j << ") e_" << k;
              return AlgebraError{os.str()};
            }
        }
  }
  ExactMatrix u = a.unit_column();
  if (mu * kron(u, id) != id) return AlgebraError{"left unit law fails"};
  if (mu * kron(id, u) != id) return AlgebraError{"right unit law fails"};
  return std::nullopt;
}

AlgebraSC matrix_algebra(std::size_t d, ExactRing ring) {
  // basis e_{ab}, index a*d + b; e_{ab} e_{cd} = [b == c] e_{ad}
  AlgebraSC a{ring, d * d, std::vector<Rat>(d * d, Rat(0)),
              std::vector<Rat>(d * d * d * d * d * d, Rat(0))};
  for (std::size_t x = 0; x < d; ++x) a.unit[x * d + x] = 1;
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q)
      for (std::size_t s = 0; s < d; ++s)
        for (std::size_t t = 0; t < d; ++t)
          if (q == s) {
            std::size_t i = p * d + q, j = s * d + t, k = p * d + t;
            a.mul[k + a.dim * (j + a.dim * i)] = 1;
          }
  return a;
}

AlgebraSC truncated_polynomial(std::size_t n, ExactRing ring) {
  AlgebraSC a{ring, n, std::vector<Rat>(n, Rat(0)),
              std::vector<Rat>(n * n * n, Rat(0))};
  a.unit[0] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) a.mul[(i + j) + n * (j + n * i)] = 1;
  return a;
}

AlgebraSC cyclic_group_algebra(std::size_t n, ExactRing ring) {
  AlgebraSC a{ring, n, std::vector<Rat>(n, Rat(0)),
              std::vector<Rat>(n * n * n, Rat(0))};
  a.unit[0] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a.mul[((i + j) % n) + n * (j + n * i)] = 1;
  return a;
}

std::optional<AlgebraSC> builtin_algebra(const std::string& spec, ExactRing ring) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) return std::nullopt;
  std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  try {
    if (kind == "matrix") return matrix_algebra(std::stoul(arg), ring);
    if (kind == "truncpoly") return truncated_polynomial(std::stoul(arg), ring);
    if (kind == "group" && arg.size() > 1 && arg[0] == 'C')
      return cyclic_group_algebra(std::stoul(arg.substr(1)), ring);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return std::nullopt;
}

AlgebraSC change_basis(const AlgebraSC& a, const ExactMatrix& g) {
  ExactMatrix id = ExactMatrix::identity(a.ring, a.dim);
  auto ginv_cols = solve_exact(g, id);
  ExactMatrix ginv(a.ring, a.dim, a.dim);
  for (std::size_t c = 0; c < a.dim; ++c)
    for (std::size_t r = 0; r < a.dim; ++r)
      if (ginv_cols[c][r] != 0) ginv.set(r, c, ginv_cols[c][r]);
  ExactMatrix mu = ginv * (a.mul_matrix() * kron(g, g));
  AlgebraSC out{a.ring, a.dim, std::vector<Rat>(a.dim, Rat(0)),
                std::vector<Rat>(a.dim * a.dim * a.dim, Rat(0))};
  ExactMatrix u = ginv * a.unit_column();
  for (std::size_t k = 0; k < a.dim; ++k) out.unit[k] = u.at(k, 0);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        out.mul[k + a.dim * (j + a.dim * i)] = mu.at(k, i * a.dim + j);
  return out;
}

ExactMatrix iterated_mul(const AlgebraSC& a, std::size_t n) {
  if (n == 0) return a.unit_column();
  ExactMatrix m = ExactMatrix::identity(a.ring, a.dim);
  ExactMatrix mu = a.mul_matrix();
  for (std::size_t i = 1; i < n; ++i)
    m = mu * kron(m, ExactMatrix::identity(a.ring, a.dim));
  return m;
}

ExactMatrix monad_functor(const AlgebraSC& a, const MonotoneMap& f) {
  if (!f.valid()) throw std::invalid_argument("monad_functor: invalid monotone map");
  // Fibers of a monotone map are consecutive; factor j of the target consumes
  // the slots of f^{-1}(j).
  ExactMatrix out = ExactMatrix::identity(a.ring, 1);
  std::size_t i = 0;
  for (std::size_t j = 0; j < f.dst.size; ++j) {
    std::size_t c = 0;
    while (i + c < f.src.size && f.values[i + c] == j) ++c;
    out = kron(out, iterated_mul(a, c));
    i += c;
  }
  return out;
}

}  // namespace paratrace
