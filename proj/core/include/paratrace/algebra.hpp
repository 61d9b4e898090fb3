#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paratrace/matrix.hpp"
#include "paratrace/ordsets.hpp"

namespace paratrace {

// Finite-dimensional associative unital algebra by structure constants:
// e_i * e_j = sum_k c^k_{ij} e_k, stored flat at index k + dim*(j + dim*i).
struct AlgebraSC {
  ExactRing ring = ExactRing::Q();
  std::size_t dim = 1;
  std::vector<Rat> unit;
  std::vector<Rat> mul;

  const Rat& c(std::size_t i, std::size_t j, std::size_t k) const {
    return mul[k + dim * (j + dim * i)];
  }

  // Multiplication as a dim x dim^2 matrix (column (i,j) = e_i * e_j).
  ExactMatrix mul_matrix() const;
  // Unit as a dim x 1 column.
  ExactMatrix unit_column() const;
};

struct AlgebraError {
  std::string message;
};

// Checks associativity and two-sided unitality exactly; reports the first
// failing basis triple.
std::optional<AlgebraError> validate_algebra(const AlgebraSC& a);

// Built-in generators.
AlgebraSC matrix_algebra(std::size_t d, ExactRing ring);       // M_d
AlgebraSC truncated_polynomial(std::size_t n, ExactRing ring); // k[x]/x^n
AlgebraSC cyclic_group_algebra(std::size_t n, ExactRing ring); // k[C_n]

// Parse "matrix:d", "truncpoly:n", or "group:Cn".
std::optional<AlgebraSC> builtin_algebra(const std::string& spec, ExactRing ring);

// Conjugate the structure constants by an invertible basis change g (the new
// basis is f_i = sum_j g_{ji} e_j).  Used for basis-invariance tests.
AlgebraSC change_basis(const AlgebraSC& a, const ExactMatrix& g);

// A as a monoidal functor on finite linear orders: I |-> A^{(x)|I|}, and a
// monotone f: I -> J acts by multiplying each fiber f^{-1}(j) in order
// (empty fiber |-> unit insertion).  Monoidal: join |-> Kronecker product.
ExactMatrix monad_functor(const AlgebraSC& a, const MonotoneMap& f);

// Iterated multiplication A^{(x)n} -> A, left-to-right; n = 0 is the unit.
ExactMatrix iterated_mul(const AlgebraSC& a, std::size_t n);

}  // namespace paratrace
