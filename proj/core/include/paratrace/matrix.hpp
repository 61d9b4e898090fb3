#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "paratrace/ring.hpp"

namespace paratrace {

// Exact matrix over Q, Z or F_p.  Stored sparsely (per-row sorted coordinate
// lists); all arithmetic is exact, entries are kept ring-normalized.
class ExactMatrix {
 public:
  ExactMatrix(ExactRing ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols), data_(rows) {}

  static ExactMatrix identity(ExactRing ring, std::size_t n);
  static ExactMatrix zero(ExactRing ring, std::size_t rows, std::size_t cols) {
    return ExactMatrix(ring, rows, cols);
  }
  static ExactMatrix from_rows(ExactRing ring,
                               const std::vector<std::vector<Rat>>& rows);

  ExactRing ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rat& v);
  void add_to(std::size_t r, std::size_t c, const Rat& v);
  const std::vector<std::pair<std::size_t, Rat>>& row(std::size_t r) const {
    return data_[r];
  }
  std::size_t nonzeros() const;

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix scaled(const Rat& s) const;
  ExactMatrix kron(const ExactMatrix& o) const;
  ExactMatrix transpose() const;

  bool operator==(const ExactMatrix& o) const;
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_identity() const;

  // Exact rank by fraction-preserving Gaussian elimination (fields; over Z
  // the rank is computed in Q, which is the same).
  std::size_t rank() const;

  // Basis of the right kernel (fields); each vector has length cols().
  std::vector<std::vector<Rat>> kernel_basis() const;

  std::string to_string() const;

 private:
  void normalize_row(std::size_t r);
  ExactRing ring_;
  std::size_t rows_, cols_;
  std::vector<std::vector<std::pair<std::size_t, Rat>>> data_;
};

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

// Smith normal form of an integer matrix: returns the nonzero diagonal
// entries d_1 | d_2 | ... (positive), plus the unimodular right transform V
// with U*A*V diagonal; the last cols-rank columns of V are a basis of the
// integer kernel lattice.
struct SmithResult {
  std::vector<Int> divisors;
  std::vector<std::vector<Int>> V;  // cols x cols, column-major access V[c]
};
SmithResult smith_normal_form(const ExactMatrix& a);

// Kernel lattice basis of an integer matrix (saturated; columns of V).
std::vector<std::vector<Int>> integer_kernel_basis(const ExactMatrix& a);

// Solve K * X = B exactly over Q where K has full column rank; throws if
// inconsistent.  Returns X as dense columns.
std::vector<std::vector<Rat>> solve_exact(const ExactMatrix& k, const ExactMatrix& b);

// Finitely generated abelian group / vector space description.
struct ModuleDescription {
  std::size_t free_rank = 0;          // dimension over a field
  std::vector<Int> torsion;           // elementary divisors > 1 (Z only)
  bool operator==(const ModuleDescription&) const = default;
  std::string to_string() const;
};

}  // namespace paratrace
