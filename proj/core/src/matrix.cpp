#include "paratrace/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>

namespace paratrace {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

ExactMatrix ExactMatrix::identity(ExactRing ring, std::size_t n) {
  ExactMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rat(1));
  return m;
}

ExactMatrix ExactMatrix::from_rows(ExactRing ring,
                                   const std::vector<std::vector<Rat>>& rows) {
  std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  ExactMatrix m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    require(rows[i].size() == c, "from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) {
      Rat v = ring.normalize(rows[i][j]);
      if (v != 0) m.data_[i].emplace_back(j, v);
    }
  }
  return m;
}

Rat ExactMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return Rat(0);
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Rat& v) {
  require(r < rows_ && c < cols_, "set: index out of range");
  Rat nv = ring_.normalize(v);
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (nv == 0) row.erase(it);
    else it->second = nv;
  } else if (nv != 0) {
    row.insert(it, {c, nv});
  }
}

void ExactMatrix::add_to(std::size_t r, std::size_t c, const Rat& v) {
  set(r, c, at(r, c) + v);
}

std::size_t ExactMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  require(ring_ == o.ring_, "matrix *: ring mismatch");
  require(cols_ == o.rows_, "matrix *: shape mismatch");
  ExactMatrix out(ring_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::map<std::size_t, Rat> acc;
    for (const auto& [k, a] : data_[r])
      for (const auto& [c, b] : o.data_[k]) acc[c] += a * b;
    auto& row = out.data_[r];
    for (auto& [c, v] : acc) {
      Rat nv = ring_.normalize(v);
      if (nv != 0) row.emplace_back(c, nv);
    }
  }
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  require(ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_, "matrix +: mismatch");
  ExactMatrix out(ring_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto &a = data_[r], &b = o.data_[r];
    std::size_t i = 0, j = 0;
    auto& row = out.data_[r];
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        row.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        row.push_back(b[j++]);
      } else {
        Rat v = ring_.normalize(a[i].second + b[j].second);
        if (v != 0) row.emplace_back(a[i].first, v);
        ++i; ++j;
      }
    }
  }
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  return *this + o.scaled(Rat(-1));
}

ExactMatrix ExactMatrix::scaled(const Rat& s) const {
  ExactMatrix out(ring_, rows_, cols_);
  Rat ns = ring_.normalize(s);
  if (ns == 0) return out;
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) {
      Rat nv = ring_.normalize(v * ns);
      if (nv != 0) out.data_[r].emplace_back(c, nv);
    }
  return out;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& o) const {
  require(ring_ == o.ring_, "kron: ring mismatch");
  ExactMatrix out(ring_, rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t ra = 0; ra < rows_; ++ra)
    for (std::size_t rb = 0; rb < o.rows_; ++rb) {
      auto& row = out.data_[ra * o.rows_ + rb];
      for (const auto& [ca, va] : data_[ra])
        for (const auto& [cb, vb] : o.data_[rb]) {
          Rat v = ring_.normalize(va * vb);
          if (v != 0) row.emplace_back(ca * o.cols_ + cb, v);
        }
    }
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out.data_[c].emplace_back(r, v);
  return out;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool ExactMatrix::is_zero() const {
  for (const auto& row : data_)
    if (!row.empty()) return false;
  return true;
}

bool ExactMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    if (data_[r].size() != 1 || data_[r][0].first != r || data_[r][0].second != 1)
      return false;
  return true;
}

namespace {

// Incremental sparse echelon set over Q or F_p.
struct Echelon {
  explicit Echelon(const ExactRing& ring) : ring(ring) {}
  ExactRing ring;
  // pivot column -> row (normalized so pivot entry is 1)
  std::map<std::size_t, std::map<std::size_t, Rat>> pivots;

  Rat norm(const Rat& x) const {
    if (ring.kind() == ExactRing::Kind::PrimeField) return ring.normalize(x);
    return x;  // Z handled in Q
  }

  // Reduce a row against the pivots; if nonzero, install it. Returns whether
  // the row increased the rank.
  bool insert(std::map<std::size_t, Rat> row) {
    while (!row.empty()) {
      std::size_t lead = row.begin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        Rat inv = ring.is_field() ? ring.invert(row.begin()->second)
                                  : Rat(1) / row.begin()->second;
        for (auto& [c, v] : row) v = norm(v * inv);
        for (auto rit = row.begin(); rit != row.end();)
          rit = (rit->second == 0) ? row.erase(rit) : std::next(rit);
        pivots.emplace(lead, std::move(row));
        return true;
      }
      Rat f = row.begin()->second;
      for (const auto& [c, v] : it->second) {
        auto [pos, inserted] = row.try_emplace(c, Rat(0));
        pos->second = norm(pos->second - f * v);
        if (pos->second == 0) row.erase(pos);
      }
    }
    return false;
  }
};

}  // namespace

std::size_t ExactMatrix::rank() const {
  ExactRing field = ring_.kind() == ExactRing::Kind::Integers ? ExactRing::Q() : ring_;
  Echelon e(field);
  std::size_t rank = 0;
  for (std::size_t r = 0; r < rows_; ++r) {
    std::map<std::size_t, Rat> row(data_[r].begin(), data_[r].end());
    if (e.insert(std::move(row))) ++rank;
  }
  return rank;
}

std::vector<std::vector<Rat>> ExactMatrix::kernel_basis() const {
  ExactRing field = ring_.kind() == ExactRing::Kind::Integers ? ExactRing::Q() : ring_;
  Echelon e(field);
  for (std::size_t r = 0; r < rows_; ++r)
    e.insert({data_[r].begin(), data_[r].end()});
  // Full reduction (RREF): clear each pivot row against later pivots.
  for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
    auto& row = it->second;
    for (auto jt = std::next(e.pivots.find(it->first)); jt != e.pivots.end(); ++jt) {
      auto pos = row.find(jt->first);
      if (pos == row.end()) continue;
      Rat f = pos->second;
      for (const auto& [c, v] : jt->second) {
        auto [p2, ins] = row.try_emplace(c, Rat(0));
        p2->second = e.norm(p2->second - f * v);
        if (p2->second == 0) row.erase(p2);
      }
    }
  }
  std::vector<std::vector<Rat>> basis;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (e.pivots.count(c)) continue;
    std::vector<Rat> x(cols_, Rat(0));
    x[c] = 1;
    for (const auto& [pc, row] : e.pivots) {
      auto it = row.find(c);
      if (it != row.end()) x[pc] = e.norm(-it->second);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c)
      os << (c ? " " : "") << at(r, c).get_str();
    os << "\n";
  }
  return os.str();
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) { return a.kron(b); }

SmithResult smith_normal_form(const ExactMatrix& a) {
  require(a.ring().kind() == ExactRing::Kind::Integers ||
              a.ring().kind() == ExactRing::Kind::Rationals,
          "smith_normal_form: integer matrices only");
  std::size_t R = a.rows(), C = a.cols();
  std::vector<std::vector<Int>> M(R, std::vector<Int>(C, 0));
  for (std::size_t r = 0; r < R; ++r)
    for (const auto& [c, v] : a.row(r)) {
      require(v.get_den() == 1, "smith_normal_form: non-integer entry");
      M[r][c] = v.get_num();
    }
  std::vector<std::vector<Int>> V(C, std::vector<Int>(C, 0));
  for (std::size_t i = 0; i < C; ++i) V[i][i] = 1;
  // V is stored column-major: V[j] is column j.

  auto col_add = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t r = 0; r < R; ++r) M[r][dst] += f * M[r][src];
    for (std::size_t r = 0; r < C; ++r) V[dst][r] += f * V[src][r];
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < R; ++r) std::swap(M[r][i], M[r][j]);
    std::swap(V[i], V[j]);
  };
  auto col_neg = [&](std::size_t j) {
    for (std::size_t r = 0; r < R; ++r) M[r][j] = -M[r][j];
    for (std::size_t r = 0; r < C; ++r) V[j][r] = -V[j][r];
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t c = 0; c < C; ++c) M[dst][c] += f * M[src][c];
  };

  std::size_t t = 0;
  std::vector<Int> divisors;
  while (t < R && t < C) {
    // Find the nonzero entry of minimal absolute value in the remaining block.
    std::size_t pr = t, pc = t;
    bool found = false;
    Int best = 0;
    for (std::size_t r = t; r < R; ++r)
      for (std::size_t c = t; c < C; ++c)
        if (M[r][c] != 0 && (!found || abs(M[r][c]) < best)) {
          best = abs(M[r][c]);
          pr = r; pc = c; found = true;
        }
    if (!found) break;
    if (pr != t) std::swap(M[pr], M[t]);
    if (pc != t) col_swap(pc, t);
    // Clear row and column t.
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < R; ++r)
        if (M[r][t] != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), M[r][t].get_mpz_t(), M[t][t].get_mpz_t());
          row_add(r, t, -q);
          if (M[r][t] != 0) { std::swap(M[r], M[t]); clean = false; }
        }
      for (std::size_t c = t + 1; c < C; ++c)
        if (M[t][c] != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), M[t][c].get_mpz_t(), M[t][t].get_mpz_t());
          col_add(c, t, -q);
          if (M[t][c] != 0) { col_swap(c, t); clean = false; }
        }
    }
    // Divisibility: fold in any entry the pivot does not divide.
    bool redo = false;
    for (std::size_t r = t + 1; r < R && !redo; ++r)
      for (std::size_t c = t + 1; c < C && !redo; ++c)
        if (M[r][c] % M[t][t] != 0) {
          col_add(t, c, 1);
          redo = true;
        }
    if (redo) continue;
    if (M[t][t] < 0) col_neg(t);
    divisors.push_back(M[t][t]);
    ++t;
  }
  return SmithResult{std::move(divisors), std::move(V)};
}

std::vector<std::vector<Int>> integer_kernel_basis(const ExactMatrix& a) {
  SmithResult s = smith_normal_form(a);
  std::vector<std::vector<Int>> out;
  for (std::size_t c = s.divisors.size(); c < a.cols(); ++c) out.push_back(s.V[c]);
  return out;
}

std::vector<std::vector<Rat>> solve_exact(const ExactMatrix& k, const ExactMatrix& b) {
  require(k.rows() == b.rows(), "solve_exact: shape mismatch");
  std::size_t R = k.rows(), C = k.cols(), W = b.cols();
  // Dense augmented elimination over Q.
  std::vector<std::vector<Rat>> aug(R, std::vector<Rat>(C + W, Rat(0)));
  for (std::size_t r = 0; r < R; ++r) {
    for (const auto& [c, v] : k.row(r)) aug[r][c] = v;
    for (const auto& [c, v] : b.row(r)) aug[r][C + c] = v;
  }
  std::vector<std::size_t> pivot_row(C, SIZE_MAX);
  std::size_t rr = 0;
  for (std::size_t c = 0; c < C && rr < R; ++c) {
    std::size_t p = rr;
    while (p < R && aug[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(aug[p], aug[rr]);
    Rat inv = 1 / aug[rr][c];
    for (std::size_t j = c; j < C + W; ++j) aug[rr][j] *= inv;
    for (std::size_t r2 = 0; r2 < R; ++r2) {
      if (r2 == rr || aug[r2][c] == 0) continue;
      Rat f = aug[r2][c];
      for (std::size_t j = c; j < C + W; ++j) aug[r2][j] -= f * aug[rr][j];
    }
    pivot_row[c] = rr;
    ++rr;
  }
  for (std::size_t r = rr; r < R; ++r)
    for (std::size_t j = C; j < C + W; ++j)
      require(aug[r][j] == 0, "solve_exact: inconsistent system");
  for (std::size_t c = 0; c < C; ++c)
    require(pivot_row[c] != SIZE_MAX, "solve_exact: rank-deficient system");
  std::vector<std::vector<Rat>> X(W, std::vector<Rat>(C, Rat(0)));
  for (std::size_t c = 0; c < C; ++c)
    for (std::size_t w = 0; w < W; ++w) X[w][c] = aug[pivot_row[c]][C + w];
  return X;
}

std::string ModuleDescription::to_string() const {
  std::ostringstream os;
  os << free_rank;
  for (const auto& d : torsion) os << " + Z/" << d.get_str();
  return os.str();
}

}  // namespace paratrace
