#include "paratrace/trace.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace paratrace {

namespace {

std::size_t posmod(long long x, std::size_t m) {
  long long mm = static_cast<long long>(m);
  long long r = x % mm;
  return static_cast<std::size_t>(r < 0 ? r + mm : r);
}

using SparseVec = std::map<unsigned long long, Rat>;

// y = M x on one tensor slot of a sparse vector (slot weight pw_slot).
SparseVec apply_at_slot(const ExactMatrix& m, const SparseVec& x,
                        unsigned long long pw_slot, std::size_t d) {
  SparseVec y;
  for (const auto& [idx, v] : x) {
    std::size_t j = static_cast<std::size_t>((idx / pw_slot) % d);
    unsigned long long base = idx - j * pw_slot;
    for (std::size_t a = 0; a < d; ++a) {
      Rat e = m.at(a, j);
      if (e == 0) continue;
      Rat& slot = y[base + a * pw_slot];
      slot += e * v;
      if (slot == 0) y.erase(base + a * pw_slot);
    }
  }
  return y;
}

}  // namespace

std::optional<std::string> validate(const LabeledCircle& lc) {
  if (!lc.config.valid()) return "invalid circle configuration";
  if (!lc.duality.validate()) return "duality datum fails the zig-zag identities";
  if (lc.arc_labels.size() != lc.config.arc_count())
    return "label count does not match arc count";
  for (const auto& m : lc.arc_labels) {
    if (m.rows() != lc.duality.dim || m.cols() != lc.duality.dim)
      return "arc label is not a square matrix of the duality dimension";
    if (m.ring() != lc.duality.ring()) return "arc label ring mismatch";
  }
  return std::nullopt;
}

Rat evaluate(const LabeledCircle& lc) {
  if (auto err = validate(lc)) throw std::invalid_argument(*err);
  const std::size_t r = lc.config.points.size();
  const std::size_t d = lc.duality.dim;
  const std::size_t slots = 2 * r;
  std::vector<unsigned long long> pw(slots + 1, 1);
  for (std::size_t k = 0; k < slots; ++k) pw[k + 1] = pw[k] * d;
  auto weight = [&](std::size_t s) { return pw[slots - 1 - s]; };

  // eta at every point: slots (2c, 2c+1) = (V^dual, V) of point c.
  SparseVec w{{0, Rat(1)}};
  for (std::size_t c = 0; c < r; ++c) {
    SparseVec next;
    for (const auto& [idx, v] : w)
      for (std::size_t e = 0; e < d * d; ++e) {
        Rat h = lc.duality.eta.at(e, 0);
        if (h != 0) next[idx * d * d + e] = v * h;
      }
    w = std::move(next);
  }

  // Cyclic reassociation into arc pairs: arc c = (V of point c, V^dual of
  // point c+1), so slot 2c+1 -> 2c and slot 2c -> 2c-1 (mod 2r).
  SparseVec rw;
  for (const auto& [idx, v] : w) {
    unsigned long long out = 0;
    for (std::size_t k = 0; k < slots; ++k) {
      std::size_t digit = static_cast<std::size_t>((idx / weight(k)) % d);
      std::size_t target = (k % 2 == 0) ? (k + slots - 1) % slots : k - 1;
      out += digit * weight(target);
    }
    rw[out] += v;
  }

  // Arc endomorphisms on the V slot of each arc pair.
  for (std::size_t c = 0; c < r; ++c)
    rw = apply_at_slot(lc.arc_labels[c], rw, weight(2 * c), d);

  // eps on every arc pair.
  Rat sum = 0;
  for (const auto& [idx, v] : rw) {
    Rat prod = v;
    for (std::size_t c = 0; c < r && prod != 0; ++c) {
      std::size_t a = static_cast<std::size_t>((idx / weight(2 * c)) % d);
      std::size_t b = static_cast<std::size_t>((idx / weight(2 * c + 1)) % d);
      prod *= lc.duality.eps.at(0, a * d + b);
    }
    sum += prod;
  }
  return lc.duality.ring().normalize(sum);
}

Rat evaluate_contracted(const LabeledCircle& lc) {
  if (auto err = validate(lc)) throw std::invalid_argument(*err);
  const std::size_t d = lc.duality.dim;
  ExactRing ring = lc.duality.ring();
  // eta and eps reshaped to d x d: H(b, a) = eta[(a, b)], E(a, x) = eps[(x, a)].
  ExactMatrix H(ring, d, d), E(ring, d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      H.set(b, a, lc.duality.eta.at(a * d + b, 0));
      E.set(a, b, lc.duality.eps.at(0, b * d + a));
    }
  ExactMatrix p = ExactMatrix::identity(ring, d);
  for (const auto& phi : lc.arc_labels) p = (E * (phi * H)) * p;
  Rat tr = 0;
  for (std::size_t i = 0; i < d; ++i) tr += p.at(i, i);
  return ring.normalize(tr);
}

LabeledCircle transport(const LabeledCircle& lc, const CircleMorphism& move) {
  if (auto err = validate(lc)) throw std::invalid_argument(*err);
  if (move.src != lc.config) throw std::invalid_argument("transport: configuration mismatch");
  std::size_t m = lc.arc_labels.size();
  LabeledCircle out{move.dst, lc.duality, {}};
  for (const auto& fiber : fibers(move.para_map)) {
    ExactMatrix prod = ExactMatrix::identity(lc.duality.ring(), lc.duality.dim);
    for (long long x : fiber) prod = lc.arc_labels[posmod(x, m)] * prod;
    out.arc_labels.push_back(prod);
  }
  return out;
}

bool cyclic_invariance_check(const std::vector<ExactMatrix>& labels,
                             const DualityData& duality) {
  if (labels.empty()) throw std::invalid_argument("cyclic_invariance_check: no labels");
  std::size_t r = labels.size();
  LabeledCircle base{from_para(ParaObj{r}), duality, labels};
  Rat z = evaluate_contracted(base);
  std::vector<ExactMatrix> rotated = labels;
  for (std::size_t s = 1; s < r; ++s) {
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    if (evaluate_contracted({base.config, duality, rotated}) != z) return false;
  }
  // Rational rotations of the configuration (the circle-action shadow),
  // including a full loop.
  for (std::size_t k = 1; k <= 2 * r; ++k) {
    Rat theta(static_cast<long>(k), static_cast<long>(2 * r));
    CircleMorphism rot = act_rotation_morphism(base.config, theta);
    if (evaluate_contracted(transport(base, rot)) != z) return false;
  }
  // Bind the two evaluation routes whenever the full tensor fits comfortably.
  double full = 1;
  for (std::size_t i = 0; i < 2 * r; ++i) full *= static_cast<double>(duality.dim);
  if (full <= 70000 && evaluate(base) != z) return false;
  return true;
}

ExactMatrix hochschild_diagram(const AlgebraSC& a, const ParaMap& f) {
  if (auto err = validate_algebra(a)) throw std::invalid_argument(err->message);
  if (!f.valid()) throw std::invalid_argument("hochschild_diagram: invalid map");
  std::size_t m = f.src.orbits;
  long long x0 = window_start(f);
  // Reorder the source slots into lift order over the preimage window, then
  // multiply each fiber; fibers are consecutive in window order.
  std::vector<std::size_t> dims(m, a.dim), perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[posmod(x0 + static_cast<long long>(i), m)] = i;
  ExactMatrix reorder = symmetry(dims, perm, a.ring);
  ExactMatrix mul = ExactMatrix::identity(a.ring, 1);
  for (const auto& fiber : fibers(f)) mul = kron(mul, iterated_mul(a, fiber.size()));
  return mul * reorder;
}

ExactMatrix cone_inclusion(const AlgebraSC& a, ParaObj n) {
  ExactMatrix u = ExactMatrix::identity(a.ring, 1);
  for (std::size_t i = 0; i < n.orbits; ++i) u = kron(u, a.unit_column());
  return u;
}

}  // namespace paratrace
