#include "paratrace/adj.hpp"

#include <stdexcept>

namespace paratrace {

namespace {

bool is_marked(const OneCell& w) { return w.src != w.dst; }

// Size of the order the map is read on (source side of the stored values).
std::size_t stored_src_size(const TwoCell& c) {
  if (is_marked(c.src)) return c.src.blocks + 1;
  if (c.src.src == AdjObj::Minus) return c.src.blocks;  // (- -> -)
  return c.dst.blocks;                                  // (+ -> +), contravariant
}

std::size_t stored_dst_size(const TwoCell& c) {
  if (is_marked(c.src)) return c.dst.blocks + 1;
  if (c.src.src == AdjObj::Minus) return c.dst.blocks;
  return c.src.blocks;
}

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

OneCell hcompose(const OneCell& g, const OneCell& f) {
  require(f.dst == g.src, "hcompose: endpoint mismatch");
  std::size_t k = g.blocks + f.blocks;
  // A trailing R of f meeting a leading L of g (or vice versa) closes a block.
  if (f.src != f.dst && g.src != g.dst) k += 1;
  return OneCell{f.src, g.dst, k};
}

bool TwoCell::valid() const {
  if (src.src != dst.src || src.dst != dst.dst) return false;
  std::size_t m = stored_src_size(*this), n = stored_dst_size(*this);
  if (map.size() != m) return false;
  if (m > 0 && n == 0) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (map[i] >= n) return false;
    if (i > 0 && map[i] < map[i - 1]) return false;
  }
  if (is_marked(src)) {
    if (src.src == AdjObj::Minus) {  // (- -> +): MIN marked
      if (map.front() != 0) return false;
    } else {  // (+ -> -): MAX marked
      if (map.back() != n - 1) return false;
    }
  }
  return true;
}

bool TwoCell::is_identity() const {
  if (!(src == dst)) return false;
  for (std::size_t i = 0; i < map.size(); ++i)
    if (map[i] != i) return false;
  return true;
}

TwoCell identity_two_cell(const OneCell& w) {
  TwoCell c{w, w, {}};
  std::size_t m = stored_src_size(c);
  c.map.resize(m);
  for (std::size_t i = 0; i < m; ++i) c.map[i] = i;
  return c;
}

TwoCell vcompose(const TwoCell& beta, const TwoCell& alpha) {
  require(alpha.dst == beta.src, "vcompose: cell mismatch");
  TwoCell r{alpha.src, beta.dst, {}};
  bool contravariant = !is_marked(alpha.src) && alpha.src.src == AdjObj::Plus;
  if (contravariant) {
    r.map.reserve(beta.map.size());
    for (std::size_t v : beta.map) r.map.push_back(alpha.map[v]);
  } else {
    r.map.reserve(alpha.map.size());
    for (std::size_t v : alpha.map) r.map.push_back(beta.map[v]);
  }
  return r;
}

TwoCell hcompose(const TwoCell& beta, const TwoCell& alpha) {
  require(alpha.src.dst == beta.src.src, "hcompose: endpoint mismatch");
  const AdjObj a = alpha.src.src, b = alpha.src.dst, c = beta.src.dst;
  const std::size_t k2 = beta.src.blocks, k2p = beta.dst.blocks;
  const std::size_t k1 = alpha.src.blocks, k1p = alpha.dst.blocks;
  const auto& A = alpha.map;
  const auto& B = beta.map;
  TwoCell r{hcompose(beta.src, alpha.src), hcompose(beta.dst, alpha.dst), {}};
  auto& C = r.map;
  const bool M = a == AdjObj::Minus, P = a == AdjObj::Plus;
  const bool bM = b == AdjObj::Minus, bP = b == AdjObj::Plus;
  const bool cM = c == AdjObj::Minus, cP = c == AdjObj::Plus;

  if (M && bM && cM) {
    // join of O-maps, beta's blocks first
    C.resize(k2 + k1);
    for (std::size_t i = 0; i < k2; ++i) C[i] = B[i];
    for (std::size_t j = 0; j < k1; ++j) C[k2 + j] = k2p + A[j];
  } else if (M && bM && cP) {
    // marked join: beta is (- -> +), alpha a plain O-map appended inside
    C.resize(k2 + k1 + 1);
    for (std::size_t i = 0; i <= k2; ++i) C[i] = B[i];
    for (std::size_t j = 0; j < k1; ++j) C[k2 + 1 + j] = k2p + 1 + A[j];
  } else if (M && bP && cP) {
    // beta lives in End(+) (contravariant); convert its provenance map to the
    // covariant block map #{i' : B[i'] <= i-1} on the marked composite.
    C.resize(k2 + k1 + 1);
    C[0] = 0;
    for (std::size_t i = 1; i <= k2; ++i) {
      std::size_t cnt = 0;
      for (std::size_t ip = 0; ip < k2p; ++ip)
        if (B[ip] <= i - 1) ++cnt;
      C[i] = cnt;
    }
    for (std::size_t j = 1; j <= k1; ++j) C[k2 + j] = k2p + A[j];
  } else if (P && bP && cP) {
    // provenance join, beta's blocks first on both sides
    C.resize(k2p + k1p);
    for (std::size_t i = 0; i < k2p; ++i) C[i] = B[i];
    for (std::size_t j = 0; j < k1p; ++j) C[k2p + j] = k2 + A[j];
  } else if (M && bP && cM) {
    // (+ -> -) after (- -> +): the two markers fuse into one RL-block
    C.resize(k2 + k1 + 1);
    for (std::size_t i = 0; i <= k2; ++i) C[i] = B[i];
    for (std::size_t j = 1; j <= k1; ++j) C[k2 + j] = k2p + A[j];
  } else if (P && bM && cP) {
    // (- -> +) after (+ -> -): L...R ends close up into (LR)-blocks; compose
    // the marker chains covariantly, then take the gap provenance map.
    std::vector<std::size_t> h(k2 + k1 + 2);
    for (std::size_t i = 0; i <= k2; ++i) h[i] = B[i];
    for (std::size_t j = 0; j <= k1; ++j) h[k2 + 1 + j] = k2p + 1 + A[j];
    C.resize(k2p + k1p + 1);
    for (std::size_t pp = 0; pp <= k2p + k1p; ++pp) {
      std::size_t best = 0;
      for (std::size_t p = 0; p <= k2 + k1; ++p)
        if (h[p] <= pp) best = p;
      C[pp] = best;
    }
  } else if (P && bP && cM) {
    // beta is (+ -> -) marked; alpha lives in End(+): convert provenance to
    // the covariant gap map #{t' : A[t'] < t}.
    C.resize(k2 + k1 + 1);
    for (std::size_t i = 0; i < k2; ++i) C[i] = B[i];
    for (std::size_t t = 0; t < k1; ++t) {
      std::size_t cnt = 0;
      for (std::size_t tp = 0; tp < k1p; ++tp)
        if (A[tp] < t) ++cnt;
      C[k2 + t] = k2p + cnt;
    }
    C[k2 + k1] = k2p + k1p;  // marker to marker
  } else {  // P && bM && cM
    C.resize(k2 + k1 + 1);
    for (std::size_t i = 0; i < k2; ++i) C[i] = B[i];
    for (std::size_t j = 0; j <= k1; ++j) C[k2 + j] = k2p + A[j];
  }
  return r;
}

TwoCell whisker_left(const OneCell& g, const TwoCell& alpha) {
  return hcompose(identity_two_cell(g), alpha);
}

TwoCell whisker_right(const TwoCell& beta, const OneCell& f) {
  return hcompose(beta, identity_two_cell(f));
}

TwoCell unit_eta() {
  return TwoCell{OneCell::id(AdjObj::Minus), OneCell{AdjObj::Minus, AdjObj::Minus, 1}, {}};
}

TwoCell counit_eps() {
  return TwoCell{OneCell{AdjObj::Plus, AdjObj::Plus, 1}, OneCell::id(AdjObj::Plus), {}};
}

std::pair<bool, bool> triangle_check() {
  const OneCell L{AdjObj::Minus, AdjObj::Plus, 0};
  const OneCell R{AdjObj::Plus, AdjObj::Minus, 0};
  TwoCell left = vcompose(whisker_right(counit_eps(), L), whisker_left(L, unit_eta()));
  TwoCell right = vcompose(whisker_left(R, counit_eps()), whisker_right(unit_eta(), R));
  return {left == identity_two_cell(L), right == identity_two_cell(R)};
}

std::vector<OneCell> enumerate_one_cells(AdjObj s, AdjObj t, std::size_t max_blocks) {
  std::vector<OneCell> out;
  for (std::size_t k = 0; k <= max_blocks; ++k) out.push_back(OneCell{s, t, k});
  return out;
}

std::vector<TwoCell> enumerate_two_cells(const OneCell& f, const OneCell& g) {
  std::vector<TwoCell> out;
  if (f.src != g.src || f.dst != g.dst) return out;
  TwoCell probe{f, g, {}};
  FinOrd m{stored_src_size(probe)}, n{stored_dst_size(probe)};
  for (auto& u : enumerate_monotone(m, n)) {
    TwoCell c{f, g, u.values};
    if (c.valid()) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace paratrace
