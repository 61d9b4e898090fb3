#include "paratrace/ordsets.hpp"

#include <stdexcept>

namespace paratrace {

bool MonotoneMap::valid() const {
  if (values.size() != src.size) return false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= dst.size) return false;
    if (i > 0 && values[i] < values[i - 1]) return false;
  }
  return true;
}

MonotoneMap MonotoneMap::identity(FinOrd x) {
  MonotoneMap f{x, x, {}};
  f.values.resize(x.size);
  for (std::size_t i = 0; i < x.size; ++i) f.values[i] = i;
  return f;
}

MonotoneMap compose_monotone(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.dst != g.src) throw std::invalid_argument("compose_monotone: src/dst mismatch");
  MonotoneMap h{f.src, g.dst, {}};
  h.values.reserve(f.values.size());
  for (std::size_t v : f.values) h.values.push_back(g.values[v]);
  return h;
}

FinOrd join(FinOrd a, FinOrd b) { return FinOrd{a.size + b.size}; }

MonotoneMap join(const MonotoneMap& a, const MonotoneMap& b) {
  MonotoneMap h{join(a.src, b.src), join(a.dst, b.dst), {}};
  h.values = a.values;
  for (std::size_t v : b.values) h.values.push_back(a.dst.size + v);
  return h;
}

bool MarkedOrd::valid() const {
  if (size == 0) return false;
  if (min_marked && max_marked && size < 2) return false;
  return true;
}

bool MarkedMap::valid() const {
  if (src.min_marked != dst.min_marked || src.max_marked != dst.max_marked) return false;
  if (underlying.src.size != src.size || underlying.dst.size != dst.size) return false;
  if (!underlying.valid()) return false;
  if (src.min_marked && underlying.values.front() != 0) return false;
  if (src.max_marked && underlying.values.back() != dst.size - 1) return false;
  return true;
}

MarkedMap MarkedMap::identity(MarkedOrd x) {
  return MarkedMap{x, x, MonotoneMap::identity(FinOrd{x.size})};
}

MarkedMap compose_marked(const MarkedMap& g, const MarkedMap& f) {
  if (f.dst != g.src) throw std::invalid_argument("compose_marked: src/dst mismatch");
  return MarkedMap{f.src, g.dst, compose_monotone(g.underlying, f.underlying)};
}

MarkedOrd delta_to_interval(FinOrd p) {
  if (p.size == 0) throw std::invalid_argument("delta_to_interval: empty object");
  return MarkedOrd{p.size + 1, true, true};
}

// Hom_Delta([p],[1]) has the p+2 threshold maps x |-> [x >= k], k = 0..p+1,
// ordered pointwise; index j corresponds to threshold k = p+1-j (j = 0 is the
// constant-0 map, j = p+1 the constant-1 map ... in pointwise increasing
// order).  Precomposition with phi: [p]->[q] sends threshold k on [q] to
// threshold #{i : phi(i) < k} on [p].
MarkedMap delta_to_interval_map(const MonotoneMap& phi) {
  if (phi.src.size == 0 || phi.dst.size == 0)
    throw std::invalid_argument("delta_to_interval_map: empty object");
  std::size_t p = phi.src.size - 1, q = phi.dst.size - 1;
  MarkedMap r{delta_to_interval(phi.dst), delta_to_interval(phi.src),
              MonotoneMap{FinOrd{q + 2}, FinOrd{p + 2}, {}}};
  r.underlying.values.resize(q + 2);
  for (std::size_t j = 0; j <= q + 1; ++j) {
    std::size_t k = q + 1 - j;
    std::size_t kk = 0;
    for (std::size_t v : phi.values)
      if (v < k) ++kk;
    r.underlying.values[j] = p + 1 - kk;
  }
  return r;
}

MarkedOrd reverse(MarkedOrd x) { return MarkedOrd{x.size, x.max_marked, x.min_marked}; }

MarkedMap reverse(const MarkedMap& f) {
  MarkedMap r{reverse(f.src), reverse(f.dst),
              MonotoneMap{f.underlying.src, f.underlying.dst, {}}};
  std::size_t m = f.src.size, n = f.dst.size;
  r.underlying.values.resize(m);
  for (std::size_t i = 0; i < m; ++i)
    r.underlying.values[i] = n - 1 - f.underlying.values[m - 1 - i];
  return r;
}

std::vector<MonotoneMap> enumerate_monotone(FinOrd src, FinOrd dst) {
  std::vector<MonotoneMap> out;
  if (src.size == 0) {
    out.push_back(MonotoneMap{src, dst, {}});
    return out;
  }
  if (dst.size == 0) return out;
  std::vector<std::size_t> vals(src.size, 0);
  while (true) {
    out.push_back(MonotoneMap{src, dst, vals});
    // next weakly increasing tuple
    std::size_t i = src.size;
    while (i > 0) {
      --i;
      if (vals[i] + 1 < dst.size) {
        ++vals[i];
        for (std::size_t j = i + 1; j < src.size; ++j) vals[j] = vals[i];
        break;
      }
      if (i == 0) return out;
    }
  }
}

std::vector<MarkedMap> enumerate_marked(MarkedOrd src, MarkedOrd dst) {
  std::vector<MarkedMap> out;
  if (src.min_marked != dst.min_marked || src.max_marked != dst.max_marked) return out;
  for (auto& u : enumerate_monotone(FinOrd{src.size}, FinOrd{dst.size})) {
    MarkedMap f{src, dst, u};
    if (f.valid()) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace paratrace
