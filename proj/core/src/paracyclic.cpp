#include "paratrace/paracyclic.hpp"

#include <stdexcept>

namespace paratrace {

namespace {

long long floordiv(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

long long posmod(long long a, long long b) { return a - b * floordiv(a, b); }

}  // namespace

bool ParaMap::valid() const {
  std::size_t m = src.orbits;
  long long n = static_cast<long long>(dst.orbits);
  if (m == 0 || dst.orbits == 0 || values.size() != m) return false;
  for (std::size_t i = 1; i < m; ++i)
    if (values[i] < values[i - 1]) return false;
  return values[m - 1] <= values[0] + n;
}

ParaMap ParaMap::identity(ParaObj x) {
  ParaMap f{x, x, {}};
  f.values.resize(x.orbits);
  for (std::size_t i = 0; i < x.orbits; ++i) f.values[i] = static_cast<long long>(i);
  return f;
}

long long evaluate(const ParaMap& f, long long x) {
  long long m = static_cast<long long>(f.src.orbits);
  long long n = static_cast<long long>(f.dst.orbits);
  return f.values[static_cast<std::size_t>(posmod(x, m))] + n * floordiv(x, m);
}

ParaMap compose(const ParaMap& g, const ParaMap& f) {
  if (f.dst != g.src) throw std::invalid_argument("paracyclic compose: object mismatch");
  ParaMap h{f.src, g.dst, {}};
  h.values.reserve(f.values.size());
  for (long long v : f.values) h.values.push_back(evaluate(g, v));
  return h;
}

ParaMap z_action(long long r, const ParaMap& f) {
  ParaMap h = f;
  long long n = static_cast<long long>(f.dst.orbits);
  for (auto& v : h.values) v += r * n;
  return h;
}

ParaMap translation(ParaObj n, long long c) {
  ParaMap f = ParaMap::identity(n);
  for (auto& v : f.values) v += c;
  return f;
}

ParaMap poincare_dual(const ParaMap& f) {
  long long m = static_cast<long long>(f.src.orbits);
  long long n = static_cast<long long>(f.dst.orbits);
  ParaMap d{f.dst, f.src, {}};
  d.values.resize(static_cast<std::size_t>(n));
  for (long long y = 0; y < n; ++y) {
    // Bracket the maximum: f(k*m) = v_0 + k*n.
    long long k_hi = floordiv(y - f.values[0], n) + 2;
    long long x = k_hi * m;
    while (evaluate(f, x) > y) --x;
    d.values[static_cast<std::size_t>(y)] = x;
  }
  return d;
}

ParaObj from_simplex(FinOrd p) {
  if (p.size == 0) throw std::invalid_argument("from_simplex: empty object");
  return ParaObj{p.size};
}

ParaMap from_simplex(const MonotoneMap& phi) {
  ParaMap f{from_simplex(phi.src), from_simplex(phi.dst), {}};
  f.values.reserve(phi.values.size());
  for (std::size_t v : phi.values) f.values.push_back(static_cast<long long>(v));
  return f;
}

ParaFactorization surj_inj_factorize(const ParaMap& f) {
  long long n = static_cast<long long>(f.dst.orbits);
  long long v0 = f.values[0];
  // Distinct values within [v_0, v_0 + n); a value v_0 + n is the shift of v_0.
  std::vector<long long> w;
  for (long long v : f.values)
    if (v < v0 + n && (w.empty() || v != w.back())) w.push_back(v);
  ParaObj mid{w.size()};
  ParaFactorization r{ParaMap{f.src, mid, {}}, ParaMap{mid, f.dst, w}};
  for (long long v : f.values) {
    if (v == v0 + n) {
      r.surj.values.push_back(static_cast<long long>(w.size()));
      continue;
    }
    std::size_t j = 0;
    while (w[j] != v) ++j;
    r.surj.values.push_back(static_cast<long long>(j));
  }
  return r;
}

std::vector<ParaMap> enumerate_maps(ParaObj m, ParaObj n, long long offset_bound) {
  std::vector<ParaMap> out;
  long long nn = static_cast<long long>(n.orbits);
  std::vector<long long> vals(m.orbits);
  for (long long v0 = -offset_bound; v0 <= offset_bound; ++v0) {
    vals[0] = v0;
    // Remaining values: weakly increasing, capped at v0 + n.
    std::size_t i = 1;
    for (std::size_t j = 1; j < m.orbits; ++j) vals[j] = v0;
    while (true) {
      out.push_back(ParaMap{m, n, vals});
      if (m.orbits == 1) break;
      i = m.orbits;
      bool done = false;
      while (true) {
        --i;
        if (i == 0) { done = true; break; }
        if (vals[i] + 1 <= v0 + nn) {
          ++vals[i];
          for (std::size_t j = i + 1; j < m.orbits; ++j) vals[j] = vals[i];
          break;
        }
      }
      if (done) break;
    }
  }
  return out;
}

long long window_start(const ParaMap& f) {
  long long m = static_cast<long long>(f.src.orbits);
  long long n = static_cast<long long>(f.dst.orbits);
  long long best = 0;
  bool first = true;
  for (long long i = 0; i < m; ++i) {
    long long v = f.values[static_cast<std::size_t>(i)];
    // smallest k with v + k*n >= 0
    long long k = -floordiv(v, n);
    long long x = i + k * m;
    if (evaluate(f, x) < 0) x += m;
    while (evaluate(f, x - m) >= 0) x -= m;  // defensive; at most one step
    if (first || x < best) { best = x; first = false; }
  }
  return best;
}

std::vector<std::vector<long long>> fibers(const ParaMap& f) {
  long long m = static_cast<long long>(f.src.orbits);
  std::vector<std::vector<long long>> out(f.dst.orbits);
  long long x0 = window_start(f);
  for (long long x = x0; x < x0 + m; ++x)
    out[static_cast<std::size_t>(evaluate(f, x))].push_back(x);
  return out;
}

}  // namespace paratrace
