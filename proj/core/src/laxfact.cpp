#include "paratrace/laxfact.hpp"

#include <algorithm>
#include <stdexcept>

namespace paratrace {

namespace {

std::size_t posmod(long long x, std::size_t m) {
  long long mm = static_cast<long long>(m);
  long long r = x % mm;
  return static_cast<std::size_t>(r < 0 ? r + mm : r);
}

AdjObj flip(AdjObj x) { return x == AdjObj::Minus ? AdjObj::Plus : AdjObj::Minus; }

}  // namespace

std::optional<std::string> validate(const LaxObject& o) {
  if (!o.config.valid()) return "invalid circle configuration";
  std::size_t r = o.config.points.size();
  if (o.point_labels.size() != r) return "point label count mismatch";
  if (o.arc_labels.size() != r) return "arc label count mismatch";
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t a = arc_of_lift(o.config, static_cast<long long>(i));
    if (o.arc_labels[i].src != o.point_labels[a] ||
        o.arc_labels[i].dst != o.point_labels[(a + 1) % r])
      return "arc label endpoints do not match the point labels";
  }
  return std::nullopt;
}

OneCell fiber_composite(const LaxObject& o, const std::vector<long long>& fiber,
                        AdjObj fallback) {
  if (fiber.empty()) return OneCell::id(fallback);
  std::size_t m = o.arc_labels.size();
  OneCell acc = o.arc_labels[posmod(fiber[0], m)];
  for (std::size_t i = 1; i < fiber.size(); ++i)
    acc = hcompose(o.arc_labels[posmod(fiber[i], m)], acc);
  return acc;
}

std::optional<std::string> validate(const LaxMorphism& m) {
  if (auto err = validate(m.src)) return err;
  if (auto err = validate(m.dst)) return err;
  if (m.move.src != m.src.config || m.move.dst != m.dst.config)
    return "move endpoints do not match the labeled objects";
  if (!m.move.para_map.valid() || m.move.para_map.src != to_para(m.src.config) ||
      m.move.para_map.dst != to_para(m.dst.config))
    return "move carries an inconsistent arc map";
  std::size_t n = m.dst.arc_labels.size();
  if (m.gamma.size() != n) return "comparison cell count mismatch";
  auto fb = fibers(m.move.para_map);
  for (std::size_t j = 0; j < n; ++j) {
    const OneCell& target = m.dst.arc_labels[j];
    if (fb[j].empty() && target.src != target.dst)
      return "inserted arc must carry an endo 1-cell";
    OneCell comp = fiber_composite(m.src, fb[j], target.src);
    if (!m.gamma[j].valid()) return "invalid comparison cell";
    if (m.gamma[j].src != comp) return "comparison cell source mismatch";
    if (m.gamma[j].dst != target) return "comparison cell target mismatch";
  }
  return std::nullopt;
}

LaxMorphism identity_lax(const LaxObject& o) {
  LaxMorphism m{o, o, identity_morphism(o.config), {}};
  for (const auto& w : o.arc_labels) m.gamma.push_back(identity_two_cell(w));
  return m;
}

LaxMorphism compose_lax(const LaxMorphism& m2, const LaxMorphism& m1) {
  if (m1.dst != m2.src) throw std::invalid_argument("compose_lax: object mismatch");
  if (auto err = validate(m1)) throw std::invalid_argument("compose_lax: " + *err);
  if (auto err = validate(m2)) throw std::invalid_argument("compose_lax: " + *err);
  LaxMorphism out{m1.src, m2.dst, compose_morphism(m2.move, m1.move), {}};
  std::size_t n1 = m1.dst.arc_labels.size();
  auto fb2 = fibers(m2.move.para_map);
  for (std::size_t j = 0; j < fb2.size(); ++j) {
    TwoCell inner;
    if (fb2[j].empty()) {
      inner = identity_two_cell(OneCell::id(m2.gamma[j].src.src));
    } else {
      inner = m1.gamma[posmod(fb2[j][0], n1)];
      for (std::size_t i = 1; i < fb2[j].size(); ++i)
        inner = hcompose(m1.gamma[posmod(fb2[j][i], n1)], inner);
    }
    out.gamma.push_back(vcompose(m2.gamma[j], inner));
  }
  return out;
}

Membership classify(const LaxObject& o) {
  bool plus = false, minus = false;
  for (AdjObj s : o.point_labels) (s == AdjObj::Plus ? plus : minus) = true;
  bool all_id = std::all_of(o.arc_labels.begin(), o.arc_labels.end(),
                            [](const OneCell& w) { return w.blocks == 0; });
  Membership m;
  m.in_plus_monad = !minus;
  m.in_minus_monad = !plus;
  m.in_unit_image = !plus && all_id;
  m.in_counit_image = !minus && all_id;
  m.in_A0 = plus && minus;
  m.in_Aplus = plus;
  m.in_Aminus = minus;
  return m;
}

bool left_fibration_check(const LaxMorphism& m) {
  Membership s = classify(m.src), d = classify(m.dst);
  return (!s.in_plus_monad || d.in_plus_monad) &&
         (!s.in_minus_monad || d.in_minus_monad) &&
         (!s.in_counit_image || d.in_counit_image) &&
         (!d.in_unit_image || s.in_unit_image);
}

bool is_cocartesian(const LaxMorphism& m) {
  return std::all_of(m.gamma.begin(), m.gamma.end(),
                     [](const TwoCell& g) { return g.is_identity(); });
}

namespace {

Reflection reflect(const LaxObject& o, AdjObj keep) {
  if (auto err = validate(o)) throw std::invalid_argument("reflect: " + *err);
  if (std::none_of(o.point_labels.begin(), o.point_labels.end(),
                   [&](AdjObj s) { return s == keep; }))
    throw std::invalid_argument("reflect: no point carries the kept sign");
  CircleConfig config = o.config;
  std::vector<AdjObj> labels = o.point_labels;
  CircleMorphism move = identity_morphism(o.config);
  for (;;) {
    auto it = std::find_if(labels.begin(), labels.end(),
                           [&](AdjObj s) { return s != keep; });
    if (it == labels.end()) break;
    std::size_t del = static_cast<std::size_t>(it - labels.begin());
    std::size_t r = labels.size();
    CircleMorphism step = merge_points(config, (del + r - 1) % r);
    move = compose_morphism(step, move);
    config = step.dst;
    labels.erase(it);
  }
  LaxObject refl{config, labels, {}};
  for (const auto& fiber : fibers(move.para_map))
    refl.arc_labels.push_back(fiber_composite(o, fiber, keep));
  LaxMorphism unit{o, refl, move, {}};
  for (const auto& w : refl.arc_labels) unit.gamma.push_back(identity_two_cell(w));
  return Reflection{refl, unit};
}

}  // namespace

Reflection plus_reflection(const LaxObject& o) { return reflect(o, AdjObj::Plus); }
Reflection minus_reflection(const LaxObject& o) { return reflect(o, AdjObj::Minus); }

LaxObject swap_labels(const LaxObject& o) {
  LaxObject out = o;
  for (AdjObj& s : out.point_labels) s = flip(s);
  for (OneCell& w : out.arc_labels) {
    w.src = flip(w.src);
    w.dst = flip(w.dst);
  }
  return out;
}

LaxObject random_lax_object(std::mt19937_64& rng, std::size_t max_points,
                            std::size_t max_blocks) {
  std::size_t r = 1 + static_cast<std::size_t>(rng() % max_points);
  std::vector<std::size_t> grid(24);
  for (std::size_t i = 0; i < 24; ++i) grid[i] = i;
  for (std::size_t i = 0; i < r; ++i)
    std::swap(grid[i], grid[i + static_cast<std::size_t>(rng() % (24 - i))]);
  grid.resize(r);
  std::sort(grid.begin(), grid.end());
  LaxObject o;
  for (std::size_t g : grid) {
    Rat p(static_cast<long>(g), 24);
    p.canonicalize();
    o.config.points.push_back(p);
  }
  for (std::size_t i = 0; i < r; ++i)
    o.point_labels.push_back(rng() % 2 ? AdjObj::Plus : AdjObj::Minus);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t a = arc_of_lift(o.config, static_cast<long long>(i));
    o.arc_labels.push_back(OneCell{o.point_labels[a], o.point_labels[(a + 1) % r],
                                   static_cast<std::size_t>(rng() % (max_blocks + 1))});
  }
  return o;
}

LaxMorphism random_lax_morphism(std::mt19937_64& rng, const LaxObject& src,
                                std::size_t max_blocks) {
  if (auto err = validate(src)) throw std::invalid_argument("random_lax_morphism: " + *err);
  std::size_t r = src.config.points.size();
  CircleMorphism move = identity_morphism(src.config);
  switch (rng() % 4) {
    case 0:
      break;  // pure comparison cells over the identity move
    case 1:
      if (r >= 2) move = merge_points(src.config, static_cast<std::size_t>(rng() % r));
      break;
    case 2: {
      // Insert at a fresh angle (halve the grid until the angle is free).
      for (long den = 48;; den *= 2) {
        Rat angle(2 * static_cast<long>(rng() % 24) + 1, den);
        if (std::find(src.config.points.begin(), src.config.points.end(), angle) ==
            src.config.points.end()) {
          move = insert_point(src.config, angle);
          break;
        }
      }
      break;
    }
    default:
      move = act_rotation_morphism(src.config, Rat(static_cast<long>(rng() % 12), 12));
      break;
  }
  auto fb = fibers(move.para_map);
  std::size_t n = fb.size();
  // Composite of the transported labels per target arc; inserted arcs sit at
  // the end sign of the previous (always nonempty) arc.
  std::vector<OneCell> comp(n);
  std::vector<bool> done(n, false);
  for (std::size_t j = 0; j < n; ++j)
    if (!fb[j].empty()) {
      comp[j] = fiber_composite(src, fb[j], AdjObj::Minus);
      done[j] = true;
    }
  for (std::size_t j = 0; j < n; ++j)
    if (!done[j]) comp[j] = OneCell::id(comp[(j + n - 1) % n].dst);
  // Pick a target label and comparison cell per arc.
  LaxMorphism out{src, LaxObject{move.dst, std::vector<AdjObj>(n), {}}, move, {}};
  out.dst.arc_labels.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    TwoCell cell = identity_two_cell(comp[j]);
    if (rng() % 2) {
      OneCell target{comp[j].src, comp[j].dst,
                     static_cast<std::size_t>(rng() % (max_blocks + 1))};
      auto cells = enumerate_two_cells(comp[j], target);
      if (!cells.empty()) cell = cells[static_cast<std::size_t>(rng() % cells.size())];
    }
    out.gamma.push_back(cell);
    out.dst.arc_labels[j] = cell.dst;
    std::size_t a = arc_of_lift(move.dst, static_cast<long long>(j));
    out.dst.point_labels[a] = cell.dst.src;
  }
  if (auto err = validate(out))
    throw std::logic_error("random_lax_morphism generated an invalid morphism: " + *err);
  return out;
}

std::vector<LaxMorphism> factor_through(const LaxMorphism& m, const Reflection& refl) {
  const ParaMap& f = m.move.para_map;
  const ParaMap& u = refl.unit.move.para_map;
  // The unit move is surjective on arcs, so the factored arc map is forced.
  ParaMap g{u.dst, f.dst, std::vector<long long>(u.dst.orbits)};
  auto ufb = fibers(u);
  for (std::size_t y = 0; y < ufb.size(); ++y) {
    if (ufb[y].empty()) return {};
    g.values[y] = evaluate(f, ufb[y][0]);
  }
  if (!g.valid() || compose(g, u) != f) return {};
  CircleMorphism move{refl.object.config, m.dst.config, g};
  std::size_t n = m.dst.arc_labels.size();
  std::vector<std::vector<TwoCell>> cands(n);
  auto gfb = fibers(g);
  for (std::size_t j = 0; j < n; ++j) {
    OneCell comp = fiber_composite(refl.object, gfb[j], m.dst.arc_labels[j].src);
    cands[j] = enumerate_two_cells(comp, m.dst.arc_labels[j]);
    if (cands[j].empty()) return {};
  }
  std::vector<LaxMorphism> found;
  std::vector<std::size_t> pick(n, 0);
  for (;;) {
    LaxMorphism h{refl.object, m.dst, move, {}};
    for (std::size_t j = 0; j < n; ++j) h.gamma.push_back(cands[j][pick[j]]);
    if (!validate(h) && compose_lax(h, refl.unit) == m) found.push_back(h);
    std::size_t j = 0;
    while (j < n && ++pick[j] == cands[j].size()) pick[j++] = 0;
    if (j == n) break;
  }
  return found;
}

}  // namespace paratrace
