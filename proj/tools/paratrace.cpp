#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "paratrace/acceptance.hpp"
#include "paratrace/adj.hpp"
#include "paratrace/circle.hpp"
#include "paratrace/hochschild.hpp"
#include "paratrace/laxfact.hpp"
#include "paratrace/trace.hpp"

using json = nlohmann::json;
using namespace paratrace;

namespace {

struct Options {
  bool as_json = false;
  std::uint64_t seed = 0;
  long max_degree = 3;
  std::size_t weight = 3;
  std::string ring = "Q";
  std::string algebra = "matrix:2";
  std::string dims = "2,2";
  std::string input;
};

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::vector<std::string> failures;

  void check(bool ok, const std::string& witness) {
    if (!ok) failures.push_back(witness);
  }
};

int emit(const Report& r, bool as_json, double seconds) {
  if (as_json) {
    json out{{"command", r.command},
             {"inputs", r.inputs},
             {"results", r.results},
             {"failures", r.failures},
             {"status", r.failures.empty() ? "pass" : "fail"},
             {"seconds", seconds}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << r.command << ": " << (r.failures.empty() ? "pass" : "FAIL") << "\n";
    for (auto it = r.results.begin(); it != r.results.end(); ++it)
      std::cout << "  " << it.key() << " = "
                << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    for (const auto& f : r.failures) std::cout << "  witness: " << f << "\n";
  }
  return r.failures.empty() ? 0 : 1;
}

std::pair<std::size_t, std::size_t> parse_dims(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) {
    std::size_t d = std::stoul(s);
    return {d, d};
  }
  return {std::stoul(s.substr(0, comma)), std::stoul(s.substr(comma + 1))};
}

json load_json(const std::string& path) {
  json j;
  if (path == "-") {
    std::cin >> j;
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    in >> j;
  }
  return j;
}

std::vector<Rat> parse_scalars(const json& arr) {
  std::vector<Rat> out;
  for (const auto& s : arr) out.push_back(parse_rat(s.get<std::string>()));
  return out;
}

AlgebraSC load_algebra(const std::string& spec, ExactRing ring) {
  if (auto builtin = builtin_algebra(spec, ring)) return *builtin;
  json j = load_json(spec);
  AlgebraSC a;
  a.ring = ExactRing::parse(j.at("ring").get<std::string>());
  a.dim = j.at("dim").get<std::size_t>();
  a.unit = parse_scalars(j.at("unit"));
  a.mul = parse_scalars(j.at("mul"));
  if (auto err = validate_algebra(a))
    throw std::invalid_argument("algebra rejected: " + err->message);
  return a;
}

ExactMatrix matrix_from_scalars(ExactRing ring, std::size_t rows, std::size_t cols,
                                const std::vector<Rat>& flat) {
  if (flat.size() != rows * cols)
    throw std::invalid_argument("matrix entry count mismatch");
  ExactMatrix m(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (flat[r * cols + c] != 0) m.set(r, c, flat[r * cols + c]);
  return m;
}

LabeledCircle load_circle(const Options& opt) {
  if (opt.input.empty()) {
    // Default: a single point with the identity label.
    std::size_t d = parse_dims(opt.dims).first;
    ExactRing ring = ExactRing::parse(opt.ring);
    return LabeledCircle{from_para(ParaObj{1}), canonical_duality(d, ring),
                         {ExactMatrix::identity(ring, d)}};
  }
  json j = load_json(opt.input);
  ExactRing ring = ExactRing::parse(j.value("ring", opt.ring));
  std::size_t d = j.at("dim").get<std::size_t>();
  LabeledCircle lc{CircleConfig{}, canonical_duality(d, ring), {}};
  for (const auto& p : j.at("points")) lc.config.points.push_back(parse_rat(p.get<std::string>()));
  if (j.contains("eta"))
    lc.duality.eta = matrix_from_scalars(ring, d * d, 1, parse_scalars(j["eta"]));
  if (j.contains("eps"))
    lc.duality.eps = matrix_from_scalars(ring, 1, d * d, parse_scalars(j["eps"]));
  for (const auto& label : j.at("labels"))
    lc.arc_labels.push_back(matrix_from_scalars(ring, d, d, parse_scalars(label)));
  if (auto err = validate(lc)) throw std::invalid_argument(*err);
  return lc;
}

void run_battery(Report& r, const Options& opt, const std::string& key) {
  for (const CriterionResult& res : run_acceptance(opt.seed, key)) {
    r.results[res.name] = res.detail;
    r.check(res.pass, res.name + ": " + res.detail);
  }
}

json module_json(const std::vector<ModuleDescription>& mods) {
  json out = json::object();
  for (std::size_t n = 0; n < mods.size(); ++n)
    out[std::to_string(n)] = mods[n].to_string();
  return out;
}

std::string para_map_string(const ParaMap& f) {
  std::ostringstream os;
  os << f.src.orbits << "->" << f.dst.orbits << " [";
  for (std::size_t i = 0; i < f.values.size(); ++i)
    os << (i ? "," : "") << f.values[i];
  os << "]";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paracyclic duality, walking-adjunction and trace calculator"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.as_json, "emit a JSON report");
  app.add_option("--seed", opt.seed, "seed for randomized suites");
  app.add_option("--max-degree", opt.max_degree, "top homological degree");
  app.add_option("--weight", opt.weight, "truncation weight");
  app.add_option("--ring", opt.ring, "Q | Z | Fp:<p>");
  app.add_option("--algebra", opt.algebra, "matrix:d | truncpoly:n | group:Cn | JSON file");
  app.add_option("--dims", opt.dims, "dimension or pair m,n");
  app.add_option("--input", opt.input, "JSON input document ('-' for stdin)");

  auto* para = app.add_subcommand("para", "paracyclic category")->fallthrough();
  auto* para_dual = para->add_subcommand("dual", "Galois duals of enumerated maps")->fallthrough();
  auto* para_compose = para->add_subcommand("compose", "composition laws")->fallthrough();
  auto* para_enum = para->add_subcommand("enumerate", "list maps m->n")->fallthrough();
  para->require_subcommand(1);
  auto* circle = app.add_subcommand("circle", "disk-refinements of the circle")->fallthrough();
  auto* circle_rt = circle->add_subcommand("roundtrip", "arc-orbit round trip and monodromy")->fallthrough();
  auto* circle_moves = circle->add_subcommand("moves", "functoriality of elementary moves")->fallthrough();
  circle->require_subcommand(1);
  auto* adj = app.add_subcommand("adj", "walking adjunction")->fallthrough();
  auto* adj_axioms = adj->add_subcommand("axioms", "2-category axioms")->fallthrough();
  auto* adj_tri = adj->add_subcommand("triangles", "triangle identities")->fallthrough();
  adj->require_subcommand(1);
  auto* trace = app.add_subcommand("trace", "labeled-circle evaluation")->fallthrough();
  auto* trace_eval = trace->add_subcommand("eval", "evaluate a labeled circle")->fallthrough();
  auto* trace_inv = trace->add_subcommand("invariance", "invariance scans")->fallthrough();
  trace->require_subcommand(1);
  auto* hh = app.add_subcommand("hh", "Hochschild homology")->fallthrough();
  auto* hh_compute = hh->add_subcommand("compute", "ranks up to --max-degree")->fallthrough();
  hh->require_subcommand(1);
  auto* hcm = app.add_subcommand("hcminus", "truncated negative cyclic homology")->fallthrough();
  auto* lax = app.add_subcommand("laxfact", "labeled refinements over the adjunction")->fallthrough();
  auto* lax_props = lax->add_subcommand("properties", "property suites")->fallthrough();
  lax->require_subcommand(1);
  auto* suite = app.add_subcommand("suite", "full acceptance battery")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Report r;
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (para_enum->parsed() || para_dual->parsed()) {
      auto [m, n] = parse_dims(opt.dims);
      r.command = para_dual->parsed() ? "para dual" : "para enumerate";
      r.inputs = {{"dims", opt.dims}};
      auto maps = enumerate_maps(ParaObj{m}, ParaObj{n}, 1);
      json list = json::array();
      for (const ParaMap& f : maps) {
        if (para_dual->parsed()) {
          ParaMap d = poincare_dual(f);
          ParaMap dd = compose(translation(f.dst, -1),
                               compose(f, translation(f.src, 1)));
          r.check(poincare_dual(d) == dd, "double dual differs from conjugated map");
          list.push_back(para_map_string(f) + " ^v= " + para_map_string(d));
        } else {
          list.push_back(para_map_string(f));
        }
      }
      r.results["count"] = maps.size();
      r.results["maps"] = list;
    } else if (para_compose->parsed()) {
      r.command = "para compose";
      run_battery(r, opt, "para");
    } else if (circle_rt->parsed()) {
      r.command = "circle roundtrip";
      run_battery(r, opt, "circle");
    } else if (circle_moves->parsed()) {
      r.command = "circle moves";
      run_battery(r, opt, "circle");
      CircleConfig c = from_para(ParaObj{3});
      r.results["merge arc 0 of 1/3-grid"] =
          para_map_string(merge_points(c, 0).para_map);
      r.results["full rotation"] =
          para_map_string(act_rotation_morphism(c, Rat(1)).para_map);
    } else if (adj_axioms->parsed()) {
      r.command = "adj axioms";
      run_battery(r, opt, "adj");
    } else if (adj_tri->parsed()) {
      r.command = "adj triangles";
      auto tri = triangle_check();
      r.results["left triangle"] = tri.first;
      r.results["right triangle"] = tri.second;
      r.check(tri.first && tri.second, "a triangle identity failed");
    } else if (trace_eval->parsed()) {
      r.command = "trace eval";
      LabeledCircle lc = load_circle(opt);
      Rat z = evaluate(lc);
      r.inputs = {{"points", lc.config.points.size()}, {"dim", lc.duality.dim}};
      r.results["scalar"] = rat_to_string(z);
      r.check(evaluate_contracted(lc) == z,
              "contracted evaluation disagrees with the tensor pipeline");
      if (!opt.as_json) std::cout << rat_to_string(z) << "\n";
    } else if (trace_inv->parsed()) {
      r.command = "trace invariance";
      run_battery(r, opt, "independence");
      run_battery(r, opt, "cyclic");
    } else if (hh_compute->parsed()) {
      r.command = "hh compute";
      if (opt.max_degree < 0) throw std::invalid_argument("--max-degree must be >= 0");
      AlgebraSC a = load_algebra(opt.algebra, ExactRing::parse(opt.ring));
      r.inputs = {{"algebra", opt.algebra}, {"ring", a.ring.to_string()},
                  {"max_degree", opt.max_degree}};
      r.results = module_json(hh_ranks(a, static_cast<std::size_t>(opt.max_degree)));
    } else if (hcm->parsed()) {
      r.command = "hcminus";
      AlgebraSC a = load_algebra(opt.algebra, ExactRing::parse(opt.ring));
      long lo = -2 * (static_cast<long>(opt.weight) - 1);
      long hi = std::min<long>(opt.max_degree, 1);
      r.inputs = {{"algebra", opt.algebra}, {"ring", a.ring.to_string()},
                  {"weight", opt.weight}, {"degrees", std::to_string(hi) + ".." + std::to_string(lo)}};
      for (const auto& e : hc_minus_truncated(a, opt.weight, lo, hi))
        r.results[std::to_string(e.degree)] =
            std::to_string(e.dimension) + (e.reliable ? "" : " (outside reliable window)");
    } else if (lax_props->parsed()) {
      r.command = "laxfact properties";
      run_battery(r, opt, "laxfact");
    } else if (suite->parsed()) {
      r.command = "suite";
      r.inputs = {{"seed", opt.seed}};
      for (const CriterionResult& res : run_acceptance(opt.seed)) {
        if (opt.as_json)
          r.results[res.name] = (res.pass ? "pass: " : "FAIL: ") + res.detail;
        else
          std::cout << (res.pass ? "PASS" : "FAIL") << "  " << res.name << " — "
                    << res.detail << "\n";
        r.check(res.pass, res.name + ": " + res.detail);
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  auto t1 = std::chrono::steady_clock::now();
  return emit(r, opt.as_json, std::chrono::duration<double>(t1 - t0).count());
}
