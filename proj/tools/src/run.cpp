#include "berkline/cli/run.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "berkline/capacity.hpp"
#include "berkline/cli/dot.hpp"
#include "berkline/cli/json_io.hpp"
#include "berkline/dynamics.hpp"
#include "berkline/error.hpp"
#include "berkline/harmonic.hpp"
#include "berkline/kernels.hpp"

namespace berkline::cli {

namespace {

struct Options {
  unsigned long p = 0;
  std::string zeta = "inf";
  bool certificate = false;
  int decimal = -1;
  std::uint64_t seed = 1;

  std::string first;
  std::string second;
  std::string kind = "rho";
  std::string at;
  std::string anchor;
  std::string values;
  std::string measure;
  std::string set;
  std::string map;
  std::string graph;
  std::string mode = "restricted";
  std::vector<std::string> mobius;
  int zp_level = -1;
  unsigned n = 1;
  unsigned refine = 1;
  unsigned samples = 0;
};

// An argument is inline JSON, one of the point shorthands, or a file path.
Json load(const std::string& arg) {
  if (arg == "inf" || arg == "gauss") return arg;
  std::string body;
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[' || arg.front() == '"')) {
    body = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw Error(Errc::schema, "cannot read '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::schema, std::string("malformed JSON in '") + arg + "': " + e.what());
  }
}

const std::string& input(const Options& o, std::size_t i, const char* what) {
  const std::string& s = i == 0 ? o.first : o.second;
  if (s.empty()) throw Error(Errc::schema, std::string("missing input: ") + what);
  return s;
}

class Writer {
 public:
  explicit Writer(int decimal) : decimal_(decimal) {}

  void put(Json& obj, const std::string& key, const ValExp& v) const {
    obj[key] = to_json(v);
    if (decimal_ >= 0) obj[key + "_approx"] = approx(v.to_double());
  }
  void put(Json& obj, const std::string& key, const KernelValue& v) const {
    if (v.is_finite()) {
      put(obj, key, v.value());
    } else {
      obj[key] = to_json(v);
    }
  }
  // p^(-v), the multiplicative quantity behind an exponent; display only.
  void put_power(Json& obj, const std::string& key, unsigned long p, const ValExp& v) const {
    if (decimal_ >= 0) obj[key + "_approx"] = approx(std::pow(static_cast<double>(p), -v.to_double()));
  }

 private:
  std::string approx(double x) const {
    std::vector<char> buf(64 + static_cast<std::size_t>(decimal_));
    std::snprintf(buf.data(), buf.size(), "~%.*f", decimal_, x);
    return buf.data();
  }
  int decimal_;
};

BerkPoint zeta_of(const Options& o, const PrimeConfig& cfg) { return point_from_json(load(o.zeta), cfg); }

// The set comes from --zp-level, --E/--set, or the first positional.
DiscUnion set_of(const Options& o, const PrimeConfig& cfg) {
  if (!o.set.empty() && !o.first.empty()) throw Error(Errc::schema, "give the disc set once");
  const std::string& given = o.set.empty() ? o.first : o.set;
  if (o.zp_level >= 0 && !given.empty()) throw Error(Errc::schema, "give either --zp-level or a disc set");
  if (o.zp_level >= 0) return zp_level_set(cfg, static_cast<unsigned>(o.zp_level));
  if (given.empty()) throw Error(Errc::schema, "a disc set is required (--zp-level or --E)");
  return disc_union_from_json(load(given), cfg);
}

std::string cmd_point(const Options& o, const PrimeConfig& cfg, const Writer&) {
  const BerkPoint x = point_from_json(load(input(o, 0, "point")), cfg);
  static const char* names[] = {"I", "II", "III"};
  Json out{{"point", to_json(x)}, {"type", names[static_cast<int>(classify(x))]}};
  if (!o.mobius.empty()) {
    if (o.mobius.size() != 4) throw Error(Errc::schema, "--mobius takes four rationals a b c d");
    const Mobius h{parse_rat(o.mobius[0]), parse_rat(o.mobius[1]), parse_rat(o.mobius[2]), parse_rat(o.mobius[3])};
    out["image"] = to_json(mobius_apply(h, x));
  }
  return dump(out);
}

std::string cmd_kernel(const Options& o, const PrimeConfig& cfg, const Writer& w) {
  const BerkPoint x = point_from_json(load(input(o, 0, "first point")), cfg);
  const BerkPoint zeta = zeta_of(o, cfg);
  KernelValue v;
  if (o.kind == "diam") {
    v = diam(x, zeta);
  } else {
    const BerkPoint y = point_from_json(load(input(o, 1, "second point")), cfg);
    if (o.kind == "rho") {
      v = path_distance(x, y);
    } else if (o.kind == "j") {
      v = j_kernel(x, y, zeta);
    } else if (o.kind == "hsia") {
      v = hsia_log(x, y, zeta);
    } else if (o.kind == "spherical") {
      v = spherical_log(x, y);
    } else {
      throw Error(Errc::schema, "unknown kernel kind '" + o.kind + "'");
    }
  }
  Json out{{"kind", o.kind}};
  w.put(out, "value", v);
  return dump(out);
}

std::string cmd_graph_span(const Options& o, const PrimeConfig& cfg, const Writer&) {
  const auto pts = points_from_json(load(input(o, 0, "points")), cfg);
  std::optional<BerkPoint> anchor;
  if (!o.anchor.empty()) anchor = point_from_json(load(o.anchor), cfg);
  return dump(to_json(span(pts, anchor)));
}

std::string cmd_graph_laplacian(const Options& o, const PrimeConfig& cfg, const Writer&) {
  const MetrizedGraph g = graph_from_json(load(input(o, 0, "graph")), cfg);
  if (o.values.empty()) throw Error(Errc::schema, "--values is required");
  const Json vs = load(o.values);
  if (!vs.is_array() || vs.size() != g.vertices().size())
    throw Error(Errc::schema, "--values must list one value per vertex");
  std::vector<ValExp> values;
  for (const auto& v : vs) values.push_back(valexp_from_json(v));
  return dump(to_json(laplacian(CPAFunction{&g, values})));
}

// Either `boundary.json [values.json]` or one object {"boundary": [...], "values": [...]}.
std::string cmd_poisson(const Options& o, const PrimeConfig& cfg, const Writer& w) {
  Json problem = load(input(o, 0, "boundary"));
  if (problem.is_array()) {
    problem = Json{{"boundary", problem}};
    if (!o.second.empty()) problem["values"] = load(o.second);
  } else if (!o.second.empty()) {
    throw Error(Errc::schema, "values go inside the problem object");
  }
  if (!problem.is_object() || !problem.contains("boundary")) throw Error(Errc::schema, "missing field \"boundary\"");
  const auto boundary = points_from_json(problem["boundary"], cfg);
  const BerkPoint at = o.at.empty() ? BerkPoint::gauss(cfg) : point_from_json(load(o.at), cfg);
  Json out{{"at", to_json(at)}};
  Json hm = Json::array();
  for (const auto& h : harmonic_measures(boundary, at)) hm.push_back(to_json(h));
  out["harmonic_measures"] = hm;
  if (problem.contains("values")) {
    const Json& vs = problem["values"];
    if (!vs.is_array() || vs.size() != boundary.size())
      throw Error(Errc::schema, "\"values\" must list one value per boundary point");
    std::vector<ValExp> values;
    for (const auto& v : vs) values.push_back(valexp_from_json(v));
    const HarmonicSolution sol = solve_dirichlet(boundary, values, at);
    w.put(out, "value", evaluate_harmonic(sol, at));
  }
  return dump(out);
}

std::string cmd_green(const Options& o, const PrimeConfig& cfg, const Writer& w) {
  const DiscUnion e = set_of(o, cfg);
  if (o.at.empty()) throw Error(Errc::schema, "--at is required");
  Json out;
  w.put(out, "value", green_function(e, zeta_of(o, cfg), point_from_json(load(o.at), cfg)));
  return dump(out);
}

std::string cmd_capacity(const Options& o, const PrimeConfig& cfg, const Writer& w) {
  const EquilibriumResult r = equilibrium(set_of(o, cfg), zeta_of(o, cfg));
  Json out;
  w.put(out, "robin", r.robin);
  w.put(out, "capacity_log", r.capacity_log());
  w.put_power(out, "capacity", cfg.p(), r.robin);
  return dump(out);
}

// Random type II points in and around E, for the Frostman inequality.
std::vector<BerkPoint> frostman_samples(const DiscUnion& e, unsigned count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BerkPoint> out;
  const auto& ds = e.discs();
  const long p = static_cast<long>(e.prime().p());
  std::uniform_int_distribution<std::size_t> pick(0, ds.size() - 1);
  std::uniform_int_distribution<long> digit(0, p - 1);
  std::uniform_int_distribution<long> depth(-2, 3);
  for (unsigned k = 0; k < count; ++k) {
    const Disc& d = ds[pick(rng)];
    const long t = ceil(d.rexp) + depth(rng);
    const Rat center = d.center + Rat(digit(rng)) * prime_power(e.prime().p(), std::max(t - 1, ceil(d.rexp)));
    out.push_back(BerkPoint::disc(center, ValExp(t), e.prime()));
  }
  return out;
}

std::string cmd_equilibrium(const Options& o, const PrimeConfig& cfg, const Writer& w) {
  const DiscUnion e = set_of(o, cfg);
  const BerkPoint zeta = zeta_of(o, cfg);
  const EquilibriumResult r = equilibrium(e, zeta);
  Json out{{"measure", to_json(r.measure)}};
  w.put(out, "robin", r.robin);
  if (o.certificate) {
    const FrostmanReport rep = frostman_check(e, r, zeta, frostman_samples(e, o.samples, o.seed));
    const EquilibriumResult dense = equilibrium_active_set(e, zeta);
    Json cert{{"frostman", rep.passed}, {"points_checked", rep.points_checked},
              {"active_set_agrees", dense.measure == r.measure && dense.robin == r.robin}};
    if (!rep.passed) {
      cert["reason"] = rep.reason;
      if (rep.witness) cert["witness"] = to_json(*rep.witness);
    }
    out["certificate"] = cert;
  }
  return dump(out);
}

std::string cmd_diameter(const Options& o, const PrimeConfig& cfg, const Writer& w) {
  const DiscUnion e = set_of(o, cfg);
  const BerkPoint zeta = zeta_of(o, cfg);
  Json out{{"n", o.n}, {"refine", o.refine}};
  w.put(out, "value", transfinite_diameter(e, o.n, refined_candidates(e, o.refine), zeta));
  w.put(out, "robin", equilibrium(e, zeta).robin);
  return dump(out);
}

std::string cmd_chebyshev(const Options& o, const PrimeConfig& cfg, const Writer& w) {
  const DiscUnion e = set_of(o, cfg);
  const BerkPoint zeta = zeta_of(o, cfg);
  ChebyshevMode mode = ChebyshevMode::restricted;
  if (o.mode == "unrestricted") {
    mode = ChebyshevMode::unrestricted;
  } else if (o.mode != "restricted") {
    throw Error(Errc::schema, "unknown mode '" + o.mode + "'");
  }
  Json out{{"n", o.n}, {"refine", o.refine}, {"mode", o.mode}};
  w.put(out, "value", chebyshev(e, o.n, mode, refined_candidates(e, o.refine), zeta));
  w.put(out, "robin", equilibrium(e, zeta).robin);
  return dump(out);
}

// Flag or positional, but not both.
const std::string& either(const std::string& flag, const std::string& positional, const char* what) {
  if (!flag.empty() && !positional.empty()) throw Error(Errc::schema, std::string("give the ") + what + " once");
  if (flag.empty() && positional.empty()) throw Error(Errc::schema, std::string("missing input: ") + what);
  return flag.empty() ? positional : flag;
}

std::string cmd_dynamics(const std::string& action, const Options& o, const PrimeConfig& cfg, const Writer& w) {
  const RationalMap phi = map_from_json(load(either(o.map, o.first, "map")), cfg);
  if (action == "reduction") {
    return dump(Json{{"good_reduction", good_reduction(phi)}, {"c1", to_json(phi.c1())}});
  }
  if (action == "lyubich") {
    const MetrizedGraph g = graph_from_json(load(either(o.graph, o.second, "graph")), cfg);
    return dump(to_json(lyubich_on_graph(phi, g, o.n)));
  }
  if (!o.graph.empty()) throw Error(Errc::schema, "--graph only applies to lyubich");
  const BerkPoint x = point_from_json(load(either(o.at, o.second, "point")), cfg);
  if (action == "apply") return dump(Json{{"image", to_json(apply(phi, x))}});
  if (action == "mult") return dump(Json{{"multiplicity", multiplicity(phi, x)}});
  Json out{{"n", o.n}};
  w.put(out, "height", call_silverman(phi, x, o.n));
  return dump(out);
}

int exit_status(Errc code) {
  switch (code) {
    case Errc::schema:
    case Errc::invalid_argument:
      return kSchema;
    case Errc::verification_failed:
      return kInternal;
    default:
      return kDomain;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact potential theory and dynamics on the Berkovich projective line", "berkline"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--p", o.p, "Residue characteristic")->required();
  app.add_option("--zeta", o.zeta, "Pole: inf, gauss, a point JSON file or inline JSON");
  app.add_flag("--emit-certificate", o.certificate, "Attach verification data");
  app.add_option("--decimal", o.decimal, "Also render N decimal digits (approximate, display only)");
  app.add_option("--seed", o.seed, "Seed for sampled checks");

  auto* point = app.add_subcommand("point", "Classify a point, optionally moving it by a Mobius map");
  point->add_option("point", o.first)->required();
  point->add_option("--mobius", o.mobius)->expected(4);

  auto* kernel = app.add_subcommand("kernel", "Evaluate a kernel in -log_p form");
  kernel->add_option("--kind", o.kind)->check(CLI::IsMember({"rho", "j", "hsia", "spherical", "diam"}));
  kernel->add_option("x", o.first)->required();
  kernel->add_option("y", o.second);

  auto* graph = app.add_subcommand("graph", "Metrized graphs");
  graph->require_subcommand(1);
  auto* graph_span = graph->add_subcommand("span", "Convex hull of points");
  graph_span->add_option("points", o.first)->required();
  graph_span->add_option("--anchor", o.anchor);
  auto* graph_lap = graph->add_subcommand("laplacian", "Laplacian of a piecewise-affine function");
  graph_lap->add_option("graph", o.first)->required();
  graph_lap->add_option("--values", o.values);

  auto* poisson = app.add_subcommand("poisson", "Dirichlet problem and harmonic measures");
  poisson->add_option("boundary", o.first, "Boundary points, or a problem object")->required();
  poisson->add_option("values", o.second, "Boundary values");
  poisson->add_option("--at", o.at);

  auto add_set = [&](CLI::App* sub) {
    sub->add_option("--zp-level", o.zp_level, "Level-n disc cover of Z_p");
    sub->add_option("--E,--set", o.set, "Disc union JSON");
    sub->add_option("discs", o.first, "Disc union JSON");
  };
  auto* green = app.add_subcommand("green", "Green's function of a disc union");
  add_set(green);
  green->add_option("--at", o.at);
  auto* capacity = app.add_subcommand("capacity", "Robin constant and capacity");
  add_set(capacity);
  auto* equil = app.add_subcommand("equilibrium", "Equilibrium measure");
  add_set(equil);
  equil->add_option("--samples", o.samples, "Extra random points for the Frostman check");
  auto* diameter = app.add_subcommand("diameter", "n-th transfinite diameter over refined candidates");
  add_set(diameter);
  diameter->add_option("--n", o.n)->check(CLI::Range(2, 8));
  diameter->add_option("--refine", o.refine);
  auto* cheb = app.add_subcommand("chebyshev", "n-th Chebyshev constant over refined candidates");
  add_set(cheb);
  cheb->add_option("--n", o.n)->check(CLI::Range(1, 8));
  cheb->add_option("--refine", o.refine);
  cheb->add_option("--mode", o.mode)->check(CLI::IsMember({"restricted", "unrestricted"}));

  auto* dyn = app.add_subcommand("dynamics", "Rational maps");
  dyn->require_subcommand(1);
  std::string action;
  for (const char* name : {"apply", "mult", "height", "lyubich", "reduction"}) {
    auto* sub = dyn->add_subcommand(name);
    sub->add_option("map-json", o.first, "Map JSON (or use --map)");
    sub->add_option("target", o.second, "Point, or graph for lyubich");
    sub->add_option("--map", o.map);
    sub->add_option("--at", o.at);
    sub->add_option("--graph", o.graph);
    sub->add_option("--n", o.n);
    sub->callback([&action, name] { action = name; });
  }

  auto* exp = app.add_subcommand("export", "Graphviz DOT of a graph");
  exp->add_option("graph", o.first)->required();
  exp->add_option("--measure", o.measure);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kSchema;
  }

  try {
    const PrimeConfig cfg(o.p);
    const Writer w(o.decimal);
    std::string text;
    if (*point) {
      text = cmd_point(o, cfg, w);
    } else if (*kernel) {
      text = cmd_kernel(o, cfg, w);
    } else if (*graph_span) {
      text = cmd_graph_span(o, cfg, w);
    } else if (*graph_lap) {
      text = cmd_graph_laplacian(o, cfg, w);
    } else if (*poisson) {
      text = cmd_poisson(o, cfg, w);
    } else if (*green) {
      text = cmd_green(o, cfg, w);
    } else if (*capacity) {
      text = cmd_capacity(o, cfg, w);
    } else if (*equil) {
      text = cmd_equilibrium(o, cfg, w);
    } else if (*diameter) {
      text = cmd_diameter(o, cfg, w);
    } else if (*cheb) {
      text = cmd_chebyshev(o, cfg, w);
    } else if (*dyn) {
      text = cmd_dynamics(action, o, cfg, w);
    } else {
      const MetrizedGraph g = graph_from_json(load(input(o, 0, "graph")), cfg);
      std::optional<DiscreteMeasure> m;
      if (!o.measure.empty()) m = measure_from_json(load(o.measure), cfg);
      text = export_dot(g, m);
    }
    out << text;
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_status(e.code());
  } catch (const Json::exception& e) {
    err << "error: SCHEMA: " << e.what() << "\n";
    return kSchema;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace berkline::cli
