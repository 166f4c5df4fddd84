#include "berkline/cli/json_io.hpp"

#include "berkline/error.hpp"

namespace berkline::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::schema, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string text(const Json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  bad(std::string(what) + " must be a string or an integer");
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  return j;
}

std::size_t index(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) bad(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

}  // namespace

Json to_json(const Rat& v) { return to_string(v); }
Json to_json(const ValExp& v) { return Json{{"rat", to_string(v.rat_part())}, {"sqrt2", to_string(v.sqrt2_part())}}; }
Json to_json(const KernelValue& v) { return v.is_finite() ? to_json(v.value()) : Json(to_string(v)); }

Json to_json(const BerkPoint& x) {
  if (x.is_infinity()) return Json{{"type", "inf"}};
  if (x.is_type_i()) return Json{{"type", "I"}, {"value", to_string(x.center())}};
  return Json{{"type", "disc"}, {"center", to_string(x.canonical_center())}, {"rexp", to_json(x.rexp())}};
}

Json to_json(const DiscreteMeasure& m) {
  Json atoms = Json::array();
  for (const auto& a : m.atoms()) atoms.push_back(Json{{"point", to_json(a.point)}, {"mass", to_json(a.mass)}});
  return Json{{"atoms", atoms}};
}

Json to_json(const MetrizedGraph& g) {
  Json vs = Json::array();
  for (const auto& v : g.vertices()) vs.push_back(to_json(v));
  Json es = Json::array();
  for (const auto& e : g.edges()) es.push_back(Json{{"i", e.i}, {"j", e.j}, {"length", to_json(e.length)}});
  return Json{{"vertices", vs}, {"edges", es}};
}

Json to_json(const DiscUnion& e) {
  Json ds = Json::array();
  for (const auto& d : e.discs()) ds.push_back(Json{{"center", to_string(d.center)}, {"rexp", to_json(d.rexp)}});
  return Json{{"discs", ds}};
}

Json to_json(const Polynomial& f) {
  Json cs = Json::array();
  for (const auto& c : f.coeffs()) cs.push_back(to_string(c));
  return cs;
}

Json to_json(const RationalMap& phi) {
  return Json{{"P", to_json(phi.numerator())}, {"Q", to_json(phi.denominator())}};
}

Rat rat_from_json(const Json& j) { return parse_rat(text(j, "rational")); }
// The object form is canonical; a bare "a/b+c/d*sqrt2" string is accepted as shorthand.
ValExp valexp_from_json(const Json& j) {
  if (j.is_object()) return ValExp(rat_from_json(field(j, "rat")), rat_from_json(field(j, "sqrt2")));
  return parse_valexp(text(j, "exponent"));
}

KernelValue kernel_value_from_json(const Json& j) {
  if (j.is_object()) return KernelValue(valexp_from_json(j));
  const std::string s = text(j, "kernel value");
  if (s == "inf") return KernelValue::plus_infinity();
  if (s == "-inf") return KernelValue::minus_infinity();
  return KernelValue(parse_valexp(s));
}

BerkPoint point_from_json(const Json& j, const PrimeConfig& cfg) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return BerkPoint::infinity(cfg);
    if (s == "gauss") return BerkPoint::gauss(cfg);
    bad("unknown point shorthand \"" + s + "\"");
  }
  const Json& type = field(j, "type");
  if (!type.is_string()) bad("point type must be a string");
  const auto t = type.get<std::string>();
  if (t == "inf") return BerkPoint::infinity(cfg);
  if (t == "I") return BerkPoint::type_i(rat_from_json(field(j, "value")), cfg);
  if (t == "disc") return BerkPoint::disc(rat_from_json(field(j, "center")), valexp_from_json(field(j, "rexp")), cfg);
  bad("unknown point type \"" + t + "\"");
}

std::vector<BerkPoint> points_from_json(const Json& j, const PrimeConfig& cfg) {
  std::vector<BerkPoint> out;
  for (const auto& x : array(j, "points")) out.push_back(point_from_json(x, cfg));
  return out;
}

DiscreteMeasure measure_from_json(const Json& j, const PrimeConfig& cfg) {
  DiscreteMeasure m;
  for (const auto& a : array(field(j, "atoms"), "atoms"))
    m.add(point_from_json(field(a, "point"), cfg), valexp_from_json(field(a, "mass")));
  return m;
}

MetrizedGraph graph_from_json(const Json& j, const PrimeConfig& cfg) {
  std::vector<BerkPoint> vs = points_from_json(field(j, "vertices"), cfg);
  std::vector<MetrizedGraph::Edge> es;
  for (const auto& e : array(field(j, "edges"), "edges"))
    es.push_back(MetrizedGraph::Edge{index(field(e, "i"), "edge end"), index(field(e, "j"), "edge end"),
                                     valexp_from_json(field(e, "length"))});
  try {
    return MetrizedGraph(std::move(vs), std::move(es));
  } catch (const Error& err) {
    if (err.code() == Errc::invalid_argument) bad(err.what());
    throw;
  }
}

DiscUnion disc_union_from_json(const Json& j, const PrimeConfig& cfg) {
  std::vector<Disc> ds;
  for (const auto& d : array(field(j, "discs"), "discs"))
    ds.push_back(Disc{rat_from_json(field(d, "center")), valexp_from_json(field(d, "rexp"))});
  if (ds.empty()) bad("a disc union needs at least one disc");
  return DiscUnion(std::move(ds), cfg);
}

Polynomial polynomial_from_json(const Json& j) {
  std::vector<Rat> cs;
  for (const auto& c : array(j, "coefficients")) cs.push_back(rat_from_json(c));
  return Polynomial(std::move(cs));
}

RationalMap map_from_json(const Json& j, const PrimeConfig& cfg) {
  if (j.is_object() && !j.contains("P") && j.contains("numerator"))
    return RationalMap(polynomial_from_json(field(j, "numerator")), polynomial_from_json(field(j, "denominator")), cfg);
  return RationalMap(polynomial_from_json(field(j, "P")), polynomial_from_json(field(j, "Q")), cfg);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace berkline::cli
