#include <algorithm>
#include <sstream>

#include "berkline/capacity.hpp"
#include "berkline/cli/dot.hpp"
#include "berkline/cli/json_io.hpp"
#include "berkline/cli/run.hpp"
#include "berkline/dynamics.hpp"
#include "berkline/error.hpp"
#include "berkline/harmonic.hpp"
#include "berkline/kernels.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "printers.hpp"

using namespace berkline;
using namespace berkline::cli;
using berkline::testing::Gen;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string inline_json(const Json& j) { return j.dump(); }

RationalMap random_map(Gen& g, const PrimeConfig& cfg) {
  for (;;) {
    Polynomial p = g.polynomial(cfg.p(), g.integer(0, 3));
    Polynomial q = g.polynomial(cfg.p(), g.integer(0, 3));
    if (std::max(p.degree(), q.degree()) < 1 || gcd(p, q).degree() > 0) continue;
    return RationalMap(std::move(p), std::move(q), cfg);
  }
}

const Json kSquare{{"P", {"0", "0", "1"}}, {"Q", {"1"}}};

Json exponent(const char* rat) { return Json{{"rat", rat}, {"sqrt2", "0"}}; }

}  // namespace

TEST_CASE("schema round trips") {
  Gen g(601);
  for (int iter = 0; iter < 300; ++iter) {
    const PrimeConfig cfg(berkline::testing::pick_prime(g));
    const Rat r = g.rational(cfg.p());
    CHECK(rat_from_json(Json::parse(to_json(r).dump())) == r);
    const ValExp v = g.rexp();
    CHECK(valexp_from_json(to_json(v)) == v);
    for (const KernelValue k : {KernelValue(v), KernelValue::plus_infinity(), KernelValue::minus_infinity()})
      CHECK(kernel_value_from_json(to_json(k)) == k);
    const BerkPoint x = g.point(cfg);
    CHECK(point_from_json(Json::parse(to_json(x).dump()), cfg) == x);

    DiscreteMeasure m;
    for (long k = g.integer(0, 4); k > 0; --k) m.add(g.point(cfg), g.rexp());
    CHECK(measure_from_json(to_json(m), cfg) == m);

    const MetrizedGraph gr = span(berkline::testing::random_discs(g, cfg, static_cast<int>(g.integer(1, 5))));
    const MetrizedGraph back = graph_from_json(Json::parse(dump(to_json(gr))), cfg);
    CHECK(back.vertices() == gr.vertices());
    REQUIRE(back.edges().size() == gr.edges().size());
    for (std::size_t e = 0; e < gr.edges().size(); ++e) {
      CHECK(back.edges()[e].i == gr.edges()[e].i);
      CHECK(back.edges()[e].j == gr.edges()[e].j);
      CHECK(back.edges()[e].length == gr.edges()[e].length);
    }

    const DiscUnion e = berkline::testing::random_union(g, cfg, static_cast<int>(g.integer(1, 4)));
    const DiscUnion e2 = disc_union_from_json(to_json(e), cfg);
    REQUIRE(e2.size() == e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      CHECK(BerkPoint::disc(e2.discs()[i].center, e2.discs()[i].rexp, cfg) ==
            BerkPoint::disc(e.discs()[i].center, e.discs()[i].rexp, cfg));
    }

    const RationalMap phi = random_map(g, cfg);
    const RationalMap phi2 = map_from_json(to_json(phi), cfg);
    CHECK(phi2.numerator() == phi.numerator());
    CHECK(phi2.denominator() == phi.denominator());
  }
}

TEST_CASE("schema errors") {
  const PrimeConfig cfg(3);
  CHECK_THROWS_AS(point_from_json(Json{{"type", "IV"}}, cfg), Error);
  CHECK_THROWS_AS(point_from_json(Json{{"type", "disc"}, {"center", "1"}}, cfg), Error);
  CHECK_THROWS_AS(point_from_json(Json{{"type", "I"}, {"value", 1.5}}, cfg), Error);
  CHECK_THROWS_AS(point_from_json(Json{{"type", "I"}, {"value", "1/0"}}, cfg), Error);
  CHECK_THROWS_AS(measure_from_json(Json{{"atoms", 3}}, cfg), Error);
  CHECK_THROWS_AS(disc_union_from_json(Json{{"discs", Json::array()}}, cfg), Error);
  CHECK_THROWS_AS(graph_from_json(Json{{"vertices", {"gauss"}}, {"edges", {{{"i", 0}, {"j", 4}, {"length", "1"}}}}}, cfg),
                  Error);
  try {
    point_from_json(Json{{"type", "IV"}}, cfg);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::schema);
  }
  CHECK(point_from_json(Json{{"type", "I"}, {"value", 7}}, cfg) == BerkPoint::type_i(Rat(7), cfg));
}

TEST_CASE("capacity command") {
  const Result r = call({"capacity", "--p", "3", "--zp-level", "4", "--zeta", "inf"});
  CHECK(r.status == kOk);
  // (1 - 3^-4) / (3 - 1) = 40/81.
  CHECK(r.out == dump(Json{{"robin", exponent("40/81")}, {"capacity_log", exponent("-40/81")}}));
  const Result d = call({"--p", "2", "--decimal", "4", "capacity", "--zp-level", "1"});
  CHECK(d.status == kOk);
  const Json j = Json::parse(d.out);
  CHECK(j["robin"] == exponent("1/2"));
  CHECK(j["robin_approx"] == "~0.5000");
  CHECK(j["capacity_approx"] == "~0.7071");
}

TEST_CASE("commands match library calls") {
  Gen g(602);
  for (int iter = 0; iter < 25; ++iter) {
    const PrimeConfig cfg(berkline::testing::pick_prime(g));
    const std::string p = std::to_string(cfg.p());
    const BerkPoint x = g.point(cfg);
    const BerkPoint y = g.point(cfg);
    const BerkPoint zeta = BerkPoint::gauss(cfg);

    Result r = call({"kernel", "--p", p, "--kind", "rho", inline_json(to_json(x)), inline_json(to_json(y))});
    CHECK(r.status == kOk);
    CHECK(r.out == dump(Json{{"kind", "rho"}, {"value", to_json(path_distance(x, y))}}));
    r = call({"kernel", "--p", p, "--kind", "rho", inline_json(to_json(x)), inline_json(to_json(x))});
    CHECK(Json::parse(r.out)["value"] == exponent("0"));
    if (!x.is_disc() || !y.is_disc()) continue;
    r = call({"kernel", "--p", p, "--kind", "hsia", "--zeta", "gauss", inline_json(to_json(x)), inline_json(to_json(y))});
    CHECK(r.out == dump(Json{{"kind", "hsia"}, {"value", to_json(hsia_log(x, y, zeta))}}));

    const DiscUnion e = berkline::testing::random_union(g, cfg, static_cast<int>(g.integer(1, 4)));
    const std::string set = inline_json(to_json(e));
    r = call({"equilibrium", "--p", p, "--set", set});
    const EquilibriumResult eq = equilibrium(e, BerkPoint::infinity(cfg));
    CHECK(r.status == kOk);
    CHECK(r.out == dump(Json{{"measure", to_json(eq.measure)}, {"robin", to_json(eq.robin)}}));

    const BerkPoint outside = berkline::testing::point_outside(g, e, false);
    r = call({"green", "--p", p, "--set", set, "--at", inline_json(to_json(outside))});
    CHECK(r.out == dump(Json{{"value", to_json(green_function(e, BerkPoint::infinity(cfg), outside))}}));

    const auto bdry = berkline::testing::random_discs(g, cfg, static_cast<int>(g.integer(1, 4)));
    std::vector<BerkPoint> distinct;
    for (const auto& b : bdry)
      if (std::find(distinct.begin(), distinct.end(), b) == distinct.end()) distinct.push_back(b);
    Json problem{{"boundary", Json::array()}};
    for (const auto& b : distinct) problem["boundary"].push_back(to_json(b));
    r = call({"poisson", "--p", p, inline_json(problem)});
    if (r.status == kOk) {
      Json hm = Json::array();
      for (const auto& h : harmonic_measures(distinct, zeta)) hm.push_back(to_json(h));
      CHECK(r.out == dump(Json{{"at", to_json(zeta)}, {"harmonic_measures", hm}}));
    } else {
      CHECK_THROWS(harmonic_measures(distinct, zeta));
    }

    const RationalMap phi = random_map(g, cfg);
    const std::string map = inline_json(to_json(phi));
    r = call({"dynamics", "apply", "--p", p, map, inline_json(to_json(x))});
    CHECK(r.out == dump(Json{{"image", to_json(apply(phi, x))}}));
    r = call({"dynamics", "height", "--p", p, "--n", "2", map, inline_json(to_json(x))});
    CHECK(r.out == dump(Json{{"n", 2}, {"height", to_json(call_silverman(phi, x, 2))}}));
  }
}

TEST_CASE("equilibrium certificate") {
  const Result r = call({"equilibrium", "--p", "3", "--zp-level", "2", "--emit-certificate", "--samples", "30", "--seed", "5"});
  CHECK(r.status == kOk);
  const Json j = Json::parse(r.out);
  CHECK(j["certificate"]["frostman"] == true);
  CHECK(j["certificate"]["active_set_agrees"] == true);
  CHECK(j["measure"]["atoms"].size() == 9);
  CHECK(j["robin"] == exponent("4/9"));
  CHECK(call({"equilibrium", "--p", "3", "--zp-level", "2", "--emit-certificate", "--samples", "30", "--seed", "5"}).out == r.out);
}

TEST_CASE("dynamics commands") {
  const std::string sq = inline_json(kSquare);
  const Json graph{{"vertices", {"gauss", {{"type", "disc"}, {"center", "0"}, {"rexp", "2"}}}},
                   {"edges", {{{"i", 0}, {"j", 1}, {"length", "2"}}}}};
  for (const char* n : {"1", "2", "3"}) {
    const Result r = call({"dynamics", "lyubich", "--p", "5", "--n", n, sq, inline_json(graph)});
    CHECK(r.status == kOk);
    CHECK(r.out == dump(Json{{"atoms", {{{"point", {{"type", "disc"}, {"center", "0"}, {"rexp", exponent("0")}}}, {"mass", exponent("1")}}}}}));
  }
  Result r = call({"dynamics", "mult", "--p", "2", sq, R"({"type":"disc","center":"1","rexp":"1"})"});
  CHECK(r.out == dump(Json{{"multiplicity", 2}}));
  r = call({"dynamics", "reduction", "--p", "3", sq});
  CHECK(Json::parse(r.out)["good_reduction"] == true);
  r = call({"dynamics", "mult", "--p", "3", sq, R"({"type":"disc","center":"0","rexp":"1/2"})"});
  CHECK(r.status == kDomain);
  CHECK(r.err.find("UNSUPPORTED_POINT") != std::string::npos);
}

TEST_CASE("exit statuses") {
  CHECK(call({"capacity", "--zp-level", "1"}).status == kSchema);
  CHECK(call({"capacity", "--p", "4", "--zp-level", "1"}).status == kSchema);
  CHECK(call({"capacity", "--p", "3", "--set", "{oops"}).status == kSchema);
  CHECK(call({"capacity", "--p", "3", "--set", "/nonexistent/set.json"}).status == kSchema);
  CHECK(call({"frobnicate", "--p", "3"}).status == kSchema);
  CHECK(call({"capacity", "--p", "3", "--zp-level", "0", "--zeta", "gauss"}).status == kDomain);
  CHECK(call({"kernel", "--p", "3", "--kind", "rho", "gauss", R"({"type":"IV"})"}).status == kSchema);
}

TEST_CASE("point command") {
  const Result r = call({"point", "--p", "3", R"({"type":"disc","center":"3","rexp":"3"})", "--mobius", "0", "1", "1", "0"});
  CHECK(r.status == kOk);
  CHECK(r.out == dump(Json{{"point", {{"type", "disc"}, {"center", "3"}, {"rexp", exponent("3")}}},
                           {"type", "II"},
                           {"image", {{"type", "disc"}, {"center", "1/3"}, {"rexp", exponent("1")}}}}));
}

TEST_CASE("DOT export") {
  const PrimeConfig cfg(3);
  const MetrizedGraph one({BerkPoint::gauss(cfg)}, {});
  CHECK(export_dot(one) == "graph berkline {\n  v0 [label=\"0, 0\"];\n}\n");
  const MetrizedGraph star = span({BerkPoint::disc(Rat(0), ValExp(1), cfg), BerkPoint::disc(Rat(1), ValExp(2), cfg)});
  const std::string dot = export_dot(star, DiscreteMeasure::dirac(BerkPoint::gauss(cfg)));
  CHECK(dot ==
        "graph berkline {\n"
        "  v0 [label=\"0, 0\\nmass=1\"];\n"
        "  v1 [label=\"0, 1\"];\n"
        "  v2 [label=\"1, 2\"];\n"
        "  v0 -- v1 [label=\"1\"];\n"
        "  v0 -- v2 [label=\"2\"];\n"
        "}\n");
  CHECK(export_dot(star) == export_dot(star));
  const Result r = call({"export", "--p", "3", inline_json(to_json(star))});
  CHECK(r.out == export_dot(star));
}

TEST_CASE("array inputs are passed through whole") {
  const PrimeConfig cfg(3);
  const std::vector<BerkPoint> pts{BerkPoint::disc(Rat(0), ValExp(2), cfg), BerkPoint::disc(Rat(1), ValExp(1), cfg)};
  Json arr = Json::array();
  for (const auto& x : pts) arr.push_back(to_json(x));
  const Result r = call({"graph", "span", "--p", "3", inline_json(arr)});
  CHECK(r.status == kOk);
  CHECK(r.out == dump(to_json(span(pts))));
  const Result lap = call({"graph", "laplacian", "--p", "3", inline_json(to_json(span(pts))), "--values", R"(["0","1","2"])"});
  CHECK(lap.status == kOk);
  const MetrizedGraph g = span(pts);
  CHECK(lap.out == dump(to_json(laplacian(CPAFunction{&g, {ValExp(0), ValExp(1), ValExp(2)}}))));
}

TEST_CASE("documented invocation forms") {
  const Json z{{"type", "disc"}, {"center", "0"}, {"rexp", "1"}};
  Result r = call({"dynamics", "apply", "--p", "3", "--map", inline_json(kSquare), "--at", inline_json(z)});
  CHECK(r.status == kOk);
  CHECK(Json::parse(r.out)["image"]["rexp"] == exponent("2"));
  const Json legacy{{"numerator", {"0", "0", "1"}}, {"denominator", {"1"}}};
  CHECK(call({"dynamics", "apply", "--p", "3", inline_json(legacy), inline_json(z)}).out == r.out);
  CHECK(call({"dynamics", "apply", "--p", "3", "--map", inline_json(kSquare), inline_json(kSquare), inline_json(z)}).status ==
        kSchema);
  const Json graph{{"vertices", {"gauss"}}, {"edges", Json::array()}};
  r = call({"dynamics", "lyubich", "--p", "3", "--n", "2", "--map", inline_json(kSquare), "--graph", inline_json(graph)});
  CHECK(r.status == kOk);
  CHECK(Json::parse(r.out)["atoms"].size() == 1);

  const Json e{{"discs", {{{"center", "0"}, {"rexp", exponent("1")}}}}};
  r = call({"capacity", "--p", "3", "--zeta", "inf", inline_json(e)});
  CHECK(r.status == kOk);
  CHECK(call({"capacity", "--p", "3", "--E", inline_json(e)}).out == r.out);
  CHECK(call({"capacity", "--p", "3", "--zp-level", "1", inline_json(e)}).status == kSchema);
  CHECK(Json::parse(r.out)["robin"] == exponent("1"));
  r = call({"green", "--p", "3", "--E", inline_json(e), "--zeta", "inf", "--at", "gauss"});
  CHECK(r.status == kOk);
  CHECK(Json::parse(r.out)["value"] == exponent("1"));

  const Json bdry = Json::array({"gauss", z});
  const Json values = Json::array({"0", exponent("1")});
  const std::string mid = R"({"type":"disc","center":"0","rexp":"1/2"})";
  r = call({"poisson", "--p", "5", inline_json(bdry), inline_json(values), "--at", mid});
  CHECK(r.status == kOk);
  CHECK(r.out == call({"poisson", "--p", "5", inline_json(Json{{"boundary", bdry}, {"values", values}}), "--at", mid}).out);
  CHECK(Json::parse(r.out)["value"] == exponent("1/2"));
}
