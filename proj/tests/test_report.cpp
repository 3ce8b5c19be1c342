#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "iwasawa/dataset.hpp"
#include "iwasawa/report.hpp"

using namespace iwasawa;
using namespace iwasawa::report;

// discriminant straight from the a-invariants
static Integer disc_formula(const std::array<long, 5>& a) {
  Integer a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a6 = a[4];
  Integer b2 = a1 * a1 + 4 * a2, b4 = 2 * a4 + a1 * a3, b6 = a3 * a3 + 4 * a6;
  Integer b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return Integer(-b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6);
}

static const Cell* cell(const Tables& t, const std::string& table, const std::string& label, const std::string& col) {
  for (auto& r : t.rows)
    if (r.table == table && r.label == label)
      for (auto& c : r.cells)
        if (c.column == col) return &c;
  return nullptr;
}

TEST_CASE("dataset") {
  auto d = data::dataset_load();
  REQUIRE(d.size() == 13);
  std::set<std::string> labels;
  for (auto& e : d) {
    labels.insert(e.label);
    CHECK(e.curve().disc != 0);
    CHECK(disc_formula(e.ainvs) == e.curve().disc);
    for (auto& a : e.annotations) CHECK(data::resolves(a.cite));
  }
  CHECK(labels.size() == 13);
  for (auto& e : data::dataset_extras())
    for (auto& a : e.annotations) CHECK(data::resolves(a.cite));
  CHECK(disc_formula(data::dataset_get("11a").ainvs) == -161051);
  CHECK(compute_annotation(data::dataset_get("195a2").curve(), "torsion") == "Z/2 x Z/4");
  CHECK(data::dataset_get("15a3").ainvs == std::array<long, 5>{1, 1, 1, -5, 2});
  CHECK_THROWS_AS(data::dataset_get("37a"), DomainError);
  auto tampered = d;
  tampered[0].ainvs[4] = -21;
  CHECK(data::checksum(tampered) != data::checksum(d));
}

TEST_CASE("tables") {
  auto t = cmd_tables();
  for (const char* col : {"|T|", "c_3", "c_5", "c_13", "f(0)~", "mu"}) {
    auto c = cell(t, "conductor-195", "E_2 (195a2)", col);
    REQUIRE(c);
    CHECK(c->status == Status::matched);
  }
  CHECK(cell(t, "conductor-195", "E_1", "mu")->status == Status::expected_only);
  CHECK(cell(t, "conductor-15", "E_3 (15a3)", "f(0)~")->status == Status::matched);
  CHECK(cell(t, "conductor-768", "768d1", "f(0)~")->computed == "1");
  CHECK(cell(t, "conductor-768", "768d3", "f(0)~")->computed == "5");
  CHECK(cell(t, "conductor-1225", "1225e1/1225e2", "Omega1/Omega2")->status == Status::matched);
  CHECK(cell(t, "conductor-1225", "1225e1/1225e2", "finite Sel parity")->computed == "contradiction");
  // the two claims that the printed models contradict
  CHECK(t.mismatches() == 2);
  CHECK(cell(t, "curve-facts", "32a", "torsion")->status == Status::mismatch);
  CHECK(cell(t, "curve-facts", "915a1", "kind_61")->status == Status::mismatch);
  CHECK(render_text(t).find("mismatches: 2") != std::string::npos);
}

TEST_CASE("tables with extra curves") {
  Json j = Json::parse(R"({"curves":[{"label":"x","ainvs":[1,0,0,-115,392],"table":"conductor-195","column":"E_5"}]})");
  auto ex = parse_extras(j);
  REQUIRE(ex.size() == 1);
  auto t = cmd_tables(ex);
  // 195a2 placed in the wrong column must disagree
  CHECK(cell(t, "conductor-195", "E_5 (x)", "c_5")->status == Status::mismatch);
  CHECK_THROWS_AS(parse_extras(Json::parse(R"({"curves":[{"ainvs":[0,0,0,0,0]}]})")), DomainError);
}

TEST_CASE("analyze") {
  AnalyzeOptions o;
  o.p = 5;
  o.sel_order = Integer(1);
  auto a = cmd_analyze(data::dataset_get("11a").curve(), "11a", o);
  CHECK(a["euler"]["v_p_f0"] == 1);
  CHECK(a["conductor"] == "11");
  CHECK(a["annotations"]["match"] == true);
  o.p = 3;
  auto b = cmd_analyze(data::dataset_get("67a1").curve(), "67a1", o);
  CHECK(b["euler"]["v_p_f0"] == 2);
  CHECK(b["criteria"]["infinite"]["holds"] == true);
  o.sel_order.reset();
  auto c = cmd_analyze(data::dataset_get("32a").curve(), "32a", o);
  CHECK(c["euler"].contains("refused"));
  CHECK(c["corank"]["corank_lower_bound"] == 1);
  CHECK(c["annotations"]["match"] == false);
  for (auto& k : {"curve", "ainvs", "invariants", "conductor", "bad_primes", "p", "at_p", "torsion", "euler", "criteria",
                  "corank", "mu"})
    CHECK(a.contains(k));
  o.sel_order = Integer(6);
  CHECK_THROWS_AS(cmd_euler(data::dataset_get("67a1").curve(), o), DomainError);
  o.p = 4;
  CHECK_THROWS_AS(cmd_analyze(data::dataset_get("11a").curve(), "11a", o), DomainError);
}

TEST_CASE("growth and functional equation front-ends") {
  auto g = cmd_growth("p=3 coeffs=[-3,1]", 3, 30, 40);
  CHECK(g["lambda"] == 1);
  CHECK(g["mu"] == 0);
  CHECK(g["nu"] == 1);
  auto f = cmd_fe("p=3 coeffs=[3,3,1]", 30, 40);
  CHECK(f["w"] == 1);
  CHECK(f["c"] == "-2");
  CHECK(cmd_fe("p=2 coeffs=[2,1]", 30, 40)["associate_of_involution"] == "yes");
}

TEST_CASE("mu bound, forge and points") {
  auto E = data::dataset_get("195a2").curve();
  CHECK(cmd_mu_bound(E, "195a2", 2, Json::object())["lower_bound"] == 1);
  CHECK_THROWS_AS(cmd_mu_bound(E, "195a2", 3, Json::object()), DomainError);
  Json decl = Json::parse(R"({"edges":[{"from":"768d3","to":"768d1","degree":5,"p":5,"ramified":true,"odd":true}]})");
  CHECK(cmd_mu_bound(data::dataset_get("768d3").curve(), "768d3", 5, decl)["lower_bound"] == 1);
  CHECK(cmd_mu_bound(data::dataset_get("768d1").curve(), "768d1", 5, decl)["lower_bound"] == 0);
  auto s = parse_forge_spec(Json::parse(R"({"P":[[5,2]],"L":[{"ell":11,"a":1,"c":5}],"Q":[3]})"));
  CHECK(cmd_forge(s, 2)["verified"] == true);
  CHECK_THROWS_AS(parse_forge_spec(Json::parse(R"({"L":[[3,-1,3]]})")), DomainError);
  for (auto& r : cmd_verify_points()) CHECK(r["pass"] == true);
}

TEST_CASE("property: reports are byte-identical across runs") {
  AnalyzeOptions o;
  o.p = 5;
  auto E = data::dataset_get("406d1").curve();
  CHECK(cmd_analyze(E, "406d1", o).dump() == cmd_analyze(E, "406d1", o).dump());
  CHECK(to_json(cmd_tables()).dump() == to_json(cmd_tables()).dump());
  auto s = parse_forge_spec(Json::parse(R"({"P":[[7,-1]],"L":[[13,1,3]],"Q":[2]})"));
  CHECK(cmd_forge(s, 9).dump() == cmd_forge(s, 9).dump());
}
