#include "iwasawa/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "iwasawa/lambda.hpp"
#include "iwasawa/local.hpp"
#include "iwasawa/mu.hpp"
#include "iwasawa/numfield.hpp"
#include "iwasawa/torsion.hpp"

namespace iwasawa::report {

using namespace ec;

namespace {

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

const char* kind_name(Reduction r) {
  switch (r) {
    case Reduction::good: return "good";
    case Reduction::multiplicative_split: return "split";
    case Reduction::multiplicative_nonsplit: return "nonsplit";
    case Reduction::additive: return "additive";
  }
  return "?";
}

// "c_13" -> ("c_", 13)
std::optional<long> suffix_prime(const std::string& key, const std::string& prefix) {
  if (key.rfind(prefix, 0) != 0) return std::nullopt;
  std::string rest = key.substr(prefix.size());
  if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  return std::stol(rest);
}

Cell exact_cell(const std::string& column, const std::string& computed, const std::string& expected,
                const std::string& cite) {
  return {column, computed, expected, cite, computed == expected ? Status::matched : Status::mismatch};
}

Cell numeric_cell(const std::string& column, double computed, double expected, double tol, int digits,
                  const std::string& cite) {
  Cell c{column, fixed(computed, digits), fixed(expected, digits) + " +- " + fixed(tol, 9), cite, Status::mismatch};
  if (std::fabs(computed - expected) <= tol) c.status = Status::matched;
  return c;
}

Json json_of(const Integer& n) { return str(n); }

Json ainvs_json(const WeierstrassCurve& E) {
  Json a = Json::array();
  for (auto& x : E.ainvs()) a.push_back(str(x));
  return a;
}

Json local_json(const LocalData& ld) {
  Json j;
  j["ell"] = ld.ell;
  j["kind"] = kind_name(ld.kind);
  j["kodaira"] = ld.kodaira;
  j["tamagawa"] = ld.tamagawa;
  j["ord_disc"] = ld.ord_disc;
  j["ord_j"] = ld.ord_j ? Json(*ld.ord_j) : Json(nullptr);
  j["conductor_exponent"] = ld.conductor_exponent;
  return j;
}

Json criterion_json(const selmer::CriterionResult& r) {
  Json j;
  j["holds"] = r.holds;
  if (!r.clause.empty()) j["clause"] = r.clause;
  j["conclusion"] = r.conclusion;
  Json cs = Json::array();
  for (auto& c : r.conditions) cs.push_back({{"name", c.name}, {"satisfied", c.satisfied}, {"detail", c.detail}});
  j["conditions"] = cs;
  return j;
}

template <class F>
Json guarded(const std::string& place, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return Json{{"refused", place + ": " + e.what()}};
  }
}

struct MuResult {
  long bound;
  bool certified_zero;
  std::vector<std::string> chain;
};

MuResult mu_by_closure(const WeierstrassCurve& E) {
  auto C = mu::two_isogeny_class(E, "E");
  auto v = mu::mu_lower_bound(C.names[0], 2, C.edges);
  MuResult r{v.lower_bound, false, v.chain};
  for (auto& e : C.edges)
    if (e.from == C.names[0] && mu::mu_zero_certificate(2, e.kernel).zero_certified) r.certified_zero = true;
  return r;
}

struct ClassTable {
  std::string name;
  std::string cite;
  std::vector<long> primes;  // Tamagawa columns
  std::vector<long> sha, tors;
  std::vector<std::vector<long>> c;  // per prime, per column
  std::vector<long> f0, mu;
  std::string dataset_column, dataset_label;
};

const std::vector<ClassTable>& class_tables() {
  static const std::vector<ClassTable> t = {
      {"conductor-15",
       "tables/conductor-15",
       {3, 5},
       {1, 1, 1, 1, 1, 1, 1, 1},
       {8, 4, 8, 8, 2, 2, 4, 4},
       {{2, 2, 2, 2, 2, 2, 1, 1}, {4, 2, 2, 8, 1, 1, 1, 1}},
       {2, 4, 1, 4, 8, 8, 1, 1},
       {1, 2, 0, 2, 3, 3, 0, 0},
       "E_3",
       "15a3"},
      {"conductor-195",
       "tables/conductor-195",
       {3, 5, 13},
       {1, 1, 1, 1, 1, 1, 4, 1},
       {4, 8, 8, 4, 4, 4, 2, 2},
       {{4, 8, 4, 16, 2, 2, 1, 1}, {1, 2, 4, 1, 8, 2, 4, 16}, {1, 2, 4, 1, 2, 8, 1, 1}},
       {4, 8, 16, 16, 32, 32, 64, 64},
       {0, 1, 2, 2, 3, 3, 4, 4},
       "E_2",
       "195a2"},
  };
  return t;
}

TableRow class_row(const ClassTable& t, size_t i, const std::optional<WeierstrassCurve>& E, const std::string& label) {
  TableRow row{t.name, "E_" + std::to_string(i + 1) + (label.empty() ? "" : " (" + label + ")"), {}};
  auto expected_only = [&](const std::string& col, long v) {
    row.cells.push_back({col, "", std::to_string(v), t.cite, Status::expected_only});
  };
  row.cells.push_back({"|III|", "assumed", std::to_string(t.sha[i]), t.cite, Status::stored});
  if (!E) {
    expected_only("|T|", t.tors[i]);
    for (size_t k = 0; k < t.primes.size(); ++k) expected_only("c_" + std::to_string(t.primes[k]), t.c[k][i]);
    expected_only("f(0)~", t.f0[i]);
    expected_only("mu", t.mu[i]);
    return row;
  }
  row.cells.push_back(exact_cell("|T|", std::to_string(torsion(*E).order()), std::to_string(t.tors[i]), t.cite));
  for (size_t k = 0; k < t.primes.size(); ++k)
    row.cells.push_back(exact_cell("c_" + std::to_string(t.primes[k]),
                                   std::to_string(tate_local(*E, t.primes[k]).tamagawa), std::to_string(t.c[k][i]),
                                   t.cite));
  try {
    selmer::GlobalAssumptions A;
    A.sel_valuation = val(Integer(t.sha[i]), 2);
    A.provenance = "table";
    auto r = selmer::euler_char(*E, 2, A);
    row.cells.push_back(exact_cell("f(0)~", str(ipow(2, r.total)), std::to_string(t.f0[i]), t.cite));
  } catch (const Error& e) {
    row.cells.push_back({"f(0)~", std::string("error: ") + e.what(), std::to_string(t.f0[i]), t.cite, Status::mismatch});
  }
  try {
    auto m = mu_by_closure(*E);
    Cell c = exact_cell("mu", std::to_string(m.bound), std::to_string(t.mu[i]), t.cite);
    if (m.certified_zero) c.computed += " (certified)";
    if (m.certified_zero && t.mu[i] != 0) c.status = Status::mismatch;
    row.cells.push_back(c);
  } catch (const Error& e) {
    row.cells.push_back({"mu", std::string("error: ") + e.what(), std::to_string(t.mu[i]), t.cite, Status::mismatch});
  }
  return row;
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::matched: return "matched";
    case Status::mismatch: return "MISMATCH";
    case Status::expected_only: return "expected-only";
    case Status::stored: return "stored";
  }
  return "?";
}

bool TableRow::matched() const {
  for (auto& c : cells)
    if (c.status == Status::mismatch) return false;
  return true;
}

long Tables::mismatches() const {
  long n = 0;
  for (auto& r : rows)
    for (auto& c : r.cells) n += c.status == Status::mismatch;
  return n;
}

bool Tables::matched() const { return mismatches() == 0; }

std::vector<ExtraCurve> parse_extras(const Json& j) {
  std::vector<ExtraCurve> out;
  if (!j.contains("curves")) return out;
  for (auto& c : j.at("curves")) {
    ExtraCurve e;
    e.label = c.value("label", "");
    auto& a = c.at("ainvs");
    if (!a.is_array() || a.size() != 5) throw DomainError("extra curve needs five a-invariants");
    for (size_t i = 0; i < 5; ++i)
      e.ainvs[i] = a[i].is_string() ? Integer(a[i].get<std::string>()) : Integer(a[i].get<long>());
    e.table = c.value("table", "");
    e.column = c.value("column", "");
    curve_invariants(e.ainvs);
    out.push_back(e);
  }
  return out;
}

std::string compute_annotation(const WeierstrassCurve& E, const std::string& key) {
  if (key == "torsion") return torsion(E).structure();
  if (key == "torsion_order") return std::to_string(torsion(E).order());
  if (key == "disc") return str(E.disc);
  if (key == "omega") return fixed(real_period(E), 9);
  if (auto l = suffix_prime(key, "c_")) return std::to_string(tate_local(E, *l).tamagawa);
  if (auto l = suffix_prime(key, "kind_")) return kind_name(tate_local(E, *l).kind);
  if (auto l = suffix_prime(key, "ord_j_")) {
    auto o = tate_local(E, *l).ord_j;
    return o ? std::to_string(*o) : "inf";
  }
  if (auto p = suffix_prime(key, "a_")) return std::to_string(ap_count(E, *p));
  if (auto p = suffix_prime(key, "npts_")) return str(count_points(tate_local(E, *p).minimal, *p));
  if (auto p = suffix_prime(key, "red_")) {
    auto ld = tate_local(E, *p);
    if (ld.kind != Reduction::good) return kind_name(ld.kind);
    return ld.supersingular ? "supersingular" : "ordinary";
  }
  if (auto p = suffix_prime(key, "f0_")) {
    selmer::GlobalAssumptions A;
    A.provenance = "trivial Selmer group";
    return std::to_string(selmer::euler_char(E, *p, A).total);
  }
  throw DomainError("no evaluator for annotation key " + key);
}

TableRow check_entry(const data::DatasetEntry& e) {
  TableRow row{"curve-facts", e.label, {}};
  auto E = e.curve();
  for (auto& a : e.annotations) {
    if (a.kind == data::AnnotationKind::analytic || a.kind == data::AnnotationKind::statement) {
      row.cells.push_back({a.key, "", a.value, a.cite, Status::stored});
      continue;
    }
    try {
      if (a.kind == data::AnnotationKind::numeric) {
        double got = real_period(E);
        row.cells.push_back(numeric_cell(a.key, got, std::stod(a.value), a.tolerance, 6, a.cite));
      } else {
        row.cells.push_back(exact_cell(a.key, compute_annotation(E, a.key), a.value, a.cite));
      }
    } catch (const Error& ex) {
      row.cells.push_back({a.key, std::string("error: ") + ex.what(), a.value, a.cite, Status::mismatch});
    }
  }
  return row;
}

Tables cmd_tables(const std::vector<ExtraCurve>& extras) {
  Tables out;
  for (auto& t : class_tables()) {
    std::vector<std::optional<WeierstrassCurve>> cols(8);
    std::vector<std::string> labels(8);
    cols[t.dataset_column[2] - '1'] = data::dataset_get(t.dataset_label).curve();
    labels[t.dataset_column[2] - '1'] = t.dataset_label;
    for (auto& x : extras) {
      if (x.table != t.name) continue;
      if (x.column.size() != 3 || x.column.rfind("E_", 0) != 0 || x.column[2] < '1' || x.column[2] > '8')
        throw DomainError("bad column for extra curve: " + x.column);
      size_t i = x.column[2] - '1';
      cols[i] = curve_invariants(x.ainvs);
      labels[i] = x.label;
    }
    for (size_t i = 0; i < 8; ++i) out.rows.push_back(class_row(t, i, cols[i], labels[i]));
  }

  const std::string c768 = "examples/conductor-768";
  for (const char* label : {"768d1", "768d3"}) {
    auto e = data::dataset_get(label);
    auto E = e.curve();
    TableRow row{"conductor-768", label, {}};
    selmer::GlobalAssumptions A;
    row.cells.push_back(exact_cell("f(0)~", str(ipow(5, selmer::euler_char(E, 5, A).total)),
                                   std::string(label) == "768d1" ? "1" : "5", c768));
    row.cells.push_back(exact_cell("a_5", compute_annotation(E, "a_5"), "2", c768));
    row.cells.push_back(exact_cell("c_3", compute_annotation(E, "c_3"), e.find("c_3")->value, c768));
    out.rows.push_back(row);
  }

  {
    const std::string cite = "examples/conductor-1225";
    auto E1 = data::dataset_get("1225e1").curve();
    auto E2 = data::dataset_get("1225e2").curve();
    double w1 = real_period(E1), w2 = real_period(E2);
    TableRow row{"conductor-1225", "1225e1/1225e2", {}};
    row.cells.push_back(numeric_cell("Omega1/Omega2", w1 / w2, 37.0, 1e-6, 9, cite));
    row.cells.push_back(numeric_cell("Omega1", w1, 4.1353, 5e-4, 6, cite));
    row.cells.push_back(exact_cell("a_37", std::to_string(ap_count(E1, 37)), "8", cite));
    auto par = selmer::isogeny_parity(E1, E2, 37, 1);
    row.cells.push_back(exact_cell("finite Sel parity", par.inconsistent ? "contradiction" : "consistent",
                                   "contradiction", cite));
    out.rows.push_back(row);
  }

  for (auto& e : data::dataset_load()) out.rows.push_back(check_entry(e));
  for (auto& e : data::dataset_extras()) out.rows.push_back(check_entry(e));
  return out;
}

selmer::GlobalAssumptions assumptions(long p, const std::optional<Integer>& sel_order) {
  selmer::GlobalAssumptions A;
  if (sel_order) {
    if (*sel_order < 1) throw DomainError("--sel-order must be positive");
    Integer n = *sel_order;
    long v = val(n, p);
    if (n != ipow(p, v)) throw DomainError("--sel-order must be a power of p");
    A.sel_valuation = v;
    A.provenance = "input";
  } else {
    A.provenance = "assumed trivial";
  }
  return A;
}

Json to_json(const selmer::EulerReport& r) {
  Json j;
  j["p"] = r.p;
  j["reduction_at_p"] = r.reduction_at_p;
  Json l = Json::array();
  for (auto& e : r.ledger)
    l.push_back({{"place", e.place}, {"kind", e.kind}, {"contribution", e.contribution}, {"note", e.note}});
  j["ledger"] = l;
  j["v_p_f0"] = r.total;
  j["convention_dependent"] = r.convention_dependent;
  j["applicability"] = r.applicability;
  return j;
}

Json cmd_euler(const WeierstrassCurve& E, const AnalyzeOptions& o) {
  return to_json(selmer::euler_char(E, o.p, assumptions(o.p, o.sel_order), o.digits));
}

Json cmd_criteria(const WeierstrassCurve& E, const AnalyzeOptions& o) {
  auto A = assumptions(o.p, o.sel_order);
  Json j;
  j["vanishing"] = guarded("criterion_vanishing", [&] { return criterion_json(selmer::criterion_vanishing(E, o.p, A)); });
  j["infinite"] = guarded("criterion_infinite", [&] { return criterion_json(selmer::criterion_infinite(E, o.p, A)); });
  return j;
}

Json cmd_analyze(const WeierstrassCurve& E, const std::string& label, const AnalyzeOptions& o) {
  if (!is_prime(o.p)) throw DomainError("p must be prime");
  Json j;
  j["curve"] = label;
  j["ainvs"] = ainvs_json(E);
  j["invariants"] = {{"b2", json_of(E.b2)}, {"b4", json_of(E.b4)}, {"b6", json_of(E.b6)}, {"b8", json_of(E.b8)},
                     {"c4", json_of(E.c4)}, {"c6", json_of(E.c6)}, {"disc", json_of(E.disc)}, {"j", str(E.j)}};
  Integer N = 1;
  Json bad = Json::array();
  for (auto& l : bad_primes(E)) {
    auto ld = tate_local(E, l.get_si());
    N *= ipow(l, ld.conductor_exponent);
    bad.push_back(local_json(ld));
  }
  j["conductor"] = str(N);
  j["bad_primes"] = bad;
  j["p"] = o.p;
  auto at = tate_local(E, o.p);
  Json ap;
  ap["reduction"] = kind_name(at.kind);
  if (at.ap) {
    ap["a_p"] = *at.ap;
    ap["ordinary"] = at.ordinary;
    ap["supersingular"] = at.supersingular;
    ap["anomalous"] = at.anomalous;
  }
  j["at_p"] = ap;
  auto T = torsion(E);
  Json gens = Json::array();
  for (auto& g : T.generators) gens.push_back(g.to_string());
  j["torsion"] = {{"structure", T.structure()}, {"order", T.order()}, {"generators", gens}};
  j["euler"] = guarded("euler_char", [&] { return cmd_euler(E, o); });
  j["criteria"] = cmd_criteria(E, o);
  j["corank"] = guarded("corank_parity", [&] {
    auto r = selmer::corank_parity(E, o.p, 0, 0);
    return Json{{"potentially_supersingular", selmer::potentially_supersingular(E, o.p)},
                {"corank_lower_bound", r.corank_lower_bound},
                {"injective", r.injective}};
  });
  if (o.p == 2) {
    j["mu"] = guarded("mu_lower_bound", [&] {
      auto m = mu_by_closure(E);
      return Json{{"lower_bound", m.bound}, {"zero_certified", m.certified_zero}, {"chain", m.chain}};
    });
  } else {
    j["mu"] = Json{{"refused", "mu_lower_bound: kernels are computed only for p = 2"}};
  }
  for (auto& e : data::dataset_load())
    if (e.label == label) j["annotations"] = to_json(Tables{{check_entry(e)}})["rows"][0];
  for (auto& e : data::dataset_extras())
    if (e.label == label) j["annotations"] = to_json(Tables{{check_entry(e)}})["rows"][0];
  return j;
}

Json cmd_mu_bound(const WeierstrassCurve& E, const std::string& label, long p, const Json& declared) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  Json j;
  j["curve"] = label;
  j["p"] = p;
  std::vector<mu::IsogenyEdge> edges;
  std::string start = label;
  if (declared.contains("edges")) {
    for (auto& e : declared.at("edges")) {
      mu::IsogenyEdge x;
      x.from = e.at("from").get<std::string>();
      x.to = e.at("to").get<std::string>();
      x.degree = e.value("degree", 0L);
      x.kernel.p = e.value("p", p);
      x.kernel.m = e.value("m", 1L);
      x.kernel.ramified = e.at("ramified").get<bool>();
      x.kernel.odd = e.at("odd").get<bool>();
      x.kernel.provenance = mu::Provenance::input;
      edges.push_back(x);
    }
  } else if (p == 2) {
    auto C = mu::two_isogeny_class(E, "E");
    edges = C.edges;
    start = C.names[0];
    Json cs = Json::array();
    for (size_t i = 0; i < C.curves.size(); ++i) cs.push_back({{"name", C.names[i]}, {"ainvs", ainvs_json(C.curves[i])}});
    j["class"] = cs;
  } else {
    throw DomainError("mu-bound computes kernels only for p = 2; declare edges with --extra");
  }
  Json es = Json::array();
  for (auto& e : edges)
    es.push_back({{"from", e.from},
                  {"to", e.to},
                  {"degree", e.degree},
                  {"ramified", e.kernel.ramified},
                  {"odd", e.kernel.odd},
                  {"provenance", mu::to_string(e.kernel.provenance)},
                  {"note", e.kernel.note}});
  j["edges"] = es;
  auto v = mu::mu_lower_bound(start, p, edges);
  j["lower_bound"] = v.lower_bound;
  j["rule"] = v.rule;
  j["chain"] = v.chain;
  bool certified = false;
  for (auto& e : edges)
    if (e.from == start && e.kernel.p == p && mu::mu_zero_certificate(p, e.kernel).zero_certified) certified = true;
  j["zero_certified"] = certified;
  return j;
}

Json cmd_growth(const std::string& f_text, long n_max, long N, long K) {
  auto f = lambda::LambdaElement::parse(f_text, N, K);
  auto g = lambda::growth_fit(f, n_max);
  Json j;
  j["f"] = f.to_string();
  j["p"] = f.prime();
  j["lambda"] = g.lambda;
  j["mu"] = g.mu;
  j["nu"] = g.nu;
  j["n0"] = g.n0;
  Json d = Json::array();
  for (size_t n = 0; n < g.data.size(); ++n) {
    auto& q = g.data[n];
    Json row{{"n", n}, {"e_n", q.e_n}, {"free_rank", q.free_rank}, {"truncated", q.truncated}};
    long predicted = g.lambda * static_cast<long>(n) + g.mu * ipow(f.prime(), n).get_si() + g.nu;
    row["fit"] = predicted;
    auto r = lambda::resultant_valuation(f, static_cast<long>(n));
    row["resultant_valuation"] = r ? Json(*r) : Json(nullptr);
    d.push_back(row);
  }
  j["data"] = d;
  return j;
}

Json cmd_fe(const std::string& f_text, long N, long K) {
  auto f = lambda::LambdaElement::parse(f_text, N, K);
  Json j;
  j["f"] = f.to_string();
  j["p"] = f.prime();
  auto ml = lambda::mu_lambda(f);
  j["mu"] = ml.mu;
  j["lambda"] = ml.lambda;
  auto s = lambda::fe_solve(f);
  j["status"] = iwasawa::to_string(s.status);
  if (s.status == Verdict::yes) {
    j["w"] = s.w;
    if (s.c) j["c"] = str(s.c->centered_lift());
  }
  j["associate_of_involution"] = iwasawa::to_string(lambda::associates_check(f, lambda::involution(f)));
  return j;
}

forge::ForgeSpec parse_forge_spec(const Json& j) {
  forge::ForgeSpec s;
  auto num = [](const Json& v, const char* key, size_t idx) -> long {
    return v.is_array() ? v.at(idx).get<long>() : v.at(key).get<long>();
  };
  if (j.contains("P"))
    for (auto& v : j.at("P")) s.P.push_back({num(v, "p", 0), num(v, "ap", 1)});
  if (j.contains("L"))
    for (auto& v : j.at("L"))
      s.L.push_back({num(v, "ell", 0), static_cast<int>(num(v, "a", 1)), num(v, "c", 2)});
  if (j.contains("Q"))
    for (auto& v : j.at("Q")) s.Q.push_back(v.get<long>());
  s.validate();
  return s;
}

Json cmd_forge(const forge::ForgeSpec& spec, std::uint64_t seed) {
  auto r = forge::crt_assemble(spec, seed);
  Json j;
  j["seed"] = seed;
  j["curve"] = ainvs_json(r.curve);
  j["verified"] = r.verified();
  Json l = Json::array();
  for (auto& e : r.ledger) l.push_back({{"clause", e.clause}, {"pass", e.pass}, {"detail", e.detail}});
  j["ledger"] = l;
  Json w = Json::array();
  for (auto& x : r.witnesses) w.push_back({{"q", x.q}, {"r", x.r}, {"curve", ainvs_json(x.curve)}, {"a_r", x.ar}});
  j["witnesses"] = w;
  Json t = Json::object();
  for (auto& [m, e] : r.exponents) t[std::to_string(m)] = e;
  j["exponents"] = t;
  return j;
}

Json cmd_verify_points() {
  Json j = Json::array();
  for (auto& s : nf::verify_worked_points()) j.push_back({{"scenario", s.name}, {"pass", s.pass}, {"details", s.details}});
  return j;
}

Json to_json(const Tables& t) {
  Json rows = Json::array();
  for (auto& r : t.rows) {
    Json cells = Json::array();
    for (auto& c : r.cells)
      cells.push_back({{"column", c.column},
                       {"computed", c.computed},
                       {"expected", c.expected},
                       {"cite", c.cite},
                       {"status", to_string(c.status)}});
    rows.push_back({{"table", r.table}, {"label", r.label}, {"match", r.matched()}, {"cells", cells}});
  }
  return Json{{"rows", rows}, {"mismatches", t.mismatches()}};
}

std::string render_text(const Tables& t) {
  std::vector<std::array<std::string, 6>> lines;
  lines.push_back({"table", "curve", "column", "computed", "expected", "status"});
  for (auto& r : t.rows)
    for (auto& c : r.cells) lines.push_back({r.table, r.label, c.column, c.computed, c.expected, to_string(c.status)});
  std::array<size_t, 6> w{};
  for (auto& l : lines)
    for (size_t i = 0; i < 6; ++i) w[i] = std::max(w[i], l[i].size());
  std::ostringstream os;
  for (auto& l : lines) {
    for (size_t i = 0; i < 6; ++i) {
      os << l[i];
      if (i + 1 < 6) os << std::string(w[i] - l[i].size() + 2, ' ');
    }
    os << '\n';
  }
  os << "mismatches: " << t.mismatches() << '\n';
  return os.str();
}

namespace {
void flatten(const Json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}
}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  flatten(j, "", os);
  return os.str();
}

}  // namespace iwasawa::report
