#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "iwasawa/dataset.hpp"
#include "iwasawa/report.hpp"

using namespace iwasawa;
using report::Json;

namespace {

struct Options {
  long p = 0;
  std::string sel_order;
  long digits = 30;
  long t_precision = 40;
  std::string format = "json";
  std::string extra;
  std::uint64_t seed = 0;
  std::string curve;
  std::string spec;
  std::string text;
  long n_max = 3;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

std::pair<ec::WeierstrassCurve, std::string> resolve_curve(const std::string& s) {
  if (s.empty()) throw DomainError("a curve is required (--curve LABEL or --curve [a1,a2,a3,a4,a6])");
  if (s.front() == '[') return {ec::parse_curve(s), s};
  return {data::dataset_get(s).curve(), s};
}

report::AnalyzeOptions analyze_options(const Options& o) {
  if (o.p == 0) throw DomainError("--p is required");
  report::AnalyzeOptions a;
  a.p = o.p;
  if (!o.sel_order.empty()) a.sel_order = Integer(o.sel_order);
  a.digits = o.digits;
  return a;
}

void emit(const Json& j, const Options& o) {
  if (o.format == "text")
    std::cout << report::render_text(j);
  else
    std::cout << j.dump(2) << '\n';
}

bool annotations_matched(const Json& j) { return !j.contains("annotations") || j["annotations"]["match"].get<bool>(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iwasawa invariants of elliptic curves: Euler characteristics, mu bounds and worked tables"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("--p", o.p, "prime p");
    s->add_option("--sel-order", o.sel_order, "order of Sel_E(Q)_p (a power of p)");
    s->add_option("--precision-digits", o.digits, "p-adic working precision N")->capture_default_str();
    s->add_option("--t-precision", o.t_precision, "T-adic truncation K")->capture_default_str();
    s->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    s->add_option("--extra", o.extra, "JSON file with extra curves or declared isogeny edges");
    s->add_option("--seed", o.seed, "seed for randomized searches")->capture_default_str();
    s->add_option("--curve", o.curve, "dataset label or [a1,a2,a3,a4,a6]");
  };

  auto analyze = app.add_subcommand("analyze", "full report for a curve at p");
  common(analyze);
  analyze->add_option("label", o.curve, "dataset label or a-invariants");
  auto euler = app.add_subcommand("euler-char", "v_p(f_E(0)) ledger");
  common(euler);
  euler->add_option("label", o.curve, "dataset label or a-invariants");
  auto criteria = app.add_subcommand("criteria", "vanishing and infinitude criteria");
  common(criteria);
  criteria->add_option("label", o.curve, "dataset label or a-invariants");
  auto mub = app.add_subcommand("mu-bound", "lower bound for mu from isogeny kernels");
  common(mub);
  mub->add_option("label", o.curve, "dataset label or a-invariants");
  auto growth = app.add_subcommand("growth", "growth law of X / theta_n X for a Lambda element");
  common(growth);
  growth->add_option("f", o.text, "e.g. \"p=3 coeffs=[-3,1]\"")->required();
  growth->add_option("--n-max", o.n_max, "largest layer")->capture_default_str();
  auto fe = app.add_subcommand("fe", "functional equation and involution check");
  common(fe);
  fe->add_option("f", o.text, "e.g. \"p=3 coeffs=[3,3,1]\"")->required();
  auto forge = app.add_subcommand("forge", "construct a curve with prescribed local data");
  common(forge);
  forge->add_option("--spec", o.spec, "JSON file {\"P\":[[p,a_p]],\"L\":[[l,+-1,c]],\"Q\":[q]}")->required();
  auto points = app.add_subcommand("verify-points", "number-field point verifications");
  common(points);
  auto tables = app.add_subcommand("tables", "recompute the worked tables");
  common(tables);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  auto with_p = [&](const std::string& t) {
    if (o.p != 0 && t.find("p=") == std::string::npos) return "p=" + std::to_string(o.p) + " " + t;
    return t;
  };

  try {
    if (analyze->parsed()) {
      auto [E, label] = resolve_curve(o.curve);
      auto j = report::cmd_analyze(E, label, analyze_options(o));
      emit(j, o);
      return annotations_matched(j) ? 0 : 2;
    }
    if (euler->parsed()) {
      auto [E, label] = resolve_curve(o.curve);
      emit(report::cmd_euler(E, analyze_options(o)), o);
      return 0;
    }
    if (criteria->parsed()) {
      auto [E, label] = resolve_curve(o.curve);
      emit(report::cmd_criteria(E, analyze_options(o)), o);
      return 0;
    }
    if (mub->parsed()) {
      auto [E, label] = resolve_curve(o.curve);
      if (o.p == 0) throw DomainError("--p is required");
      Json declared = o.extra.empty() ? Json::object() : read_json(o.extra);
      emit(report::cmd_mu_bound(E, label, o.p, declared), o);
      return 0;
    }
    if (growth->parsed()) {
      emit(report::cmd_growth(with_p(o.text), o.n_max, o.digits, o.t_precision), o);
      return 0;
    }
    if (fe->parsed()) {
      emit(report::cmd_fe(with_p(o.text), o.digits, o.t_precision), o);
      return 0;
    }
    if (forge->parsed()) {
      auto j = report::cmd_forge(report::parse_forge_spec(read_json(o.spec)), o.seed);
      emit(j, o);
      return j["verified"].get<bool>() ? 0 : 2;
    }
    if (points->parsed()) {
      auto j = report::cmd_verify_points();
      emit(j, o);
      for (auto& s : j)
        if (!s["pass"].get<bool>()) return 2;
      return 0;
    }
    if (tables->parsed()) {
      std::vector<report::ExtraCurve> extras;
      if (!o.extra.empty()) extras = report::parse_extras(read_json(o.extra));
      auto t = report::cmd_tables(extras);
      if (o.format == "text")
        std::cout << report::render_text(t);
      else
        std::cout << report::to_json(t).dump(2) << '\n';
      return t.matched() ? 0 : 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
