#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "iwasawa/dataset.hpp"
#include "iwasawa/forge.hpp"
#include "iwasawa/selmer.hpp"

namespace iwasawa::report {

using Json = nlohmann::ordered_json;

enum class Status { matched, mismatch, expected_only, stored };
const char* to_string(Status s);

struct Cell {
  std::string column;
  std::string computed;
  std::string expected;
  std::string cite;
  Status status = Status::expected_only;
};

struct TableRow {
  std::string table;
  std::string label;
  std::vector<Cell> cells;
  bool matched() const;  // no cell is a mismatch
};

struct Tables {
  std::vector<TableRow> rows;
  bool matched() const;
  long mismatches() const;
};

// A curve supplied through --extra to fill a table column.
struct ExtraCurve {
  std::string label;
  std::array<Integer, 5> ainvs;
  std::string table;   // "conductor-15" or "conductor-195"
  std::string column;  // "E_1" .. "E_8"
};

std::vector<ExtraCurve> parse_extras(const Json& j);

// Recomputes the quantity named by an annotation key (see dataset.hpp).
std::string compute_annotation(const ec::WeierstrassCurve& E, const std::string& key);

TableRow check_entry(const data::DatasetEntry& e);

Tables cmd_tables(const std::vector<ExtraCurve>& extras = {});

struct AnalyzeOptions {
  long p = 0;
  std::optional<Integer> sel_order;  // |Sel_E(Q)_p|
  long digits = 30;
};

selmer::GlobalAssumptions assumptions(long p, const std::optional<Integer>& sel_order);

Json cmd_analyze(const ec::WeierstrassCurve& E, const std::string& label, const AnalyzeOptions& o);
Json cmd_euler(const ec::WeierstrassCurve& E, const AnalyzeOptions& o);
Json cmd_criteria(const ec::WeierstrassCurve& E, const AnalyzeOptions& o);
// p = 2 uses the rational 2-isogeny closure; otherwise `declared` edges are required.
Json cmd_mu_bound(const ec::WeierstrassCurve& E, const std::string& label, long p, const Json& declared);
Json cmd_growth(const std::string& f_text, long n_max, long N, long K);
Json cmd_fe(const std::string& f_text, long N, long K);
forge::ForgeSpec parse_forge_spec(const Json& j);
Json cmd_forge(const forge::ForgeSpec& spec, std::uint64_t seed);
Json cmd_verify_points();

Json to_json(const Tables& t);
Json to_json(const selmer::EulerReport& r);
std::string render_text(const Tables& t);
// Flattened "path: value" lines.
std::string render_text(const Json& j);

}  // namespace iwasawa::report
