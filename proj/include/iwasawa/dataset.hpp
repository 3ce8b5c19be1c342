#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "iwasawa/curve.hpp"

namespace iwasawa::data {

// How an annotation is used by the checker.
enum class AnnotationKind {
  exact,      // recomputed and compared exactly
  numeric,    // recomputed and compared within a tolerance
  analytic,   // reported analytic invariant, stored only
  statement,  // structural claim not recomputable here
};
const char* to_string(AnnotationKind k);

// Keys for exact annotations:
//   torsion, torsion_order, disc, c_<l>, kind_<l>, ord_j_<l>, a_<p>, npts_<p>, red_<p>, f0_<p>
// numeric: omega.  analytic: lambda_anal_<p>, mu_anal_<p>.
struct Annotation {
  std::string key;
  std::string value;
  std::string cite;
  AnnotationKind kind = AnnotationKind::exact;
  double tolerance = 0;
};

struct DatasetEntry {
  std::string label;
  std::array<long, 5> ainvs;
  std::vector<Annotation> annotations;
  std::string notes;

  ec::WeierstrassCurve curve() const;
  const Annotation* find(const std::string& key) const;
};

// Citation tags every annotation must resolve to.
const std::vector<std::string>& citation_tags();
bool resolves(const std::string& cite);

std::uint64_t checksum(const std::vector<DatasetEntry>& entries);

// The thirteen worked curves; throws Error if the embedded checksum fails.
std::vector<DatasetEntry> dataset_load();
// Curves whose a-invariants are printed only inside the worked discussion (15a3).
std::vector<DatasetEntry> dataset_extras();
// Searches the dataset and then the extras; throws DomainError if absent.
DatasetEntry dataset_get(const std::string& label);

}  // namespace iwasawa::data
