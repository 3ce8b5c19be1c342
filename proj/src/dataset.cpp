#include "iwasawa/dataset.hpp"

#include <algorithm>

namespace iwasawa::data {

namespace {

constexpr AnnotationKind X = AnnotationKind::exact;
constexpr AnnotationKind N = AnnotationKind::numeric;
constexpr AnnotationKind A = AnnotationKind::analytic;
constexpr AnnotationKind S = AnnotationKind::statement;

const char* const kC11 = "examples/conductor-11";
const char* const kC32 = "examples/conductor-32";
const char* const kC34 = "examples/conductor-34";
const char* const kC58 = "examples/conductor-58";
const char* const kC67 = "examples/conductor-67";
const char* const kC195 = "examples/conductor-195";
const char* const kT195 = "tables/conductor-195";
const char* const kT15 = "tables/conductor-15";
const char* const kC306 = "examples/conductor-306";
const char* const kC406 = "examples/conductor-406";
const char* const kC768 = "examples/conductor-768";
const char* const kC915 = "examples/conductor-915";
const char* const kC1225 = "examples/conductor-1225";
const char* const kAnal = "examples/analytic-invariants";

constexpr std::uint64_t kChecksum = 0xad398298b77c9f08ULL;

std::vector<DatasetEntry> build() {
  return {
      {"11a",
       {0, -1, 1, -10, -20},
       {{"torsion", "Z/5", kC11, X},
        {"ord_j_11", "-5", kC11, X},
        {"f0_5", "1", kC11, X},
        {"mu_5", "1", kC11, S},
        {"lambda_5", "0", kC11, S}},
       "X_0(11); Sel_E(Q)_5 assumed trivial"},
      {"32a",
       {0, 0, 0, -4, 0},
       {{"torsion", "Z/4", kC32, X},
        {"c_2", "4", kC32, X},
        {"red_3", "supersingular", kC32, X},
        {"red_5", "ordinary", kC32, X},
        {"sha", "0", kC32, S}},
       "CM by Z[i]; ordinary exactly at p = 1 mod 4"},
      {"768d1",
       {0, 1, 0, -7, 5},
       {{"a_5", "2", kC768, X},
        {"kind_2", "additive", kC768, X},
        {"kind_3", "split", kC768, X},
        {"c_2", "2", kC768, X},
        {"c_3", "1", kC768, X},
        {"torsion", "Z/2", kC768, X},
        {"f0_5", "0", kC768, X}},
       "5-isogenous to 768d3"},
      {"768d3",
       {0, 1, 0, -647, -6555},
       {{"a_5", "2", kC768, X},
        {"kind_2", "additive", kC768, X},
        {"kind_3", "split", kC768, X},
        {"c_2", "2", kC768, X},
        {"c_3", "5", kC768, X},
        {"torsion", "Z/2", kC768, X},
        {"f0_5", "1", kC768, X},
        {"mu_5", "1", kC768, S}},
       "Sel over the Z_5-extension is Hom(Lambda/5Lambda, Z/5Z)"},
      {"67a1",
       {0, 1, 1, -12, -21},
       {{"f0_3", "2", kC67, X}, {"lambda_anal_3", "2", kAnal, A}, {"mu_anal_3", "0", kAnal, A}},
       "E[3] irreducible; Sel over the Z_3-extension is infinite"},
      {"915a1",
       {0, -1, 1, -460, -11577},
       {{"kind_3", "nonsplit", kC915, X},
        {"kind_5", "split", kC915, X},
        {"kind_61", "split", kC915, X},
        {"c_3", "1", kC915, X},
        {"c_5", "7", kC915, X},
        {"c_61", "1", kC915, X},
        {"torsion", "0", kC915, X},
        {"f0_7", "1", kC915, X},
        {"f0_43", "2", kC915, X},
        {"lambda_anal_7", "2", kAnal, A},
        {"lambda_anal_43", "2", kAnal, A}},
       "43 is anomalous"},
      {"34a1",
       {1, 0, 0, -3, 1},
       {{"c_2", "6", kC34, X},
        {"c_17", "1", kC34, X},
        {"torsion", "Z/6", kC34, X},
        {"a_3", "-2", kC34, X},
        {"f0_3", "1", kC34, X},
        {"omega", "4.4956", kC34, N, 5e-4},
        {"lambda_anal_3", "2", kAnal, A},
        {"mu_anal_3", "0", kAnal, A}},
       "f_E(T) = T^2 + 3T + 3 up to a unit at p = 3"},
      {"306b3",
       {1, -1, 0, -927, 11097},
       {{"torsion", "Z/6", kC306, X}, {"kind_3", "additive", kC306, X}, {"rank", "1", kC306, S}},
       "quadratic twist of 34a3 by the character of conductor 3"},
      {"195a2",
       {1, 0, 0, -115, 392},
       {{"torsion", "Z/2 x Z/4", kC195, X},
        {"c_3", "8", kT195, X},
        {"c_5", "2", kT195, X},
        {"c_13", "2", kT195, X},
        {"npts_31", "40", kC195, X},
        {"f0_2", "3", kT195, X},
        {"mu_2", "1", kT195, S},
        {"lambda_2", "3", kC195, S}},
       "nonminimal model y^2 = (x - 1)(x - 2)(16x + 49) used for points"},
      {"1225e1",
       {1, 1, 1, -8, 6},
       {{"a_37", "8", kC1225, X},
        {"kind_5", "additive", kC1225, X},
        {"kind_7", "additive", kC1225, X},
        {"omega", "4.1353", kC1225, N, 5e-4},
        {"lambda_anal_37", "1", kAnal, A},
        {"mu_anal_37", "0", kAnal, A}},
       "37-isogenous to 1225e2"},
      {"1225e2",
       {1, 1, 1, -208083, -36621194},
       {{"a_37", "8", kC1225, X},
        {"kind_5", "additive", kC1225, X},
        {"kind_7", "additive", kC1225, X},
        {"omega", "0.11176", kC1225, N, 5e-5},
        {"mu_37", "1", kC1225, S}},
       "kernel of the isogeny to 1225e1 is odd and ramified at 37"},
      {"58a",
       {1, -1, 0, -1, 1},
       {{"torsion", "0", kC58, X}, {"lambda_anal_5", "1", kAnal, A}, {"mu_anal_5", "0", kAnal, A}},
       "E(Q) = Z"},
      {"406d1",
       {1, 1, 0, -2124, -60592},
       {{"c_2", "2", kC406, X},
        {"c_7", "5", kC406, X},
        {"c_29", "2", kC406, X},
        {"torsion", "Z/2", kC406, X},
        {"f0_5", "1", kC406, X},
        {"lambda_anal_5", "6", kAnal, A},
        {"mu_anal_5", "0", kAnal, A}},
       "E[5] isomorphic to E'[5] for E' = 58a"},
  };
}

std::uint64_t fnv(std::uint64_t h, const std::string& s) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return (h ^ 0xff) * 0x100000001b3ULL;
}

}  // namespace

const char* to_string(AnnotationKind k) {
  switch (k) {
    case AnnotationKind::exact: return "exact";
    case AnnotationKind::numeric: return "numeric";
    case AnnotationKind::analytic: return "analytic";
    case AnnotationKind::statement: return "statement";
  }
  return "?";
}

ec::WeierstrassCurve DatasetEntry::curve() const {
  return ec::curve_invariants(ainvs[0], ainvs[1], ainvs[2], ainvs[3], ainvs[4]);
}

const Annotation* DatasetEntry::find(const std::string& key) const {
  for (auto& a : annotations)
    if (a.key == key) return &a;
  return nullptr;
}

const std::vector<std::string>& citation_tags() {
  static const std::vector<std::string> tags = {kC11, kC32, kC34, kC58, kC67, kC195, kT195, kT15,
                                                kC306, kC406, kC768, kC915, kC1225, kAnal};
  return tags;
}

bool resolves(const std::string& cite) {
  auto& t = citation_tags();
  return std::find(t.begin(), t.end(), cite) != t.end();
}

std::uint64_t checksum(const std::vector<DatasetEntry>& entries) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto& e : entries) {
    h = fnv(h, e.label);
    for (long a : e.ainvs) h = fnv(h, std::to_string(a));
    for (auto& a : e.annotations) {
      h = fnv(h, a.key);
      h = fnv(h, a.value);
      h = fnv(h, a.cite);
    }
  }
  return h;
}

std::vector<DatasetEntry> dataset_load() {
  auto d = build();
  if (checksum(d) != kChecksum) throw Error("dataset integrity check failed");
  return d;
}

std::vector<DatasetEntry> dataset_extras() {
  return {{"15a3",
           {1, 1, 1, -5, 2},
           {{"torsion_order", "8", kT15, X},
            {"c_3", "2", kT15, X},
            {"c_5", "2", kT15, X},
            {"a_2", "-1", kT15, X},
            {"f0_2", "0", kT15, X},
            {"mu_2", "0", kT15, S}},
           "(3/4, -7/8) ramified not odd; (-3, 1) odd not ramified; (1, -1) neither"}};
}

DatasetEntry dataset_get(const std::string& label) {
  for (auto& e : dataset_load())
    if (e.label == label) return e;
  for (auto& e : dataset_extras())
    if (e.label == label) return e;
  throw DomainError("unknown curve label: " + label);
}

}  // namespace iwasawa::data
