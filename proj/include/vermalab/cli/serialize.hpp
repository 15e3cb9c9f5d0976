#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "vermalab/enright/pseudoadjoint.hpp"
#include "vermalab/enright/report.hpp"

namespace vermalab::cli {

using ordered_json = nlohmann::ordered_json;

inline std::string rat(const Rational& x) { return x.get_str(); }
inline std::string integer(const Integer& x) { return x.get_str(); }

inline ordered_json rats(const std::vector<Rational>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(rat(x));
  return a;
}

inline ordered_json ints(const std::vector<int>& v) {
  ordered_json a = ordered_json::array();
  for (int x : v) a.push_back(x);
  return a;
}

/// [row, col, "num/den"] for each stored entry.
inline ordered_json triplets(const QMat& m) {
  ordered_json a = ordered_json::array();
  for (const auto& [r, c, v] : m.triplets()) a.push_back({r, c, rat(v)});
  return a;
}

/// Tensor coefficients as [i, k, "num/den"] meaning the v_i⊗w_k entry.
inline ordered_json tensor_terms(const enright::TensorCoeffs& c) {
  ordered_json a = ordered_json::array();
  for (const auto& [ik, x] : c) a.push_back({ik.first, ik.second, rat(x)});
  return a;
}

inline std::string joined(const std::vector<Rational>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + rat(x);
  return s;
}

/// RFC 4180 table: CRLF line breaks, fields quoted when they contain a
/// comma, quote, or line break.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void row(std::vector<std::string> fields) {
    if (fields.size() != header_.size()) throw std::logic_error("CsvTable: row width does not match header");
    rows_.push_back(std::move(fields));
  }

  std::string str() const {
    std::ostringstream out;
    write(out, header_);
    for (const auto& r : rows_) write(out, r);
    return out.str();
  }

  std::size_t size() const { return rows_.size(); }

 private:
  static std::string field(const std::string& f) {
    if (f.find_first_of(",\"\r\n") == std::string::npos) return f;
    std::string q = "\"";
    for (char ch : f) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + "\"";
  }
  static void write(std::ostream& out, const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << field(r[i]);
    out << "\r\n";
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

inline const char* yes(bool b) { return b ? "true" : "false"; }

inline ordered_json index_sets_json(const enright::IndexSets& s) {
  return {{"I", ints(s.I)}, {"Iprime", ints(s.Iprime)}, {"Idoubleprime", ints(s.Idoubleprime)},
          {"Itripleprime", ints(s.Itripleprime)}};
}

inline ordered_json audit_json(const enright::AuditReport& a) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : a.rows) rows.push_back({{"mu", r.mu}, {"lhs", r.lhs}, {"rhs", r.rhs}});
  return rows;
}

inline ordered_json case_json(const enright::CaseRecord& c) {
  ordered_json j;
  j["s"] = c.s;
  j["summand"] = c.projective ? "T" : "V";
  j["p"] = rats(c.p);
  j["q"] = rats(c.q);
  j["m"] = c.m ? ordered_json(integer(*c.m)) : ordered_json(nullptr);
  j["checks"] = {{"hwvDim", c.checks.hwvDim},
                 {"alphaResiduals", rats(c.checks.alphaResiduals)},
                 {"alphaBoundary", c.checks.alphaBoundary},
                 {"betaResiduals", rats(c.checks.betaResiduals)},
                 {"betaBoundary", c.checks.betaBoundary},
                 {"casimirNilpotent", c.checks.casimirNilpotent},
                 {"positivity", c.checks.positivity}};
  if (!c.error.empty()) j["error"] = c.error;
  j["passed"] = c.passed();
  return j;
}

inline ordered_json enright_report_json(const enright::EnrightReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["lambda"] = r.lambda;
  j["depth"] = r.depth;
  j["indexSets"] = index_sets_json(r.sets);
  j["cases"] = ordered_json::array();
  for (const auto& c : r.cases) j["cases"].push_back(case_json(c));
  j["audit"] = audit_json(r.audit);
  j["auditPassed"] = r.audit.passed();
  return j;
}

inline ordered_json pseudoadjoint_json(const std::string& module, const enright::PseudoadjointReport& r) {
  return {{"module", module},
          {"c", rat(r.c)},
          {"margin", r.margin},
          {"interiorSize", r.interiorSize},
          {"residualZero", r.residualZero},
          {"bMinusCIsCasimir", r.bMinusCIsCasimir},
          {"omegaMinusCZero", r.omegaMinusCZero},
          {"squareZero", r.squareZero},
          {"passed", r.passed()}};
}

}  // namespace vermalab::cli
