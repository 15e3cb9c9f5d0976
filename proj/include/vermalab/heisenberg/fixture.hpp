#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "vermalab/heisenberg/probes.hpp"

namespace vermalab::heisenberg {

using ordered_json = nlohmann::ordered_json;

inline ordered_json helem_terms_json(const HElem& h) {
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : h.terms()) terms.push_back({{"b", m.b}, {"a", m.a}, {"coeff", c.get_str()}});
  return terms;
}

inline HElem helem_from_json(const ordered_json& terms) {
  HElem h;
  for (const auto& t : terms) {
    NormalMonomial m{t.at("b").get<std::vector<int>>(), t.at("a").get<std::vector<int>>()};
    Rational c(t.at("coeff").get<std::string>());
    c.canonicalize();
    h.add(m, c);
  }
  return h;
}

/// The frozen-table layout shared with the Python oracle.
inline ordered_json tilde_fixture_json(int bound) {
  const auto probe = tilde_probe(bound, bound);
  ordered_json doc;
  doc["bound"] = bound;
  doc["candidates"] = ordered_json::array();
  for (std::size_t n = 0; n < probe.candidates.size(); ++n)
    doc["candidates"].push_back({{"n", n + 1}, {"terms", helem_terms_json(probe.candidates[n])}});
  doc["residuals"] = ordered_json::array();
  for (const auto& r : probe.residuals)
    doc["residuals"].push_back({{"n", r.n}, {"m", r.m}, {"terms", helem_terms_json(r.residual)}});
  return doc;
}

inline ordered_json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return ordered_json::parse(in);
}

struct FixtureComparison {
  bool matches = false;
  int entries = 0;
  int mismatches = 0;
};

/// Compares the computed probe against a frozen table, entry by entry.
inline FixtureComparison compare_tilde_fixture(const ordered_json& fixture) {
  const int bound = fixture.at("bound").get<int>();
  const auto probe = tilde_probe(bound, bound);
  FixtureComparison out;
  const auto& rows = fixture.at("residuals");
  out.entries = static_cast<int>(rows.size());
  if (rows.size() != probe.residuals.size()) ++out.mismatches;
  for (const auto& row : rows) {
    const int n = row.at("n").get<int>(), m = row.at("m").get<int>();
    const HElem frozen = helem_from_json(row.at("terms"));
    bool found = false;
    for (const auto& r : probe.residuals)
      if (r.n == n && r.m == m) {
        found = true;
        if (!(r.residual == frozen)) ++out.mismatches;
      }
    if (!found) ++out.mismatches;
  }
  for (const auto& c : fixture.at("candidates")) {
    const int n = c.at("n").get<int>();
    if (n < 1 || n > bound || !(probe.candidates[n - 1] == helem_from_json(c.at("terms")))) ++out.mismatches;
  }
  out.matches = out.mismatches == 0;
  return out;
}

}  // namespace vermalab::heisenberg
