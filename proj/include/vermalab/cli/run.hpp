#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "vermalab/adelman/fixture.hpp"
#include "vermalab/cli/serialize.hpp"
#include "vermalab/enright/grothendieck.hpp"
#include "vermalab/hecke/relations.hpp"
#include "vermalab/heisenberg/fixture.hpp"
#include "vermalab/sl2/projective.hpp"
#include "vermalab/util/parallel.hpp"

namespace vermalab::cli {

inline constexpr std::uint64_t default_seed = 1;

enum class Format { Json, Csv };
enum class QMode { Generic, One, Both };

/// Thrown for a config that parses but does not fit the command; maps to exit 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  std::optional<int> n, lambda, s, depth, margin, trials, nMax;
  QMode qMode = QMode::Both;
  std::uint64_t seed = default_seed;
  std::string outputPath;  // empty means stdout
  Format format = Format::Json;
  bool refreeze = false;
  std::string fixtureDir;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = {"decompose",         "hwv",
                                             "projgen",           "verify-hecke",
                                             "verify-heisenberg", "verify-adelman",
                                             "verify-pseudoadjoint", "report"};
  return c;
}

struct Outcome {
  ordered_json json;
  CsvTable csv{{}};
  bool passed = true;
};

namespace detail {

inline int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required option --") + flag);
  return *v;
}

inline int nonneg(const std::optional<int>& v, const char* flag) {
  const int x = need(v, flag);
  if (x < 0) throw UsageError(std::string("--") + flag + " must be nonnegative");
  return x;
}

inline void lambda_zero(const RunConfig& c) {
  if (c.lambda.value_or(0) != 0) throw UsageError("this command supports --lambda 0 only");
}

inline int positive_trials(const RunConfig& c, int fallback) {
  const int t = c.trials.value_or(fallback);
  if (t < 1) throw UsageError("--trials must be positive");
  return t;
}

inline Outcome decompose(const RunConfig& c) {
  const int n = nonneg(c.n, "n");
  const int lambda = c.lambda.value_or(0);
  Outcome o;
  const auto sets = enright::index_sets(n, lambda);
  o.json["n"] = n;
  o.json["lambda"] = lambda;
  o.json["indexSets"] = index_sets_json(sets);
  o.csv = CsvTable({"mu", "lhs", "rhs", "blocksPassed"});
  if (lambda != 0) return o;  // the module-level audit exists for λ = 0 only

  const int depth = c.depth.value_or(enright::default_depth(n));
  if (depth < n + 2) throw UsageError("--depth must be at least n + 2");
  const auto audit = enright::decomposition_audit(n, depth);
  o.json["depth"] = depth;
  o.json["audit"] = ordered_json::array();
  for (const auto& r : audit.rows) {
    const auto blocks = enright::casimir_blocks(n, r.mu, depth);
    ordered_json bl = ordered_json::array();
    for (const auto& b : blocks.blocks)
      bl.push_back({{"t", b.t},
                    {"c", rat(b.c)},
                    {"predicted", b.predicted},
                    {"kernelDim", b.kernelDim},
                    {"excessDim", b.excessDim},
                    {"squareKills", b.squareKills},
                    {"projective", b.projective}});
    o.json["audit"].push_back({{"mu", r.mu}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"blocks", bl}, {"blocksPassed", blocks.passed()}});
    o.csv.row({std::to_string(r.mu), std::to_string(r.lhs), std::to_string(r.rhs), yes(blocks.passed())});
    o.passed = o.passed && r.lhs == r.rhs && blocks.passed();
  }
  const auto dec = enright::decategorify(n, depth);
  o.json["grothendieck"] = {{"bijective", dec.bijective},
                            {"intertwinesF", dec.intertwinesF},
                            {"intertwinesMinusE", dec.intertwinesMinusE},
                            {"uClassesMatch", dec.uClassesMatch},
                            {"aClassesMatch", dec.aClassesMatch},
                            {"classesNonnegative", dec.classesNonnegative}};
  o.passed = o.passed && dec.passed();
  o.json["passed"] = o.passed;
  return o;
}

inline Outcome hwv(const RunConfig& c) {
  lambda_zero(c);
  const int n = nonneg(c.n, "n");
  const int s = need(c.s, "s");
  const auto sets = enright::index_sets(n, 0);
  if (!sets.in_Iprime(s) && !sets.in_Itripleprime(s)) throw UsageError("--s must lie in I' or I''' for this n");
  const auto rec = enright::highest_weight_vector(n, s);
  const auto alpha = enright::alpha_recursion_check(rec);
  const auto slice = enright::tensor_module(n, enright::default_depth(n));
  const bool fpos = enright::f_powers_nonnegative(slice, n, s, rec.pNormalized());
  Outcome o;
  o.json["n"] = n;
  o.json["s"] = s;
  o.json["kernelDim"] = rec.kernelDim;
  o.json["p"] = rats(rec.pList);
  o.json["vector"] = tensor_terms(rec.pNormalized());
  o.json["alphaResiduals"] = rats(alpha.residuals);
  o.json["alphaBoundary"] = alpha.boundaryZero && alpha.seedMatches;
  o.json["fPowersNonnegative"] = fpos;
  o.passed = rec.kernelDim == 1 && alpha.all_zero() && fpos;
  o.json["passed"] = o.passed;
  o.csv = CsvTable({"j", "p"});
  for (std::size_t j = 0; j < rec.pList.size(); ++j) o.csv.row({std::to_string(j), rat(rec.pList[j])});
  return o;
}

inline Outcome projgen(const RunConfig& c) {
  lambda_zero(c);
  const int n = nonneg(c.n, "n");
  const int s = need(c.s, "s");
  if (!enright::index_sets(n, 0).in_Iprime(s)) throw UsageError("--s must lie in I' for this n");
  const auto pg = enright::projective_generator(n, s);
  Outcome o;
  o.json["n"] = n;
  o.json["s"] = s;
  o.json["c"] = rat(pg.c);
  o.json["p"] = rats(pg.pList);
  o.json["q"] = rats(pg.qList);
  o.json["m"] = integer(pg.m);
  o.json["final"] = rats(pg.finalCoefficients);
  o.json["vector"] = tensor_terms(pg.final_vector());
  o.json["kernelDim"] = pg.kernelDim;
  o.json["excessDim"] = pg.excessDim;
  o.json["checks"] = {{"nilpotentSquare", pg.nilpotentSquare}, {"notInKernel", pg.notInKernel},
                      {"betaI0Zero", pg.betaI0Zero},           {"boundaryMatches", pg.boundaryMatches},
                      {"positive", pg.positive},               {"betaResiduals", rats(pg.betaResiduals)}};
  o.json["omegaMinusCOnA"] = rats(pg.omegaColumnsA);
  o.passed = pg.passed();
  o.json["passed"] = o.passed;
  o.csv = CsvTable({"j", "p", "q", "final"});
  for (std::size_t j = 0; j < pg.qList.size(); ++j)
    o.csv.row({std::to_string(j), j < pg.pList.size() ? rat(pg.pList[j]) : "", rat(pg.qList[j]),
               rat(pg.finalCoefficients[j])});
  return o;
}

inline void add_relations(Outcome& o, const std::string& model, const hecke::RelationReport& r) {
  for (const auto& x : r.results) {
    o.json["relations"].push_back({{"model", model},
                                   {"relation", x.relation},
                                   {"n", x.n},
                                   {"indices", x.indices},
                                   {"pass", x.pass},
                                   {"witness", x.witness}});
    o.csv.row({model, x.relation, std::to_string(x.n), x.indices, yes(x.pass), x.witness});
  }
  o.passed = o.passed && r.all_pass();
}

inline Outcome verify_hecke(const RunConfig& c) {
  const int n = c.n.value_or(4);
  if (n < 2 || n > 6) throw UsageError("--n must lie in 2..6");
  const int trials = positive_trials(c, 200);
  Outcome o;
  o.csv = CsvTable({"model", "relation", "n", "indices", "pass", "witness"});
  o.json["n"] = n;
  o.json["qMode"] = c.qMode == QMode::Generic ? "generic" : c.qMode == QMode::One ? "one" : "both";
  o.json["relations"] = ordered_json::array();
  if (c.qMode != QMode::Generic) add_relations(o, "jucys-murphy", hecke::verify_degenerate(n));
  if (c.qMode != QMode::One) {
    add_relations(o, "evaluation", hecke::verify_nondegenerate(n));
    add_relations(o, "degeneration", hecke::degeneration_check(n));
  }
  const auto fuzz = hecke::hecke_associativity_fuzz(trials, c.seed);
  o.json["associativityFuzz"] = {{"seed", c.seed}, {"trials", fuzz.trials}, {"failures", fuzz.failures}};
  o.passed = o.passed && fuzz.failures == 0;
  o.json["passed"] = o.passed;
  return o;
}

inline std::string fixture_path(const RunConfig& c, const char* name) { return c.fixtureDir + "/" + name; }

inline void write_json_file(const std::string& path, const ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

inline Outcome verify_heisenberg(const RunConfig& c) {
  const int order = c.n.value_or(6);
  if (order < 1) throw UsageError("--n must be positive");
  const int trials = positive_trials(c, 1000);
  Outcome o;
  o.csv = CsvTable({"check", "detail", "pass"});
  o.json["order"] = order;
  o.json["identities"] = ordered_json::array();
  auto identities = heisenberg::verify_generating_identity(order);
  for (const auto& r : heisenberg::verify_commuting_families(order)) identities.push_back(r);
  for (const auto& r : identities) {
    const bool ok = r.residual.is_zero();
    o.json["identities"].push_back(
        {{"relation", r.relation}, {"i", r.i}, {"j", r.j}, {"residual", r.residual.to_string()}, {"pass", ok}});
    o.csv.row({r.relation, "i=" + std::to_string(r.i) + ",j=" + std::to_string(r.j), yes(ok)});
    o.passed = o.passed && ok;
  }

  const auto conf = heisenberg::confluence_fuzz(trials, c.seed);
  const bool confOk = conf.failures == 0 && conf.negativeOrNonIntegral == 0 && conf.measureViolations == 0;
  o.json["confluence"] = {{"seed", c.seed},
                          {"trials", conf.trials},
                          {"mismatches", conf.failures},
                          {"negativeOrNonIntegral", conf.negativeOrNonIntegral},
                          {"measureViolations", conf.measureViolations}};
  o.csv.row({"confluence", std::to_string(conf.trials) + " words", yes(confOk)});
  const auto fock = heisenberg::fock_representation_fuzz(trials, c.seed);
  o.json["fock"] = {{"seed", c.seed}, {"trials", fock.trials}, {"failures", fock.failures}};
  o.csv.row({"fock", std::to_string(fock.trials) + " triples", yes(fock.failures == 0)});
  o.passed = o.passed && confOk && fock.failures == 0;

  const std::string path = fixture_path(c, "heisenberg_tilde.json");
  if (c.refreeze) write_json_file(path, heisenberg::tilde_fixture_json(4));
  const auto cmp = heisenberg::compare_tilde_fixture(heisenberg::load_json(path));
  const auto probe = heisenberg::tilde_probe(4, 4);
  o.json["tilde"] = {{"fixture", path}, {"entries", cmp.entries}, {"mismatches", cmp.mismatches}, {"residuals", ordered_json::array()}};
  for (const auto& r : probe.residuals)
    o.json["tilde"]["residuals"].push_back({{"n", r.n}, {"m", r.m}, {"residual", r.residual.to_string()}});
  o.csv.row({"tilde-fixture", std::to_string(cmp.entries) + " entries", yes(cmp.matches)});
  o.passed = o.passed && cmp.matches;
  o.json["passed"] = o.passed;
  return o;
}

inline ordered_json trial_json(const adelman::TrialCount& t) { return {{"passed", t.passed}, {"failed", t.failed}}; }

inline Outcome verify_adelman(const RunConfig& c) {
  const int trials = positive_trials(c, 100);
  const int maxDim = c.n.value_or(4);
  if (maxDim < 1 || maxDim > 6) throw UsageError("--n (maximum object dimension) must lie in 1..6");
  Outcome o;
  o.csv = CsvTable({"check", "passed", "failed"});
  auto row = [&](const std::string& name, const adelman::TrialCount& t) {
    o.json["checks"][name] = trial_json(t);
    o.csv.row({name, std::to_string(t.passed), std::to_string(t.failed)});
    o.passed = o.passed && t.failed == 0;
  };
  o.json["seed"] = c.seed;
  o.json["trials"] = trials;
  o.json["maxDim"] = maxDim;

  const auto cong = adelman::congruence_checks(trials, c.seed, maxDim);
  row("reflexive", cong.reflexive);
  row("symmetric", cong.symmetric);
  row("transitive", cong.transitive);
  row("preComposition", cong.preComposition);
  row("postComposition", cong.postComposition);

  const std::string path = fixture_path(c, "adelman_interpretation.json");
  if (c.refreeze) write_json_file(path, adelman::interpretation_json(adelman::resolve_interpretation(100, 1), 1));
  const auto fixture = heisenberg::load_json(path);
  const auto frozen = adelman::reading_from_name(fixture.at("kernel").get<std::string>());
  if (!frozen) throw VerificationError("interpretation fixture names an unknown kernel reading");
  const auto resolved = adelman::resolve_interpretation(trials, c.seed, maxDim);
  o.json["interpretation"] = adelman::interpretation_json(resolved, c.seed);
  o.json["interpretation"]["matchesFixture"] = resolved.chosen == frozen;
  o.passed = o.passed && resolved.chosen == frozen;
  o.csv.row({"interpretation-stable", resolved.chosen == frozen ? "1" : "0", resolved.chosen == frozen ? "0" : "1"});

  row("universalProperty", adelman::universal_property_trials(trials, c.seed, *frozen, maxDim));

  // limits of identity and zero morphisms
  adelman::TrialCount limits;
  std::mt19937_64 rng(derive_seed(c.seed, 0xadu));
  for (int t = 0; t < 10; ++t) {
    const auto X = adelman::random_object(rng, maxDim);
    const auto id = adelman::TripleMorphism::identity(X);
    const auto zero = adelman::TripleMorphism::zero(X, X);
    const bool ok = adelman::zero_equivalent(adelman::kernel(id, *frozen).object) &&
                    adelman::zero_equivalent(adelman::cokernel(id).object) &&
                    adelman::is_homotopy_equivalence(adelman::kernel(zero, *frozen).map) &&
                    adelman::is_homotopy_equivalence(adelman::cokernel(zero).map);
    (ok ? limits.passed : limits.failed)++;
  }
  row("identityAndZeroLimits", limits);
  o.json["passed"] = o.passed;
  return o;
}

inline Outcome verify_pseudoadjoint(const RunConfig& c) {
  lambda_zero(c);
  const int n = nonneg(c.n, "n");
  const int margin = c.margin.value_or(8);
  if (margin < 8) throw UsageError("--margin must be at least 8");
  const int depth = c.depth.value_or(margin + 12);
  if (depth <= margin) throw UsageError("--depth must exceed --margin");
  const auto sets = enright::index_sets(n, 0);

  struct Job {
    std::string name;
    int kind;  // 0 Verma, 1 T_r
    int weight;
  };
  std::vector<Job> jobs;
  for (int s : sets.I) jobs.push_back({"V_" + std::to_string(s), 0, s});
  if (!sets.in_I(0)) jobs.push_back({"V_0", 0, 0});
  for (int r : sets.Iprime) jobs.push_back({"T_" + std::to_string(r), 1, r});
  std::vector<enright::PseudoadjointReport> reps(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    const auto& j = jobs[i];
    const Rational c0(j.weight * (j.weight + 2));
    reps[i] = j.kind == 0 ? enright::pseudoadjoint_check(sl2::build_verma(j.weight, depth), c0, margin)
                          : enright::pseudoadjoint_check(sl2::build_Tr(j.weight, n, depth).module, c0, margin);
  });

  Outcome o;
  o.csv = CsvTable({"module", "c", "interiorSize", "residualZero", "bMinusCIsCasimir", "squareZero", "passed"});
  o.json["n"] = n;
  o.json["margin"] = margin;
  o.json["depth"] = depth;
  o.json["modules"] = ordered_json::array();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& r = reps[i];
    o.json["modules"].push_back(pseudoadjoint_json(jobs[i].name, r));
    o.csv.row({jobs[i].name, rat(r.c), std::to_string(r.interiorSize), yes(r.residualZero), yes(r.bMinusCIsCasimir),
               yes(r.squareZero), yes(r.passed())});
    o.passed = o.passed && r.passed();
  }
  o.json["passed"] = o.passed;
  return o;
}

inline Outcome report(const RunConfig& c) {
  lambda_zero(c);
  const int nMax = nonneg(c.nMax, "n-max");
  if (c.depth) {
    if (*c.depth < nMax + 2) throw UsageError("--depth must be at least n-max + 2");
  }
  std::vector<enright::EnrightReport> reps(static_cast<std::size_t>(nMax) + 1);
  parallel_for(reps.size(), [&](std::size_t i) {
    const int n = static_cast<int>(i);
    reps[i] = enright::enright_report(n, c.depth.value_or(enright::default_depth(n)));
  });

  Outcome o;
  o.csv = CsvTable({"n", "s", "summand", "p", "q", "m", "passed"});
  o.json["nMax"] = nMax;
  o.json["seed"] = c.seed;
  o.json["reports"] = ordered_json::array();
  std::size_t cases = 0, failures = 0;
  for (const auto& r : reps) {
    o.json["reports"].push_back(enright_report_json(r));
    cases += r.cases.size();
    failures += r.failures();
    for (const auto& k : r.cases)
      o.csv.row({std::to_string(r.n), std::to_string(k.s), k.projective ? "T" : "V", joined(k.p), joined(k.q),
                 k.m ? integer(*k.m) : "", yes(k.passed())});
  }
  o.json["summary"] = {{"casesRun", cases}, {"failures", failures}};
  o.passed = failures == 0;
  return o;
}

}  // namespace detail

inline Outcome execute(const RunConfig& c) {
  if (c.command == "decompose") return detail::decompose(c);
  if (c.command == "hwv") return detail::hwv(c);
  if (c.command == "projgen") return detail::projgen(c);
  if (c.command == "verify-hecke") return detail::verify_hecke(c);
  if (c.command == "verify-heisenberg") return detail::verify_heisenberg(c);
  if (c.command == "verify-adelman") return detail::verify_adelman(c);
  if (c.command == "verify-pseudoadjoint") return detail::verify_pseudoadjoint(c);
  if (c.command == "report") return detail::report(c);
  throw UsageError("unknown command '" + c.command + "'");
}

inline std::string render(const Outcome& o, Format f) { return f == Format::Json ? o.json.dump(2) + "\n" : o.csv.str(); }

/// Exit code: 0 all checks pass, 1 a verification failed, 2 usage error.
/// Usage errors are reported on err; the caller prints usage text.
inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  Outcome o;
  try {
    o = execute(c);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationError& e) {
    err << "verification error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  const std::string text = render(o, c.format);
  if (c.outputPath.empty()) {
    out << text;
  } else {
    std::ofstream file(c.outputPath, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << c.outputPath << "\n";
      return 1;
    }
    file << text;
  }
  return o.passed ? 0 : 1;
}

}  // namespace vermalab::cli
