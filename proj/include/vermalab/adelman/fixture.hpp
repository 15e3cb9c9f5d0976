#pragma once

#include <string>

#include "json.hpp"
#include "vermalab/adelman/limits.hpp"

namespace vermalab::adelman {

using ordered_json = nlohmann::ordered_json;

inline const char* cokernel_reading_name() {
  return "B'+A -> B+A'' -> B''+A''; gamma=(b' alpha; 0 -a), rho=(b alpha''; 0 -1)";
}

inline ordered_json interpretation_json(const InterpretationResult& r, std::uint64_t seed) {
  ordered_json doc;
  doc["seed"] = seed;
  doc["trials"] = r.trials;
  doc["kernel"] = r.chosen ? reading_name(*r.chosen) : "unresolved";
  doc["cokernel"] = cokernel_reading_name();
  doc["readings"] = ordered_json::array();
  for (const auto& k : r.kernelTrials)
    doc["readings"].push_back({{"reading", reading_name(k.reading)},
                               {"passed", k.trials.passed},
                               {"failed", k.trials.failed},
                               {"equivalentToChosen", k.equivalentToChosen}});
  doc["cokernelTrials"] = {{"passed", r.cokernelTrials.passed}, {"failed", r.cokernelTrials.failed}};
  return doc;
}

}  // namespace vermalab::adelman
