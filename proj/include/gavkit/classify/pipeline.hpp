#pragma once

// enumerate -> instantiate -> verify -> dedupe, per setting.

#include "gavkit/classify/enumerate.hpp"
#include "gavkit/classify/parallel.hpp"
#include "gavkit/classify/verify.hpp"

#include <vector>

namespace gavkit {

struct SettingRun {
  int setting = 0;
  std::vector<Params> enumerated;
  std::vector<Candidate> accepted;  // in tuple order
  std::vector<Rejection> rejected;
  EnumerationLog log;
};

struct ClassifyRun {
  long long iota = 0;
  std::vector<SettingRun> settings;
  std::vector<Candidate> all;  // accepted candidates of all settings, in order
  DedupeResult groups;
};

inline SettingRun run_setting(int id, long long iota, std::size_t jobs = 1) {
  SettingRun run;
  run.setting = id;
  run.enumerated = enumerate_setting(id, iota, &run.log);
  struct Outcome {
    std::optional<Candidate> cand;
    Rejection rej;
  };
  const BigInt target(iota);
  auto outs = parallel_map<Outcome>(run.enumerated.size(), jobs, [&](std::size_t k) {
    Outcome o;
    o.cand = check_tuple(id, run.enumerated[k], target, &o.rej);
    return o;
  });
  for (auto& o : outs) {
    if (o.cand) run.accepted.push_back(std::move(*o.cand));
    else run.rejected.push_back(std::move(o.rej));
  }
  return run;
}

inline ClassifyRun classify(long long iota, const std::vector<int>& settings, std::size_t jobs = 1) {
  ClassifyRun run;
  run.iota = iota;
  for (int id : settings) {
    run.settings.push_back(run_setting(id, iota, jobs));
    for (const auto& c : run.settings.back().accepted) run.all.push_back(c);
  }
  run.groups = dedupe(run.all);
  return run;
}

}  // namespace gavkit
