#pragma once

#include "racah/catalog.hpp"
#include "racah/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace racah {

struct SweepConfig {
    bool family_E = true;
    bool family_O = true;
    std::vector<std::pair<int, int>> twists{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    int d_max = 9;
    int trials = 100;
    std::uint64_t seed = 0;
    long denominator_bound = 4; // random rationals: |num| <= 50, den <= bound
};

struct TrialRecord {
    int index = 0;
    std::string spec;
    bool skipped = false;
    std::vector<std::string> problems;
};

struct SweepSummary {
    int trials = 0;
    int passed = 0;
    int skipped = 0;
    std::vector<TrialRecord> failures;
};

/// Deterministic given the config: per-trial specs are drawn from one RNG
/// stream, trials are evaluated in order and each trial is pure.
/// The measure-zero theorem branches (zero twist parameter, the chain
/// condition for family O, the smallest d per family) are injected into
/// every run before the random trials.
SweepSummary run_sweep(const SweepConfig& cfg);

json sweep_summary_to_json(const SweepSummary& s);

} // namespace racah
