#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridgame/milp.hpp"
#include "gridgame/simplex.hpp"

namespace gridgame {

struct MilpLimits {
    std::int64_t node_cap = 100000;
    double time_cap_seconds = 0.0;  // 0 = unlimited (time caps are inherently non-deterministic)

    // When set, receives (nodes explored, incumbent objective) at every
    // incumbent improvement.
    std::vector<std::pair<std::int64_t, double>>* incumbent_trace = nullptr;
};

/// LP relaxation (binaries relaxed to [0,1]) solved to a basic optimum.
MilpSolution solve_lp(const MilpModel& model);

/// Same, exposing the final-basis dual bound and iteration count.
LpResult solve_lp_detailed(const MilpModel& model);

/// Proven-optimal branch & bound: best-first on (bound, node id), branching on
/// the most fractional binary with lowest-id tie break. LimitReached carries
/// the incumbent when one exists.
MilpSolution solve_milp(const MilpModel& model, const MilpLimits& limits = {});

/// Test oracle: enumerates every binary assignment (lexicographic, first
/// binary most significant) and solves the continuous LPs. Throws TooLarge
/// beyond 20 binaries.
MilpSolution brute_force_milp(const MilpModel& model);

/// Writes the model in the documented dump format. I/O errors only.
void export_external(const MilpModel& model, const std::string& path);

/// Optional cross-validation hook: when the named environment variable holds
/// an executable, runs `exe <model-dump> <solution-out>` and parses the
/// solution file ("<status>\n<objective>\n" then "var value" lines).
/// Returns nothing when the hook is not configured.
std::optional<MilpSolution> cross_check_external(
    const MilpModel& model, const std::string& env_var = "GRIDGAME_EXTERNAL_MILP_SOLVER");

}  // namespace gridgame
