#pragma once

#include <string>
#include <vector>

#include "momentum/config.hpp"

namespace momentum::verify {

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = true;
};

struct Report {
    std::vector<Check> checks;
    bool paper_values_checked = false;  // false when the grid diverges from defaults
    bool all_pass = true;
};

// Recomputes the structural facts from the config: the spawner saturation
// analysis (grid size, candidate split, maximum independent set via both the
// closed form and exhaustive search, saturation threshold), the per-segment
// scan budget (rows, worst-case rays, overlap query count, segments per
// tile), and the agent-window ordering. Against default parameters the
// stated reference values are asserted exactly; otherwise the recomputed
// bounds are reported and the reference equalities are skipped with a notice.
Report verify_structure(const RunConfig& cfg);

std::string render(const Report& report);

// Exhaustive maximum independent set over candidate cells of a path grid
// (adjacency = consecutive cell indices). Intended as the second route next
// to the closed form; capped at 30 candidates.
int exhaustive_path_mis(const std::vector<int>& candidate_cells);

} // namespace momentum::verify
