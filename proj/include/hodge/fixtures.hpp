#pragma once

#include <string>
#include <vector>

#include "hodge/cycles.hpp"
#include "hodge/qform.hpp"

namespace hodge {

// A fixture bundles the published values for one verification target and
// recomputes them exactly. Each labeled check must pass for the fixture to
// pass; `note` carries remarks (e.g. documented normalization corrections).

struct FixtureCheck {
    std::string label;
    bool pass = false;
};

struct FixtureResult {
    std::string id;
    std::vector<FixtureCheck> checks;
    std::string note;
    double seconds = 0.0;
    bool pass() const {
        if (checks.empty())
            return false;
        for (const FixtureCheck& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

// Known ids: ex-5.1, prop-5.3, prop-5.4, prop-5.5, thm-1.4, cor-6.2,
// sec7-example, thm-7.6, eq-4-tensor, eq-6-join, qff-props, gorenstein.
std::vector<std::string> fixture_ids();

// Runs one fixture; throws UnknownFixture for unknown ids.
FixtureResult run_fixture(const std::string& id);

// Single-point determinant witness check, exposed for CLI parameter flags.
FixtureResult run_thm14_single(int d, int alpha0, const Rat& r, const Rat& rc);

} // namespace hodge
