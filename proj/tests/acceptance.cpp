// Acceptance gate: each criterion below prints exactly one PASS/FAIL line.
// All comparisons are exact; the process exits nonzero when any line fails.

#include <cstdio>
#include <string>
#include <vector>

#include "hodge/fixtures.hpp"

using namespace hodge;

namespace {

int failures = 0;

void criterion(int number, const std::string& description,
               const std::vector<std::string>& fixture_ids_for_criterion) {
    bool pass = true;
    double seconds = 0.0;
    std::string detail;
    try {
        for (const std::string& id : fixture_ids_for_criterion) {
            FixtureResult res = run_fixture(id);
            seconds += res.seconds;
            if (!res.pass()) {
                pass = false;
                for (const FixtureCheck& c : res.checks)
                    if (!c.pass)
                        detail += " [" + res.id + ": " + c.label + "]";
            }
        }
    } catch (const std::exception& e) {
        pass = false;
        detail = std::string(" [exception: ") + e.what() + "]";
    }
    std::printf("%s criterion %d: %s (%.2fs)%s\n", pass ? "PASS" : "FAIL", number,
                description.c_str(), seconds, detail.c_str());
    std::fflush(stdout);
    if (!pass)
        ++failures;
}

} // namespace

int main() {
    criterion(1, "worked sextic point-basis expansion, exact rationals", {"sec7-example"});
    criterion(2, "point and join colon ideals match the binomial generators", {"ex-5.1"});
    criterion(3, "two-linear-cycle combinations: generators, Hilbert functions, "
                 "quadratic form vanishing",
              {"prop-5.3", "prop-5.4", "prop-5.5"});
    criterion(4, "determinant witness sweep: closed form, sign, zero iff r=rcheck",
              {"thm-1.4"});
    criterion(5, "Hilbert functions of randomized joins equal convolutions", {"cor-6.2"});
    criterion(6, "tensor decomposition of the colon quotient on fixture joins",
              {"eq-4-tensor"});
    criterion(7, "quadratic form property suite and join identity",
              {"qff-props", "eq-6-join"});
    criterion(8, "non-smoothness certificate with constant class 42", {"thm-7.6"});
    criterion(9, "Artinian Gorenstein certification with socle (d-2)(n/2+1)",
              {"gorenstein"});
    return failures == 0 ? 0 : 1;
}
