// Compares the serial and OpenMP elimination kernels on the matrices that
// dominate real workloads: graded ideal pieces of Fermat quotients.

#include <chrono>
#include <cstdio>
#include <random>

#include "hodge/cycles.hpp"
#include "hodge/linalg.hpp"

using namespace hodge;
using Clock = std::chrono::steady_clock;

namespace {

// Rows spanning the degree-e piece of the Jacobian ideal plus random
// rational combinations, as a raw AugRow matrix.
std::vector<AugRow> ideal_rows(const HypersurfaceSpec& spec, int e, std::mt19937& rng) {
    std::vector<Exponents> basis = monomial_basis(spec.nvars(), e);
    std::map<Exponents, int> index;
    for (size_t i = 0; i < basis.size(); ++i)
        index[basis[i]] = static_cast<int>(i);
    std::vector<AugRow> rows;
    std::vector<Exponents> mults =
        monomial_basis(spec.nvars(), e - (spec.d() - 1));
    for (const Polynomial& partial : spec.partials()) {
        for (const Exponents& m : mults) {
            Polynomial prod = Polynomial::monomial(spec.nvars(), m) * partial;
            AugRow row;
            for (const auto& [exp, coeff] : prod.terms())
                row.main.push_back({index.at(exp), coeff});
            std::sort(row.main.begin(), row.main.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            rows.push_back(std::move(row));
        }
    }
    // A few dense random rows to exercise fill-in.
    for (int k = 0; k < 8; ++k) {
        AugRow row;
        for (size_t i = 0; i < basis.size(); ++i) {
            long c = static_cast<long>(rng() % 7) - 3;
            if (c != 0)
                row.main.push_back({static_cast<int>(i), Cyclo(rat(c, 1 + (k % 3)))});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

double time_once(const std::vector<AugRow>& rows, bool parallel, long* rank) {
    auto t0 = Clock::now();
    RrefResult r = rref(rows, parallel);
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    *rank = r.rank();
    return dt;
}

} // namespace

int main() {
    std::mt19937 rng(987654u);
    std::printf("%-28s %8s %10s %10s %8s\n", "matrix", "rows", "serial(s)", "openmp(s)",
                "speedup");
    for (auto [nvars, d, e] : {std::tuple<long, int, int>{4, 5, 8},
                               {4, 6, 10},
                               {6, 4, 7},
                               {6, 5, 8}}) {
        auto spec = make_spec(fermat_form(nvars, d));
        std::vector<AugRow> rows = ideal_rows(*spec, e, rng);
        long rank_s = 0, rank_p = 0;
        double ts = time_once(rows, false, &rank_s);
        double tp = time_once(rows, true, &rank_p);
        if (rank_s != rank_p) {
            std::printf("rank mismatch: serial %ld vs parallel %ld\n", rank_s, rank_p);
            return 1;
        }
        char label[64];
        std::snprintf(label, sizeof label, "nvars=%ld d=%d degree=%d", nvars, d, e);
        std::printf("%-28s %8zu %10.3f %10.3f %7.2fx\n", label, rows.size(), ts, tp,
                    ts / tp);
    }
    return 0;
}
