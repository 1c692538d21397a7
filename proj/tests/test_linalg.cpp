#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "hodge/errors.hpp"
#include "hodge/linalg.hpp"

using namespace hodge;

namespace {

std::vector<SparseVec> random_matrix(std::mt19937& rng, int nrows, int ncols) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> keep(0, 2);
    std::vector<SparseVec> rows(nrows);
    for (auto& r : rows)
        for (int j = 0; j < ncols; ++j) {
            int c = coeff(rng);
            if (c != 0 && keep(rng) == 0) r.emplace_back(j, Cyclo(c));
        }
    return rows;
}

bool same_rref(const RrefResult& a, const RrefResult& b) {
    if (a.pivots != b.pivots) return false;
    for (size_t i = 0; i < a.rows.size(); ++i)
        if (a.rows[i].main != b.rows[i].main) return false;
    return true;
}

Cyclo dot(const SparseVec& row, const SparseVec& x) {
    Cyclo acc(0);
    for (const auto& [i, c] : row) acc += c * sv_get(x, i);
    return acc;
}

} // namespace

TEST_CASE("sparse vector primitives") {
    SparseVec a = {{0, Cyclo(1)}, {3, Cyclo(2)}};
    SparseVec b = {{1, Cyclo(5)}, {3, Cyclo(-1)}};
    CHECK(sv_get(a, 3) == Cyclo(2));
    CHECK(sv_get(a, 2).is_zero());
    SparseVec s = sv_add_scaled(a, Cyclo(2), b);
    CHECK(s == SparseVec{{0, Cyclo(1)}, {1, Cyclo(10)}});
    CHECK(sv_leading_index(s) == 0);
    CHECK(sv_leading_index({}) == -1);
    CHECK(sv_scale(Cyclo(0), a).empty());
}

TEST_CASE("rref on a frozen matrix") {
    // [1 2 0; 2 4 1; 0 0 3] -> rank 2? No: rows 1,2 dependent in cols 0,1
    // but row 2 adds col 2. RREF = [1 2 0; 0 0 1], rank 2, pivots {0, 2}.
    std::vector<AugRow> rows = {
        {{{0, Cyclo(1)}, {1, Cyclo(2)}}, {}},
        {{{0, Cyclo(2)}, {1, Cyclo(4)}, {2, Cyclo(1)}}, {}},
        {{{2, Cyclo(3)}}, {}},
    };
    RrefResult r = rref_serial(rows);
    CHECK(r.rank() == 2);
    CHECK(r.pivots == std::vector<int>{0, 2});
    CHECK(r.rows[0].main == SparseVec{{0, Cyclo(1)}, {1, Cyclo(2)}});
    CHECK(r.rows[1].main == SparseVec{{2, Cyclo(1)}});
    CHECK(r.has_pivot(2));
    CHECK(!r.has_pivot(1));
}

TEST_CASE("serial and parallel paths produce the identical canonical form") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = random_matrix(rng, 12, 10);
        std::vector<AugRow> rows;
        for (auto& r : m) rows.push_back({r, {}});
        RrefResult a = rref_serial(rows);
        RrefResult b = rref_parallel(rows);
        CHECK(same_rref(a, b));
        // Canonical: invariant under row shuffles.
        std::shuffle(rows.begin(), rows.end(), rng);
        CHECK(same_rref(a, rref_serial(rows)));
    }
}

TEST_CASE("reduce_row reduces to zero exactly on the row space") {
    std::mt19937 rng(7);
    auto m = random_matrix(rng, 8, 8);
    std::vector<AugRow> rows;
    for (auto& r : m) rows.push_back({r, {}});
    RrefResult R = rref_serial(rows);
    // Random combinations of the original rows reduce to zero.
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        SparseVec combo;
        for (const auto& r : m) combo = sv_add_scaled(combo, Cyclo(coeff(rng)), r);
        CHECK(reduce_row(R, {combo, {}}).main.empty());
    }
}

TEST_CASE("null space") {
    std::mt19937 rng(1001);
    for (int trial = 0; trial < 15; ++trial) {
        int ncols = 9;
        auto m = random_matrix(rng, 6, ncols);
        auto kernel = null_space(m, ncols);
        std::vector<AugRow> rows;
        for (auto& r : m) rows.push_back({r, {}});
        long rank = rref_serial(rows).rank();
        CHECK(static_cast<long>(kernel.size()) == ncols - rank);
        for (const auto& x : kernel)
            for (const auto& row : m) CHECK(dot(row, x).is_zero());
        // Kernel vectors are independent: each has a 1 at a distinct free column.
        std::vector<AugRow> krows;
        for (auto& k : kernel) krows.push_back({k, {}});
        CHECK(rref_serial(krows).rank() == static_cast<long>(kernel.size()));
    }
}

TEST_CASE("solve") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 15; ++trial) {
        int ncols = 7;
        auto m = random_matrix(rng, 7, ncols);
        // Consistent system: rhs = A * x0 for a random dense x0.
        std::uniform_int_distribution<int> coeff(-3, 3);
        SparseVec x0;
        for (int j = 0; j < ncols; ++j) {
            int c = coeff(rng);
            if (c != 0) x0.emplace_back(j, Cyclo(c));
        }
        std::vector<Cyclo> rhs;
        for (const auto& r : m) rhs.push_back(dot(r, x0));
        auto sol = solve(m, ncols, rhs);
        REQUIRE(sol.has_value());
        for (size_t i = 0; i < m.size(); ++i) {
            Cyclo acc(0);
            for (const auto& [j, c] : m[i]) acc += c * (*sol)[j];
            CHECK(acc == rhs[i]);
        }
    }
    // Inconsistent system.
    std::vector<SparseVec> m = {{{0, Cyclo(1)}}, {{0, Cyclo(1)}}};
    CHECK(!solve(m, 1, {Cyclo(1), Cyclo(2)}).has_value());
    CHECK_THROWS_AS(solve(m, 1, {Cyclo(1)}), ArityMismatch);
}

TEST_CASE("aux parts follow row operations") {
    // Track the identity in aux; then aux rows express the RREF rows as
    // combinations of the input rows.
    std::mt19937 rng(31);
    auto m = random_matrix(rng, 6, 6);
    std::vector<AugRow> rows;
    for (size_t i = 0; i < m.size(); ++i)
        rows.push_back({m[i], {{static_cast<int>(i), Cyclo(1)}}});
    RrefResult R = rref_serial(rows);
    for (const auto& row : R.rows) {
        SparseVec rebuilt;
        for (const auto& [i, c] : row.aux) rebuilt = sv_add_scaled(rebuilt, c, m[i]);
        CHECK(rebuilt == row.main);
    }
}
