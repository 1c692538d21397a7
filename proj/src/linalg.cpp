#include "hodge/linalg.hpp"

#include <algorithm>

#include "hodge/errors.hpp"

namespace hodge {

Cyclo sv_get(const SparseVec& v, int i) {
    auto it = std::lower_bound(v.begin(), v.end(), i,
                               [](const auto& p, int idx) { return p.first < idx; });
    if (it != v.end() && it->first == i) return it->second;
    return Cyclo(0);
}

SparseVec sv_scale(const Cyclo& c, const SparseVec& v) {
    if (c.is_zero()) return {};
    SparseVec r;
    r.reserve(v.size());
    for (const auto& [i, x] : v) {
        Cyclo p = c * x;
        if (!p.is_zero()) r.emplace_back(i, std::move(p));
    }
    return r;
}

SparseVec sv_add_scaled(const SparseVec& a, const Cyclo& c, const SparseVec& b) {
    if (c.is_zero()) return a;
    SparseVec r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Cyclo v = c * b[j].second;
            if (!v.is_zero()) r.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            Cyclo v = a[i].second + c * b[j].second;
            if (!v.is_zero()) r.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return r;
}

bool sv_is_zero(const SparseVec& v) { return v.empty(); }

int sv_leading_index(const SparseVec& v) { return v.empty() ? -1 : v.front().first; }

bool RrefResult::has_pivot(int col) const {
    return std::binary_search(pivots.begin(), pivots.end(), col);
}

namespace {

RrefResult rref_impl(std::vector<AugRow> rows, bool parallel) {
    std::vector<AugRow> done;   // echelonized rows, pivot columns strictly tracked
    std::vector<int> pivots;

    while (true) {
        // Find the unprocessed row with the smallest leading column.
        int best = -1;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].main.empty()) continue;
            if (best == -1 ||
                rows[i].main.front().first < rows[best].main.front().first)
                best = static_cast<int>(i);
        }
        if (best == -1) break;

        AugRow pivot_row = std::move(rows[best]);
        rows.erase(rows.begin() + best);
        int col = pivot_row.main.front().first;
        Cyclo inv = pivot_row.main.front().second.inv();
        pivot_row.main = sv_scale(inv, pivot_row.main);
        pivot_row.aux = sv_scale(inv, pivot_row.aux);

        auto eliminate = [&](AugRow& r) {
            Cyclo c = sv_get(r.main, col);
            if (c.is_zero()) return;
            c = -c;
            r.main = sv_add_scaled(r.main, c, pivot_row.main);
            r.aux = sv_add_scaled(r.aux, c, pivot_row.aux);
        };

        if (parallel) {
#pragma omp parallel for schedule(dynamic)
            for (long i = 0; i < static_cast<long>(rows.size()); ++i) eliminate(rows[i]);
#pragma omp parallel for schedule(dynamic)
            for (long i = 0; i < static_cast<long>(done.size()); ++i) eliminate(done[i]);
        } else {
            for (auto& r : rows) eliminate(r);
            for (auto& r : done) eliminate(r);
        }

        done.push_back(std::move(pivot_row));
        pivots.push_back(col);
    }

    // Sort by pivot column for the canonical presentation.
    std::vector<size_t> order(done.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return pivots[a] < pivots[b]; });
    RrefResult res;
    res.rows.reserve(done.size());
    res.pivots.reserve(done.size());
    for (size_t i : order) {
        res.rows.push_back(std::move(done[i]));
        res.pivots.push_back(pivots[i]);
    }
    return res;
}

} // namespace

RrefResult rref_serial(std::vector<AugRow> rows) { return rref_impl(std::move(rows), false); }

RrefResult rref_parallel(std::vector<AugRow> rows) { return rref_impl(std::move(rows), true); }

RrefResult rref(std::vector<AugRow> rows, bool parallel) {
    return rref_impl(std::move(rows), parallel);
}

AugRow reduce_row(const RrefResult& r, AugRow row) {
    for (size_t i = 0; i < r.rows.size(); ++i) {
        Cyclo c = sv_get(row.main, r.pivots[i]);
        if (c.is_zero()) continue;
        c = -c;
        row.main = sv_add_scaled(row.main, c, r.rows[i].main);
        row.aux = sv_add_scaled(row.aux, c, r.rows[i].aux);
    }
    return row;
}

std::vector<SparseVec> null_space(const std::vector<SparseVec>& rows, int ncols) {
    std::vector<AugRow> aug;
    aug.reserve(rows.size());
    for (const auto& r : rows) aug.push_back({r, {}});
    RrefResult R = rref_serial(std::move(aug));

    std::vector<SparseVec> basis;
    for (int col = 0; col < ncols; ++col) {
        if (R.has_pivot(col)) continue;
        // Kernel vector: 1 at the free column, -entry at each pivot column.
        SparseVec v;
        for (size_t i = 0; i < R.rows.size(); ++i) {
            Cyclo c = sv_get(R.rows[i].main, col);
            if (!c.is_zero()) v.emplace_back(R.pivots[i], -c);
        }
        v.emplace_back(col, Cyclo(1));
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Cyclo>> solve(const std::vector<SparseVec>& rows, int ncols,
                                        const std::vector<Cyclo>& rhs) {
    if (rows.size() != rhs.size()) throw ArityMismatch("right-hand side length differs");
    std::vector<AugRow> aug;
    aug.reserve(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        AugRow r{rows[i], {}};
        if (!rhs[i].is_zero()) r.aux.emplace_back(0, rhs[i]);
        aug.push_back(std::move(r));
    }
    RrefResult R = rref_serial(std::move(aug));
    std::vector<Cyclo> x(ncols, Cyclo(0));
    for (size_t i = 0; i < R.rows.size(); ++i) x[R.pivots[i]] = sv_get(R.rows[i].aux, 0);
    // Rows that vanished in main but kept a nonzero aux mark inconsistency;
    // they were dropped by rref, so re-check by substitution.
    for (size_t i = 0; i < rows.size(); ++i) {
        Cyclo acc(0);
        for (const auto& [j, c] : rows[i]) acc += c * x[j];
        if (acc != rhs[i]) return std::nullopt;
    }
    return x;
}

} // namespace hodge
