#ifndef HODGE_LINALG_HPP
#define HODGE_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hodge/cyclo.hpp"

namespace hodge {

// Sparse vector over the cyclotomic field: (index, nonzero value) pairs,
// strictly increasing indices.
using SparseVec = std::vector<std::pair<int, Cyclo>>;

Cyclo sv_get(const SparseVec& v, int i);
SparseVec sv_scale(const Cyclo& c, const SparseVec& v);
// a + c*b
SparseVec sv_add_scaled(const SparseVec& a, const Cyclo& c, const SparseVec& b);
bool sv_is_zero(const SparseVec& v);
int sv_leading_index(const SparseVec& v); // -1 when zero

// A row of an augmented system: `main` is the part that drives pivoting,
// `aux` is carried along through every row operation (used for quotient
// tracking and for right-hand sides).
struct AugRow {
    SparseVec main;
    SparseVec aux;
};

// Reduced row echelon form of the `main` parts. Output rows are nonzero,
// sorted by pivot column, pivots normalized to 1 and eliminated from every
// other row; `aux` parts receive the same row operations. The main-part
// result is the canonical RREF of the input row space, identical for the
// serial and the parallel path.
struct RrefResult {
    std::vector<AugRow> rows;
    std::vector<int> pivots; // pivot column of rows[i]
    long rank() const { return static_cast<long>(rows.size()); }
    bool has_pivot(int col) const;
};

RrefResult rref_serial(std::vector<AugRow> rows);
RrefResult rref_parallel(std::vector<AugRow> rows);
RrefResult rref(std::vector<AugRow> rows, bool parallel = false);

// Reduces a row against an RREF, applying matching operations to aux.
AugRow reduce_row(const RrefResult& r, AugRow row);

// Basis of the right null space {x : A x = 0} of the matrix whose rows are
// given; one basis vector per non-pivot column, canonical.
std::vector<SparseVec> null_space(const std::vector<SparseVec>& rows, int ncols);

// Solves A x = b (dense b over the rows); empty when inconsistent; free
// variables are set to zero.
std::optional<std::vector<Cyclo>> solve(const std::vector<SparseVec>& rows, int ncols,
                                        const std::vector<Cyclo>& rhs);

} // namespace hodge

#endif
