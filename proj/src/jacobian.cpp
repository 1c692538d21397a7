#include "hodge/jacobian.hpp"

#include <algorithm>
#include <map>

#include "hodge/errors.hpp"

namespace hodge {

bool GradedSubspace::operator==(const GradedSubspace& o) const {
    if (degree != o.degree || ambient_dim != o.ambient_dim || order != o.order) return false;
    if (basis.pivots != o.basis.pivots) return false;
    for (size_t i = 0; i < basis.rows.size(); ++i)
        if (basis.rows[i].main != o.basis.rows[i].main) return false;
    return true;
}

bool GradedSubspace::contains(const GradedSubspace& o) const {
    if (degree != o.degree || ambient_dim != o.ambient_dim || order != o.order)
        throw DegreeMismatch("comparing graded pieces of different degrees");
    for (const auto& row : o.basis.rows)
        if (!reduce_row(basis, {row.main, {}}).main.empty()) return false;
    return true;
}

namespace {

// Coefficient row of a polynomial over the degree-(deg p) monomial basis.
SparseVec coeff_row(const Polynomial& p, const std::map<Exponents, int>& index) {
    SparseVec row;
    for (const auto& [e, c] : p.terms()) row.emplace_back(index.at(e), c);
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

std::map<Exponents, int> basis_index(const std::vector<Exponents>& basis) {
    std::map<Exponents, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
    return index;
}

// Rows of the map (coefficients of G at degree e) -> (coset coordinates of
// G*P), i.e. row j lists, per monomial column m, the j-th coset coordinate
// of nf(m*P). Its kernel is the colon piece; its rank is the Hilbert
// function value.
std::vector<SparseVec> multiplication_rows(const HypersurfaceSpec& spec, const Polynomial& P,
                                           const std::vector<Exponents>& basis) {
    int te = (basis.empty() ? 0 : mono_degree(basis.front())) + P.degree();
    std::vector<SparseVec> rows(spec.quotient_dim(te));
    for (size_t m = 0; m < basis.size(); ++m) {
        SparseVec v = spec.nf(Polynomial::monomial(spec.nvars(), basis[m]) * P);
        for (const auto& [j, c] : v) rows[j].emplace_back(static_cast<int>(m), c);
    }
    return rows;
}

void check_nonzero_class(const HypersurfaceSpec& spec, const Polynomial& P) {
    if (P.is_zero() || spec.nf(P).empty())
        throw ZeroClass("class of the cycle polynomial vanishes in the Jacobian quotient");
}

} // namespace

GradedSubspace ideal_piece(const std::vector<Polynomial>& gens, const HypersurfaceSpec& spec,
                           int e, MonomialOrder ord) {
    auto basis = monomial_basis(spec.nvars(), e, ord);
    auto index = basis_index(basis);
    std::vector<AugRow> rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.degree() > e) continue;
        for (const auto& m : monomial_basis(spec.nvars(), e - g.degree(), ord)) {
            rows.push_back({coeff_row(Polynomial::monomial(spec.nvars(), m) * g, index), {}});
        }
    }
    GradedSubspace out;
    out.degree = e;
    out.ambient_dim = static_cast<long>(basis.size());
    out.order = ord;
    out.basis = rref_serial(std::move(rows));
    return out;
}

bool smoothness_check(const HypersurfaceSpec& spec) { return spec.smooth(); }

GradedSubspace colon_piece(const HypersurfaceSpec& spec, const Polynomial& P, int e,
                           MonomialOrder ord) {
    spec.require_smooth();
    check_nonzero_class(spec, P);
    auto basis = monomial_basis(spec.nvars(), e, ord);
    auto rows = multiplication_rows(spec, P, basis);

    std::vector<AugRow> kernel;
    for (auto& v : null_space(rows, static_cast<int>(basis.size())))
        kernel.push_back({std::move(v), {}});
    GradedSubspace out;
    out.degree = e;
    out.ambient_dim = static_cast<long>(basis.size());
    out.order = ord;
    out.basis = rref_serial(std::move(kernel));
    return out;
}

std::vector<long> hilbert_function(const HypersurfaceSpec& spec, const Polynomial& P) {
    spec.require_smooth();
    check_nonzero_class(spec, P);
    int sigma = spec.socle_full() - P.degree();
    std::vector<long> hf;
    for (int e = 0; e <= sigma + 1; ++e) {
        auto basis = monomial_basis(spec.nvars(), e);
        auto rows = multiplication_rows(spec, P, basis);
        std::vector<AugRow> aug;
        for (auto& r : rows) aug.push_back({std::move(r), {}});
        hf.push_back(rref_serial(std::move(aug)).rank());
    }
    return hf;
}

GorensteinCertificate is_artinian_gorenstein(const HypersurfaceSpec& spec, const Polynomial& P) {
    GorensteinCertificate cert;
    cert.socle = spec.socle_full() - P.degree();
    cert.hf = hilbert_function(spec, P);
    int sigma = cert.socle;

    auto fail = [&](int degree, std::string reason) {
        cert.pass = false;
        cert.failing_degree = degree;
        cert.reason = std::move(reason);
        return cert;
    };

    if (cert.hf[sigma] != 1) return fail(sigma, "socle is not one-dimensional");
    if (cert.hf[sigma + 1] != 0) return fail(sigma + 1, "quotient is not Artinian at the socle bound");
    for (int i = 0; i <= sigma; ++i)
        if (cert.hf[i] != cert.hf[sigma - i])
            return fail(i, "Hilbert function is not symmetric");

    // Perfect pairing R_i x R_{sigma-i} -> R_sigma on coset bases.
    GradedSubspace top = colon_piece(spec, P, sigma);
    std::vector<Exponents> top_basis = monomial_basis(spec.nvars(), sigma);
    for (int i = 0; i <= sigma / 2; ++i) {
        GradedSubspace left = colon_piece(spec, P, i);
        GradedSubspace right = colon_piece(spec, P, sigma - i);
        auto left_basis = monomial_basis(spec.nvars(), i);
        auto right_basis = monomial_basis(spec.nvars(), sigma - i);
        std::vector<Exponents> lcoset, rcoset;
        for (size_t m = 0; m < left_basis.size(); ++m)
            if (!left.basis.has_pivot(static_cast<int>(m))) lcoset.push_back(left_basis[m]);
        for (size_t m = 0; m < right_basis.size(); ++m)
            if (!right.basis.has_pivot(static_cast<int>(m))) rcoset.push_back(right_basis[m]);
        auto top_index = basis_index(top_basis);
        // Position of the single coset coordinate at the socle.
        int socle_col = -1;
        for (size_t m = 0; m < top_basis.size(); ++m)
            if (!top.basis.has_pivot(static_cast<int>(m))) socle_col = static_cast<int>(m);

        std::vector<AugRow> pairing;
        for (const auto& a : lcoset) {
            SparseVec row;
            for (size_t bj = 0; bj < rcoset.size(); ++bj) {
                Exponents prod(spec.nvars());
                for (long v = 0; v < spec.nvars(); ++v) prod[v] = a[v] + rcoset[bj][v];
                AugRow reduced =
                    reduce_row(top.basis, {{{top_index.at(prod), Cyclo(1)}}, {}});
                Cyclo val = sv_get(reduced.main, socle_col);
                if (!val.is_zero()) row.emplace_back(static_cast<int>(bj), val);
            }
            pairing.push_back({std::move(row), {}});
        }
        if (rref_serial(std::move(pairing)).rank() != cert.hf[i])
            return fail(i, "multiplication pairing is degenerate");
    }
    cert.pass = true;
    return cert;
}

bool ideal_equal(const HypersurfaceSpec& spec, const Polynomial& P1, const Polynomial& P2) {
    spec.require_smooth();
    if (P1.degree() != P2.degree())
        throw DegreeMismatch("cycle polynomials of different degrees");
    check_nonzero_class(spec, P1);
    check_nonzero_class(spec, P2);

    // Route one: the classes are proportional.
    SparseVec v1 = spec.nf(P1), v2 = spec.nf(P2);
    bool proportional = v1.size() == v2.size();
    if (proportional) {
        Cyclo ratio = Cyclo(0);
        for (size_t i = 0; i < v1.size() && proportional; ++i) {
            if (v1[i].first != v2[i].first) {
                proportional = false;
                break;
            }
            Cyclo r = v2[i].second / v1[i].second;
            if (ratio.is_zero())
                ratio = r;
            else if (r != ratio)
                proportional = false;
        }
    }

    // Route two: all colon pieces agree up to the socle.
    int sigma = spec.socle_full() - P1.degree();
    bool piecewise = true;
    for (int e = 0; e <= sigma && piecewise; ++e)
        piecewise = (colon_piece(spec, P1, e) == colon_piece(spec, P2, e));

    if (proportional != piecewise)
        throw Error("colon-ideal equality routes disagree (internal error)");
    return piecewise;
}

bool membership(const HypersurfaceSpec& spec, const std::vector<Polynomial>& gens,
                const Polynomial& Q) {
    spec.require_smooth();
    if (Q.is_zero()) return true;
    int e = Q.degree();
    std::vector<AugRow> rows;
    for (const auto& g : gens) {
        if (g.is_zero() || g.degree() > e) continue;
        for (const auto& m : monomial_basis(spec.nvars(), e - g.degree())) {
            SparseVec v = spec.nf(Polynomial::monomial(spec.nvars(), m) * g);
            if (!v.empty()) rows.push_back({std::move(v), {}});
        }
    }
    RrefResult R = rref_serial(std::move(rows));
    return reduce_row(R, {spec.nf(Q), {}}).main.empty();
}

namespace {

// Laplace expansion along the first remaining row, memoized on the set of
// remaining columns.
Polynomial det_recursive(const std::vector<std::vector<Polynomial>>& M, int row, unsigned mask,
                         std::map<unsigned, Polynomial>& memo, long nvars) {
    int k = static_cast<int>(M.size());
    if (row == k) return Polynomial::constant(nvars, Cyclo(1));
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Polynomial acc(nvars);
    int sign = 1;
    for (int c = 0; c < k; ++c) {
        if (!(mask & (1u << c))) continue;
        if (!M[row][c].is_zero()) {
            Polynomial sub = det_recursive(M, row + 1, mask & ~(1u << c), memo, nvars);
            Polynomial term = M[row][c] * sub;
            acc += sign > 0 ? term : -term;
        }
        sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
}

} // namespace

Polynomial hessian_det(const HypersurfaceSpec& spec) {
    Polynomial result = Polynomial::constant(spec.nvars(), Cyclo(1));
    // The Hessian is block diagonal for the variable partition of F, so the
    // determinant is the product of the per-block determinants.
    for (size_t b = 0; b < spec.blocks().size(); ++b) {
        const auto& vars = spec.blocks()[b];
        int k = static_cast<int>(vars.size());
        std::vector<std::vector<Polynomial>> M(
            k, std::vector<Polynomial>(k, Polynomial(spec.nvars())));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                M[i][j] = partial_derivative(spec.partials()[vars[i]], vars[j]);
        std::map<unsigned, Polynomial> memo;
        Polynomial det = det_recursive(M, 0, (1u << k) - 1, memo, spec.nvars());
        result = result * det;
    }
    return result;
}

} // namespace hodge
