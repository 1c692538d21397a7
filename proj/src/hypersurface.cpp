#include "hodge/hypersurface.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hodge/errors.hpp"

namespace hodge {

BlockRing::BlockRing(Polynomial f, int d)
    : f_(std::move(f)), k_(f_.nvars()), d_(d), socle_((d - 2) * static_cast<int>(k_)) {
    for (int i = 0; i < k_; ++i) partials_.push_back(partial_derivative(f_, i));
    certified_ = !f_.is_zero() && f_.degree() == d_ && quotient_dim(socle_) == 1 &&
                 quotient_dim(socle_ + 1) == 0;
}

const BlockRing::Piece& BlockRing::piece(int e) const {
    std::lock_guard<std::mutex> lock(mtx_);
    auto it = pieces_.find(e);
    if (it != pieces_.end()) return it->second;

    Piece p;
    p.basis = monomial_basis(k_, e);
    for (size_t i = 0; i < p.basis.size(); ++i) p.index.emplace(p.basis[i], static_cast<int>(i));
    std::vector<AugRow> rows;
    if (e >= d_ - 1) {
        p.multipliers = monomial_basis(k_, e - (d_ - 1));
        long nm = static_cast<long>(p.multipliers.size());
        for (long i = 0; i < k_; ++i) {
            if (partials_[i].is_zero()) continue;
            for (long m = 0; m < nm; ++m) {
                Polynomial prod =
                    Polynomial::monomial(k_, p.multipliers[m]) * partials_[i];
                AugRow row;
                for (const auto& [exp, c] : prod.terms())
                    row.main.emplace_back(p.index.at(exp), c);
                std::sort(row.main.begin(), row.main.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                row.aux.emplace_back(static_cast<int>(i * nm + m), Cyclo(1));
                rows.push_back(std::move(row));
            }
        }
    }
    p.jac = rref_serial(std::move(rows));
    for (size_t col = 0; col < p.basis.size(); ++col)
        if (!p.jac.has_pivot(static_cast<int>(col))) p.std_monos.push_back(p.basis[col]);
    return pieces_.emplace(e, std::move(p)).first->second;
}

long BlockRing::quotient_dim(int e) const {
    if (e < 0) return 0;
    return static_cast<long>(piece(e).std_monos.size());
}

const std::vector<Exponents>& BlockRing::std_monomials(int e) const {
    return piece(e).std_monos;
}

const BlockRing::MonoNF& BlockRing::mono_nf(const Exponents& a) const {
    {
        std::lock_guard<std::mutex> lock(mtx_);
        auto it = nf_cache_.find(a);
        if (it != nf_cache_.end()) return it->second;
    }
    int e = mono_degree(a);
    const Piece& p = piece(e);
    AugRow row;
    row.main.emplace_back(p.index.at(a), Cyclo(1));
    AugRow red = reduce_row(p.jac, std::move(row));

    MonoNF nf{Polynomial(k_), std::vector<Polynomial>(k_, Polynomial(k_))};
    std::map<Exponents, Cyclo> resid;
    for (const auto& [col, c] : red.main) resid.emplace(p.basis[col], c);
    nf.residual = Polynomial(k_, std::move(resid));
    // x^a - residual = -aux expressed in multiplier*partial products.
    long nm = static_cast<long>(p.multipliers.size());
    for (const auto& [idx, c] : red.aux) {
        long i = idx / nm;
        long m = idx % nm;
        nf.quotients[i] += Polynomial::monomial(k_, p.multipliers[m], -c);
    }
    std::lock_guard<std::mutex> lock(mtx_);
    return nf_cache_.emplace(a, std::move(nf)).first->second;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

HypersurfaceSpec::HypersurfaceSpec(Polynomial F)
    : nvars_(F.nvars()), d_(F.degree()), F_(std::move(F)) {
    if (F_.is_zero() || d_ < 2) throw DegreeMismatch("form must be homogeneous of degree >= 2");
    if (nvars_ % 2 != 0) throw ArityMismatch("even-dimensional hypersurfaces need an even variable count");
    for (long i = 0; i < nvars_; ++i) partials_.push_back(partial_derivative(F_, i));

    // Partition the variables: two variables share a block when some term
    // of F involves both.
    UnionFind uf(static_cast<int>(nvars_));
    for (const auto& [e, c] : F_.terms()) {
        int first = -1;
        for (long i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (first == -1)
                first = static_cast<int>(i);
            else
                uf.unite(first, static_cast<int>(i));
        }
    }
    std::map<int, std::vector<int>> groups;
    for (long i = 0; i < nvars_; ++i) groups[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));
    for (auto& [root, vars] : groups) blocks_.push_back(std::move(vars));
    std::sort(blocks_.begin(), blocks_.end());

    smooth_ = true;
    for (const auto& vars : blocks_) {
        // Collect the terms of F supported in this block, in local variables.
        std::map<Exponents, Cyclo> terms;
        for (const auto& [e, c] : F_.terms()) {
            bool inside = true;
            for (long i = 0; i < nvars_ && inside; ++i)
                if (e[i] > 0 &&
                    !std::binary_search(vars.begin(), vars.end(), static_cast<int>(i)))
                    inside = false;
            if (!inside) continue;
            Exponents local(vars.size(), 0);
            for (size_t j = 0; j < vars.size(); ++j) local[j] = e[vars[j]];
            terms.emplace(std::move(local), c);
        }
        rings_.push_back(std::make_unique<BlockRing>(
            Polynomial(static_cast<long>(vars.size()), std::move(terms)), d_));
        if (!rings_.back()->certified()) smooth_ = false;
    }
}

void HypersurfaceSpec::require_smooth() const {
    if (!smooth_) throw SmoothnessFailure("hypersurface is not certified smooth");
}

Polynomial HypersurfaceSpec::globalize(const Polynomial& local, size_t b) const {
    const auto& vars = blocks_[b];
    std::map<Exponents, Cyclo> terms;
    for (const auto& [e, c] : local.terms()) {
        Exponents ge(nvars_, 0);
        for (size_t j = 0; j < vars.size(); ++j) ge[vars[j]] = e[j];
        terms.emplace(std::move(ge), c);
    }
    return Polynomial(nvars_, std::move(terms));
}

std::vector<Exponents> HypersurfaceSpec::split(const Exponents& e) const {
    std::vector<Exponents> parts;
    parts.reserve(blocks_.size());
    for (const auto& vars : blocks_) {
        Exponents local(vars.size(), 0);
        for (size_t j = 0; j < vars.size(); ++j) local[j] = e[vars[j]];
        parts.push_back(std::move(local));
    }
    return parts;
}

Exponents HypersurfaceSpec::merge(const std::vector<Exponents>& parts) const {
    Exponents e(nvars_, 0);
    for (size_t b = 0; b < blocks_.size(); ++b)
        for (size_t j = 0; j < blocks_[b].size(); ++j) e[blocks_[b][j]] = parts[b][j];
    return e;
}

const HypersurfaceSpec::StdPiece& HypersurfaceSpec::std_piece(int e) const {
    {
        std::lock_guard<std::mutex> lock(mtx_);
        auto it = std_cache_.find(e);
        if (it != std_cache_.end()) return it->second;
    }
    // All products of blockwise standard monomials with degrees summing to
    // e, found depth-first over the blocks.
    std::vector<Exponents> monos;
    std::vector<Exponents> cur(blocks_.size());
    std::function<void(size_t, int)> walk = [&](size_t b, int remaining) {
        if (b == blocks_.size()) {
            if (remaining == 0) monos.push_back(merge(cur));
            return;
        }
        for (int eb = 0; eb <= remaining; ++eb) {
            for (const auto& m : rings_[b]->std_monomials(eb)) {
                cur[b] = m;
                walk(b + 1, remaining - eb);
            }
        }
    };
    walk(0, e);
    std::sort(monos.begin(), monos.end(), [](const Exponents& a, const Exponents& b) {
        return mono_greater(a, b, MonomialOrder::Grevlex);
    });
    StdPiece sp;
    sp.monos = std::move(monos);
    for (size_t i = 0; i < sp.monos.size(); ++i) sp.index.emplace(sp.monos[i], static_cast<int>(i));
    std::lock_guard<std::mutex> lock(mtx_);
    return std_cache_.emplace(e, std::move(sp)).first->second;
}

long HypersurfaceSpec::quotient_dim(int e) const {
    if (e < 0) return 0;
    return static_cast<long>(std_piece(e).monos.size());
}

const std::vector<Exponents>& HypersurfaceSpec::std_monomials(int e) const {
    return std_piece(e).monos;
}

int HypersurfaceSpec::std_index(int e, const Exponents& m) const {
    const StdPiece& sp = std_piece(e);
    auto it = sp.index.find(m);
    return it == sp.index.end() ? -1 : it->second;
}

SparseVec HypersurfaceSpec::nf(const Polynomial& A) const {
    if (A.is_zero()) return {};
    int e = A.degree();
    const StdPiece& sp = std_piece(e);
    std::map<int, Cyclo> acc;
    for (const auto& [exp, c] : A.terms()) {
        auto parts = split(exp);
        // Tensor the per-block residuals: list of (per-block monomial, coeff).
        std::vector<std::pair<std::vector<Exponents>, Cyclo>> partial = {
            {std::vector<Exponents>(blocks_.size()), c}};
        bool dead = false;
        for (size_t b = 0; b < blocks_.size() && !dead; ++b) {
            const Polynomial& res = rings_[b]->mono_nf(parts[b]).residual;
            if (res.is_zero()) {
                dead = true;
                break;
            }
            std::vector<std::pair<std::vector<Exponents>, Cyclo>> next;
            for (const auto& [mlist, coeff] : partial) {
                for (const auto& [bm, bc] : res.terms()) {
                    auto nl = mlist;
                    nl[b] = bm;
                    next.emplace_back(std::move(nl), coeff * bc);
                }
            }
            partial = std::move(next);
        }
        if (dead) continue;
        for (const auto& [mlist, coeff] : partial) {
            int idx = sp.index.at(merge(mlist));
            auto [it, inserted] = acc.emplace(idx, coeff);
            if (!inserted) it->second += coeff;
        }
    }
    SparseVec out;
    for (const auto& [i, c] : acc)
        if (!c.is_zero()) out.emplace_back(i, c);
    return out;
}

HypersurfaceSpec::NfQ HypersurfaceSpec::nf_with_quotients(const Polynomial& A) const {
    NfQ result{{}, std::vector<Polynomial>(nvars_, Polynomial(nvars_))};
    if (A.is_zero()) return result;
    int e = A.degree();
    const StdPiece& sp = std_piece(e);
    std::map<int, Cyclo> acc;
    for (const auto& [exp, c] : A.terms()) {
        auto parts = split(exp);
        // Telescoping over blocks:
        //   x^A = prod_b x^{a_b}
        //       = prod_b N_b + sum_b (prod_{b'<b} N_{b'}) K_b (prod_{b'>b} x^{a_{b'}})
        // where x^{a_b} = N_b + K_b, K_b = sum_i Q_i^b dF/dx_i.
        Polynomial prefix = Polynomial::constant(nvars_, c);
        for (size_t b = 0; b < blocks_.size(); ++b) {
            if (prefix.is_zero()) break;
            const auto& bnf = rings_[b]->mono_nf(parts[b]);
            // Suffix: untouched later block factors, as one global monomial.
            Exponents suffix(nvars_, 0);
            for (size_t b2 = b + 1; b2 < blocks_.size(); ++b2)
                for (size_t j = 0; j < blocks_[b2].size(); ++j)
                    suffix[blocks_[b2][j]] = parts[b2][j];
            Polynomial suffix_poly = Polynomial::monomial(nvars_, suffix);
            for (size_t j = 0; j < blocks_[b].size(); ++j) {
                const Polynomial& q = bnf.quotients[j];
                if (q.is_zero()) continue;
                Polynomial qg = globalize(q, b);
                result.quotients[blocks_[b][j]] += prefix * qg * suffix_poly;
            }
            prefix = prefix * globalize(bnf.residual, b);
        }
        for (const auto& [m, coeff] : prefix.terms()) {
            int idx = sp.index.at(m);
            auto [it, inserted] = acc.emplace(idx, coeff);
            if (!inserted) it->second += coeff;
        }
    }
    for (const auto& [i, c] : acc)
        if (!c.is_zero()) result.coords.emplace_back(i, c);
    return result;
}

} // namespace hodge
