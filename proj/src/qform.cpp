#include "hodge/qform.hpp"

#include <algorithm>

#include "hodge/errors.hpp"
#include "hodge/jacobian.hpp"

namespace hodge {

KoszulDecomposition koszul_decompose(const HypersurfaceSpec& spec, const Polynomial& A) {
    if (A.is_zero())
        return {std::vector<Polynomial>(spec.nvars(), Polynomial(spec.nvars()))};
    HypersurfaceSpec::NfQ nfq = spec.nf_with_quotients(A);
    if (!sv_is_zero(nfq.coords))
        throw NotInIdeal();
    return {std::move(nfq.quotients)};
}

namespace {

// Canonical RREF of { nf(m * P) : m a monomial of degree e - deg P } over
// the standard-monomial coordinates of degree e.
RrefResult p_multiple_rows(const HypersurfaceSpec& spec, const Polynomial& P, int e) {
    std::vector<AugRow> rows;
    if (e >= P.degree())
        for (const Exponents& m : monomial_basis(spec.nvars(), e - P.degree()))
            rows.push_back(
                AugRow{spec.nf(Polynomial::monomial(spec.nvars(), m) * P), {}});
    return rref(std::move(rows));
}

// Canonical coordinates of E in (R^F/<P>) at deg E.
SparseVec quotient_class(const HypersurfaceSpec& spec, const Polynomial& P,
                         const Polynomial& E) {
    return reduce_row(p_multiple_rows(spec, P, E.degree()), AugRow{spec.nf(E), {}}).main;
}

} // namespace

QffValue qff_pair(const HypersurfaceSpec& spec, const Polynomial& P, const Polynomial& G,
                  const Polynomial& H) {
    KoszulDecomposition Q, R;
    try {
        Q = koszul_decompose(spec, G * P);
        R = koszul_decompose(spec, H * P);
    } catch (const NotInIdeal&) {
        throw NotInColonIdeal();
    }
    Polynomial E(spec.nvars());
    for (long i = 0; i < spec.nvars(); ++i) {
        E += R.components[i] * partial_derivative(G, static_cast<int>(i));
        E -= H * partial_derivative(Q.components[i], static_cast<int>(i));
    }
    const int degree = G.degree() + H.degree() + P.degree() - spec.d();
    if (E.is_zero())
        return QffValue{std::move(E), degree, {}, true};
    SparseVec coords = quotient_class(spec, P, E);
    const bool zero = sv_is_zero(coords);
    return QffValue{std::move(E), degree, std::move(coords), zero};
}

QffVanishing qff_vanishes_on_degree(const HypersurfaceSpec& spec, const Polynomial& P, int e,
                                    bool parallel) {
    GradedSubspace piece = colon_piece(spec, P, e);
    const auto monos = monomial_basis(spec.nvars(), e, piece.order);
    std::vector<Polynomial> basis;
    for (const AugRow& row : piece.basis.rows) {
        Polynomial g(spec.nvars());
        for (const auto& [col, c] : row.main)
            g += Polynomial::monomial(spec.nvars(), monos[col], c);
        basis.push_back(std::move(g));
    }
    std::vector<std::pair<int, int>> pairs;
    for (size_t a = 0; a < basis.size(); ++a)
        for (size_t b = a; b < basis.size(); ++b)
            pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));

    std::vector<char> fail(pairs.size(), 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long i = 0; i < static_cast<long>(pairs.size()); ++i) {
        const auto [a, b] = pairs[i];
        if (!qff_pair(spec, P, basis[a], basis[b]).is_zero)
            fail[i] = 1;
    }
    for (size_t i = 0; i < pairs.size(); ++i)
        if (fail[i])
            return QffVanishing{false,
                               std::make_pair(basis[pairs[i].first], basis[pairs[i].second])};
    return QffVanishing{true, std::nullopt};
}

bool qff_join_check(const HypersurfaceSpec& f, const HypersurfaceSpec& g, const Polynomial& P1,
                    const Polynomial& P2, const Polynomial& G1, const Polynomial& H1,
                    const Polynomial& G2, const Polynomial& H2, const Polynomial& A1,
                    const Polynomial& A2, const Polynomial& B1, const Polynomial& B2) {
    const long n1 = f.nvars(), n2 = g.nvars();
    const long nv = n1 + n2;
    const int off = static_cast<int>(n1);
    HypersurfaceSpec join(rename_variables(f.F(), 0, nv) + rename_variables(g.F(), off, nv));
    Polynomial PJ = rename_variables(P1, 0, nv) * rename_variables(P2, off, nv);

    Polynomial G = A1 * rename_variables(G1, 0, nv) + A2 * rename_variables(G2, off, nv);
    Polynomial H = B1 * rename_variables(H1, 0, nv) + B2 * rename_variables(H2, off, nv);
    QffValue left = qff_pair(join, PJ, G, H);

    QffValue q1 = qff_pair(f, P1, G1, H1);
    QffValue q2 = qff_pair(g, P2, G2, H2);
    Polynomial right = A1 * B1 * rename_variables(P2, off, nv) *
                           rename_variables(q1.representative, 0, nv) +
                       A2 * B2 * rename_variables(P1, 0, nv) *
                           rename_variables(q2.representative, off, nv);

    Polynomial diff = left.representative - right;
    if (diff.is_zero())
        return true;
    return sv_is_zero(quotient_class(join, PJ, diff));
}

Theorem4Report theorem4_witness(int d, int alpha0, const Rat& r, const Rat& rc) {
    if (d < 3)
        throw DegreeMismatch("requires degree at least 3");
    if (alpha0 % 2 == 0 || alpha0 < 3 || alpha0 > 2 * d - 1)
        throw Error("exponent must be odd and between 3 and 2d-1");
    if (r == 0 || rc == 0)
        throw Error("multiplicities must be nonzero");
    Theorem4Report rep;
    if (d == 3) {
        rep.degenerate = true;
        return rep;
    }
    const Cyclo z = Cyclo::zeta(2 * d);
    auto coef = [&](long e1) { return Cyclo(r) * z.pow(e1) + Cyclo(rc) * z.pow(e1 * alpha0); };

    HypersurfaceSpec f(fermat_form(2, d));
    Polynomial P(2);
    for (int j = 0; j <= d - 2; ++j)
        P += Polynomial::monomial(2, {d - 2 - j, j}, coef(j + 1));
    Polynomial G = Polynomial::monomial(2, {1, d - 3}, coef(1)) -
                   Polynomial::monomial(2, {0, d - 2}, coef(2));
    Polynomial Q1 = Polynomial::monomial(2, {d - 2, d - 4}, coef(1)) +
                    Polynomial::monomial(2, {d - 3, d - 3}, coef(2)) +
                    Polynomial::monomial(2, {d - 4, d - 2}, coef(3));
    Polynomial Q2 = Polynomial::monomial(2, {d - 2, d - 4}, coef(2)) +
                    Polynomial::monomial(2, {d - 3, d - 3}, coef(3)) +
                    Polynomial::monomial(2, {d - 4, d - 2}, coef(4));

    QffValue q = qff_pair(f, P, G, G);
    SparseVec c0 = f.nf(q.representative);
    SparseVec c1 = f.nf(Q1);
    SparseVec c2 = f.nf(Q2);
    // Columns over the three standard monomials of degree 2d-6.
    auto entry = [](const SparseVec& v, int i) { return sv_get(v, i); };
    Cyclo det = entry(c0, 0) * (entry(c1, 1) * entry(c2, 2) - entry(c1, 2) * entry(c2, 1)) -
                entry(c1, 0) * (entry(c0, 1) * entry(c2, 2) - entry(c0, 2) * entry(c2, 1)) +
                entry(c2, 0) * (entry(c0, 1) * entry(c1, 2) - entry(c0, 2) * entry(c1, 1));

    Cyclo delta = z.pow(alpha0) - z;
    Cyclo d3 = z.pow(3 * alpha0 + 3) * delta * delta * delta * Cyclo(r * r) *
               Cyclo(rc * rc) * Cyclo(r - rc);
    rep.published = d3;
    rep.reference = d3 * delta * delta * Cyclo(rat(1, d));
    rep.det = det;
    rep.nonzero = !det.is_zero();
    if (det == rep.reference && !det.is_zero())
        rep.sign = 1;
    else if (det == -rep.reference && !det.is_zero())
        rep.sign = -1;
    return rep;
}

Theorem6Report theorem6_check(
    const std::vector<std::shared_ptr<const HypersurfaceSpec>>& F_list,
    const std::vector<Cyclo>& c_list) {
    if (F_list.empty() || F_list.size() != c_list.size())
        throw ArityMismatch("one parameter per binary factor");
    const int d = F_list.front()->d();
    Theorem6Report rep;
    if (d == 2) {
        rep.verdict = Theorem6Verdict::Degenerate;
        return rep;
    }
    bool any_fake = false;
    for (size_t i = 0; i < F_list.size(); ++i) {
        const auto& spec = F_list[i];
        if (spec->nvars() != 2)
            throw ArityMismatch("factors must be binary forms");
        if (spec->d() != d)
            throw DegreeMismatch("factors must share the degree");
        const Cyclo& c = c_list[i];
        Theorem6Report::Factor fac;
        fac.expected = Cyclo(d) * evaluate(spec->F(), {c, Cyclo(1)});
        if (fac.expected.is_zero()) {
            // Honest point: nothing to certify for this factor.
            fac.fake = false;
            fac.certified = true;
        } else {
            fac.fake = true;
            any_fake = true;
            auto cr = c.as_rational();
            if (!cr)
                throw NonRationalRoots("non-root parameter must be rational");
            Polynomial P = fake_point_poly(spec, *cr).P;
            Polynomial L = Polynomial::variable(2, 0) - c * Polynomial::variable(2, 1);
            QffValue q = qff_pair(*spec, P, L, L);
            // The class is the constant d * F_i(c, 1).
            fac.constant_class = sv_get(q.class_coords, 0);
            const RrefResult mult = p_multiple_rows(*spec, P, 2 * d - 5);
            fac.multiplier_dim = spec->quotient_dim(2 * d - 5) - mult.rank();
            fac.certified =
                fac.constant_class == fac.expected && fac.multiplier_dim > 0;
        }
        rep.factors.push_back(std::move(fac));
    }
    rep.verdict = any_fake ? Theorem6Verdict::NotSmoothCertified
                           : Theorem6Verdict::SmoothExpected;
    return rep;
}

} // namespace hodge
