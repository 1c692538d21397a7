#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hodge/errors.hpp"
#include "hodge/jacobian.hpp"

using namespace hodge;

namespace {

Polynomial x(long nvars, int i) { return Polynomial::variable(nvars, i); }

Polynomial fermat(long nvars, int d) {
    Polynomial F(nvars);
    for (int i = 0; i < nvars; ++i) F += poly_pow(x(nvars, i), d);
    return F;
}

// Degree-(d-2) polynomial cutting out the point (zeta_{2d} : 1) on the
// binary Fermat x0^d + x1^d: the exact quotient
// d*zeta*(x0^{d-1} - (zeta*x1)^{d-1}) / (x0 - zeta*x1).
Polynomial binary_point_poly(int d) {
    Cyclo z = zeta_pow(2 * d, 1);
    Polynomial num =
        Cyclo(d) * z * (poly_pow(x(2, 0), d - 1) - z.pow(d - 1) * poly_pow(x(2, 1), d - 1));
    return divide_exact(num, x(2, 0) - z * x(2, 1));
}

// Coefficients of ((1 - t^{d-1})/(1 - t))^nvars, the Hilbert series of the
// monomial complete intersection <x_i^{d-1}>.
std::vector<long> fermat_quotient_series(long nvars, int d) {
    UniPoly factor(d - 1, Rat(1)); // 1 + t + ... + t^{d-2}
    UniPoly series_poly{Rat(1)};
    for (long i = 0; i < nvars; ++i) series_poly = uni::mul(series_poly, factor);
    std::vector<long> out;
    for (const Rat& c : series_poly) out.push_back(c.get_num().get_si());
    return out;
}

} // namespace

TEST_CASE("ideal pieces") {
    HypersurfaceSpec spec(fermat(2, 3));
    auto piece = ideal_piece({partial_derivative(spec.F(), 0), partial_derivative(spec.F(), 1)},
                             spec, 2);
    CHECK(piece.rank() == 2);
    CHECK(piece.ambient_dim == 3);
    // span{x0^2, x1^2}: pivot columns 0 and 2 of [x0^2, x0x1, x1^2].
    CHECK(piece.basis.pivots == std::vector<int>{0, 2});

    CHECK(ideal_piece({Polynomial::constant(2, Cyclo(1))}, spec, 4).rank() == 5);
    CHECK(ideal_piece({}, spec, 4).rank() == 0);
}

TEST_CASE("smoothness certification") {
    CHECK(smoothness_check(HypersurfaceSpec(fermat(4, 3))));
    CHECK(smoothness_check(HypersurfaceSpec(fermat(6, 6))));
    // x0^3 in two variables: dF/dx1 = 0, quotient not Artinian.
    CHECK(!smoothness_check(HypersurfaceSpec(poly_pow(x(2, 0), 3))));
    // Product of distinct rational linear forms is smooth...
    std::vector<Rat> roots = {rat(0), rat(1), rat(1, 2), rat(1, 4), rat(1, 3), rat(2, 5)};
    Polynomial sep = Polynomial::constant(2, Cyclo(1));
    for (const Rat& r : roots) sep = sep * (x(2, 0) - Cyclo(r) * x(2, 1));
    CHECK(smoothness_check(HypersurfaceSpec(sep)));
    // ...and a repeated root is not.
    Polynomial dbl = poly_pow(x(2, 0) - x(2, 1), 2) * x(2, 0);
    CHECK(!smoothness_check(HypersurfaceSpec(dbl)));

    HypersurfaceSpec bad(poly_pow(x(2, 0), 3));
    CHECK_THROWS_AS(colon_piece(bad, x(2, 0), 1), SmoothnessFailure);
}

TEST_CASE("quotient dimensions match the complete-intersection series") {
    for (int d : {3, 4, 5}) {
        for (long nvars : {2L, 4L}) {
            HypersurfaceSpec spec(fermat(nvars, d));
            auto series = fermat_quotient_series(nvars, d);
            for (int e = 0; e <= spec.socle_full() + 1; ++e) {
                long expect = e < static_cast<int>(series.size()) ? series[e] : 0;
                CHECK(spec.quotient_dim(e) == expect);
            }
        }
    }
}

TEST_CASE("normal forms with quotients reconstruct the input") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int d : {3, 4}) {
        HypersurfaceSpec spec(fermat(4, d));
        for (int e : {d - 1, d, d + 1}) {
            auto basis = monomial_basis(4, e);
            std::map<Exponents, Cyclo> terms;
            for (const auto& m : basis)
                if (coeff(rng) > 1) terms.emplace(m, Cyclo(coeff(rng)));
            Polynomial A(4, std::move(terms));
            if (A.is_zero()) continue;
            auto nfq = spec.nf_with_quotients(A);
            Polynomial rebuilt(4);
            const auto& stds = spec.std_monomials(e);
            for (const auto& [i, c] : nfq.coords)
                rebuilt += Polynomial::monomial(4, stds[i], c);
            for (int v = 0; v < 4; ++v) rebuilt += nfq.quotients[v] * spec.partials()[v];
            CHECK(rebuilt == A);
            CHECK(spec.nf(A) == nfq.coords);
        }
    }
}

TEST_CASE("colon pieces on point cycles of binary Fermats") {
    for (int d : {3, 4, 5, 6}) {
        HypersurfaceSpec spec(fermat(2, d));
        Polynomial P = binary_point_poly(d);
        CHECK(P.degree() == d - 2);
        GradedSubspace deg1 = colon_piece(spec, P, 1);
        REQUIRE(deg1.rank() == 1);
        // Canonical form of span{x0 - zeta_{2d} x1}.
        CHECK(deg1.basis.rows[0].main ==
              SparseVec{{0, Cyclo(1)}, {1, -zeta_pow(2 * d, 1)}});
    }
}

TEST_CASE("colon against the trivial cycle is the Jacobian ideal") {
    HypersurfaceSpec spec(fermat(4, 3));
    Polynomial one = Polynomial::constant(4, Cyclo(1));
    for (int e = 0; e <= spec.socle_full(); ++e) {
        CHECK(colon_piece(spec, one, e) == ideal_piece(spec.partials(), spec, e));
    }
}

TEST_CASE("colon piece of a fake point on the degree-6 binary Fermat") {
    HypersurfaceSpec spec(fermat(2, 6));
    Cyclo c(rat(1, 2));
    // a = dF/dx1(c,1), b = dF/dx0(c,1); P = (a dF/dx0 - b dF/dx1)/(x0 - c x1).
    Cyclo a = evaluate(spec.partials()[1], {c, Cyclo(1)});
    Cyclo b = evaluate(spec.partials()[0], {c, Cyclo(1)});
    Polynomial P = divide_exact(a * spec.partials()[0] - b * spec.partials()[1],
                                x(2, 0) - c * x(2, 1));
    GradedSubspace deg1 = colon_piece(spec, P, 1);
    REQUIRE(deg1.rank() == 1);
    CHECK(deg1.basis.rows[0].main == SparseVec{{0, Cyclo(1)}, {1, -c}});
}

TEST_CASE("zero classes are rejected") {
    HypersurfaceSpec spec(fermat(2, 3));
    CHECK_THROWS_AS(colon_piece(spec, poly_pow(x(2, 0), 2), 1), ZeroClass);
    CHECK_THROWS_AS(colon_piece(spec, Polynomial(2), 1), ZeroClass);
    // Degree beyond the socle is automatically inside the ideal.
    CHECK_THROWS_AS(hilbert_function(spec, poly_pow(x(2, 0), 3)), ZeroClass);
}

TEST_CASE("Hilbert function of binary point cycles") {
    // The quotient by (J^F : P_point) on a 0-dimensional Fermat has Hilbert
    // function 1 in degrees 0..d-2 and 0 beyond.
    for (int d : {3, 4, 5, 6}) {
        HypersurfaceSpec spec(fermat(2, d));
        auto hf = hilbert_function(spec, binary_point_poly(d));
        REQUIRE(static_cast<int>(hf.size()) == d);
        for (int e = 0; e <= d - 2; ++e) CHECK(hf[e] == 1);
        CHECK(hf[d - 1] == 0);
        // Symmetry around the socle.
        int sigma = spec.socle_full() - (d - 2);
        for (int e = 0; e <= sigma; ++e) CHECK(hf[e] == hf[sigma - e]);
    }
}

TEST_CASE("colon pieces contain the Jacobian pieces, with equality past the socle") {
    HypersurfaceSpec spec(fermat(2, 5));
    Polynomial P = binary_point_poly(5);
    for (int e = 0; e <= spec.socle_full() + 2; ++e) {
        GradedSubspace colon = colon_piece(spec, P, e);
        GradedSubspace jac = ideal_piece(spec.partials(), spec, e);
        CHECK(colon.contains(jac));
        // Both are the full space once the Jacobian quotient vanishes.
        if (e > spec.socle_full()) CHECK(colon == jac);
    }
}

TEST_CASE("Artinian Gorenstein certification") {
    HypersurfaceSpec spec(fermat(4, 3));
    // The trivial cycle: the full Jacobian ring.
    auto cert1 = is_artinian_gorenstein(spec, Polynomial::constant(4, Cyclo(1)));
    CHECK(cert1.pass);
    CHECK(cert1.socle == spec.socle_full());
    // The socle generator: quotient is the one-dimensional algebra.
    auto cert2 = is_artinian_gorenstein(spec, hessian_det(spec));
    CHECK(cert2.pass);
    CHECK(cert2.socle == 0);
    CHECK(cert2.hf == std::vector<long>{1, 0});
    // Point cycles on binary Fermats.
    for (int d : {3, 4, 6}) {
        HypersurfaceSpec bin(fermat(2, d));
        auto cert = is_artinian_gorenstein(bin, binary_point_poly(d));
        CHECK(cert.pass);
        CHECK(cert.socle == d - 2);
    }
}

TEST_CASE("colon-ideal equality") {
    HypersurfaceSpec spec(fermat(2, 6));
    Polynomial P = binary_point_poly(6);
    CHECK(ideal_equal(spec, P, Cyclo(3) * P));
    CHECK(ideal_equal(spec, Cyclo(rat(-2, 7)) * P, P));
    // Two distinct fake points give distinct colon ideals.
    auto fake = [&](Rat c0) {
        Cyclo c(c0);
        Cyclo a = evaluate(spec.partials()[1], {c, Cyclo(1)});
        Cyclo b = evaluate(spec.partials()[0], {c, Cyclo(1)});
        return divide_exact(a * spec.partials()[0] - b * spec.partials()[1],
                            x(2, 0) - c * x(2, 1));
    };
    CHECK(!ideal_equal(spec, fake(rat(1, 2)), fake(rat(1, 3))));
    CHECK(ideal_equal(spec, fake(rat(1, 2)), fake(rat(1, 2))));
    CHECK_THROWS_AS(ideal_equal(spec, P, x(2, 0)), DegreeMismatch);
}

TEST_CASE("membership") {
    for (int d : {4, 5}) {
        HypersurfaceSpec spec(fermat(2, d));
        Polynomial gen = poly_pow(x(2, 0), d - 1);
        CHECK(membership(spec, {gen}, Polynomial(2)));
        CHECK(membership(spec, {gen}, gen));
        CHECK(membership(spec, {gen}, x(2, 1) * gen));
        CHECK(!membership(spec, {gen}, poly_pow(x(2, 0), d - 2)));
        // The partials are implicit generators.
        CHECK(membership(spec, {}, spec.partials()[0]));
    }
}

TEST_CASE("Hessian determinants") {
    for (int d : {3, 4}) {
        HypersurfaceSpec spec(fermat(4, d));
        Polynomial expect = Polynomial::constant(4, Cyclo(1));
        for (int i = 0; i < 4; ++i)
            expect = expect * (Cyclo(d) * Cyclo(d - 1) * poly_pow(x(4, i), d - 2));
        CHECK(hessian_det(spec) == expect);
    }
    // Multiplicative over disjoint variable groups.
    Polynomial f = poly_pow(x(4, 0), 3) + poly_pow(x(4, 1), 3) +
                   x(4, 0) * x(4, 0) * x(4, 1);
    Polynomial g = poly_pow(x(4, 2), 3) + poly_pow(x(4, 3), 3) +
                   x(4, 2) * x(4, 3) * x(4, 3);
    HypersurfaceSpec sum(f + g);
    // Compare against the direct dense determinant of the 4x4 Hessian.
    const auto& p = sum.partials();
    std::vector<std::vector<Polynomial>> H(4, std::vector<Polynomial>(4, Polynomial(4)));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) H[i][j] = partial_derivative(p[i], j);
    Polynomial direct(4);
    int perm[4] = {0, 1, 2, 3};
    std::sort(perm, perm + 4);
    do {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (perm[i] > perm[j]) ++inv;
        Polynomial term = Polynomial::constant(4, Cyclo(inv % 2 == 0 ? 1 : -1));
        for (int i = 0; i < 4; ++i) term = term * H[i][perm[i]];
        if (!term.is_zero()) direct += term;
    } while (std::next_permutation(perm, perm + 4));
    CHECK(hessian_det(sum) == direct);
    // Degree bookkeeping: (d-2)(n+2).
    CHECK(hessian_det(sum).degree() == sum.socle_full());
    // d = 2: constant determinant.
    Polynomial q(2);
    q += x(2, 0) * x(2, 0) + x(2, 1) * x(2, 1);
    CHECK(hessian_det(HypersurfaceSpec(q)).degree() == 0);
}

TEST_CASE("block structure") {
    Polynomial F = fermat(4, 3);
    HypersurfaceSpec spec(F);
    CHECK(spec.blocks().size() == 4); // Fermat splits into singletons
    Polynomial joinish =
        poly_pow(x(4, 0), 3) + x(4, 0) * x(4, 1) * x(4, 1) + poly_pow(x(4, 2), 3) +
        poly_pow(x(4, 3), 3) + x(4, 2) * x(4, 2) * x(4, 3);
    HypersurfaceSpec spec2(joinish);
    REQUIRE(spec2.blocks().size() == 2);
    CHECK(spec2.blocks()[0] == std::vector<int>{0, 1});
    CHECK(spec2.blocks()[1] == std::vector<int>{2, 3});
}
