#include "hodge/fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <initializer_list>
#include <map>
#include <random>
#include <sstream>

#include "hodge/errors.hpp"
#include "hodge/qform.hpp"
#include "hodge/textio.hpp"

namespace hodge {

namespace {

using Clock = std::chrono::steady_clock;

void add_check(FixtureResult& res, const std::string& label, bool pass) {
    res.checks.push_back({label, pass});
}

Polynomial linear_factor(const Rat& r) {
    return Polynomial::variable(2, 0) - Cyclo(r) * Polynomial::variable(2, 1);
}

Polynomial product_of_roots(const std::vector<Rat>& roots) {
    Polynomial F = Polynomial::constant(2, Cyclo(1));
    for (const Rat& r : roots)
        F = F * linear_factor(r);
    return F;
}

const std::vector<Rat> worked_sextic_roots = {rat(0, 1),  rat(1, 1), rat(1, 2),
                                              rat(1, 4), rat(1, 3), rat(2, 5)};

std::vector<long> trimmed(std::vector<long> h) {
    while (!h.empty() && h.back() == 0)
        h.pop_back();
    return h;
}

std::vector<long> trimmed_hf(const HypersurfaceSpec& spec, const Polynomial& P) {
    return trimmed(hilbert_function(spec, P));
}

// Product of the listed variables, as a monomial over nv variables.
Polynomial mvar(long nv, std::initializer_list<int> vars) {
    Polynomial p = Polynomial::constant(nv, Cyclo(1));
    for (int v : vars)
        p = p * Polynomial::variable(nv, v);
    return p;
}

Cyclo cdiv(const Cyclo& a, const Cyclo& b) { return a * b.pow(-1); }

bool in_colon(const HypersurfaceSpec& spec, const Polynomial& P, const Polynomial& G) {
    return sv_is_zero(spec.nf(G * P));
}

// Canonical basis of the degree-e colon piece, as polynomials.
std::vector<Polynomial> colon_basis(const HypersurfaceSpec& spec, const Polynomial& P, int e) {
    GradedSubspace cp = colon_piece(spec, P, e);
    std::vector<Exponents> monos = monomial_basis(spec.nvars(), e);
    std::vector<Polynomial> out;
    for (const AugRow& row : cp.basis.rows) {
        Polynomial g(spec.nvars());
        for (const auto& [col, coeff] : row.main)
            g += Polynomial::monomial(spec.nvars(), monos[static_cast<size_t>(col)], coeff);
        out.push_back(g);
    }
    return out;
}

// The two-parameter combination r*L + rc*Lc of linear cycles on the Fermat
// form, with the relative normalization of the cycle classes: each linear
// cycle polynomial carries the product of its pair parameters as scalar.
CycleSpec two_linear_combination(int d, int n, const std::vector<Cyclo>& cL,
                                 const std::vector<Cyclo>& cLc, const Rat& r, const Rat& rc) {
    CycleSpec L = linear_cycle_poly(d, n, cL);
    CycleSpec Lc = linear_cycle_poly(d, n, cLc);
    Cyclo wL(1), wLc(1);
    for (const Cyclo& c : cL)
        wL = wL * c;
    for (const Cyclo& c : cLc)
        wLc = wLc * c;
    Polynomial P = (Cyclo(r) * wL) * L.P + (Cyclo(rc) * wLc) * Lc.P;
    return CycleSpec{L.ambient, P, RawProv{}};
}

// ---------------------------------------------------------------- ex-5.1

FixtureResult fx_ex51() {
    FixtureResult res;
    res.id = "ex-5.1";
    for (int d : {3, 4, 5, 6}) {
        Cyclo z = Cyclo::zeta(2 * d);
        auto F = make_spec(fermat_form(2, d));
        CycleSpec pt = point_poly(F, z);
        std::vector<Polynomial> gens = {
            Polynomial::variable(2, 0) - z * Polynomial::variable(2, 1),
            Polynomial::monomial(2, {0, d - 1})};
        bool ok = true;
        int sigma = F->socle_full() - pt.P.degree();
        for (int e = 0; e <= sigma + 1; ++e)
            ok = ok && colon_piece(*F, pt.P, e) == ideal_piece(gens, *F, e);
        add_check(res, "d=" + std::to_string(d) + " point colon ideal", ok);
    }
    // Joins of point cycles: binomial generator pairs per variable pair.
    auto join_case = [&res](int d, int n) {
        Cyclo z = Cyclo::zeta(2 * d);
        std::vector<Cyclo> c(static_cast<size_t>(n / 2 + 1), z);
        CycleSpec lin = linear_cycle_poly(d, n, c);
        const HypersurfaceSpec& F = *lin.ambient;
        long nv = F.nvars();
        std::vector<Polynomial> gens;
        for (long j = 0; 2 * j + 1 < nv; ++j) {
            gens.push_back(Polynomial::variable(nv, static_cast<int>(2 * j)) -
                           z * Polynomial::variable(nv, static_cast<int>(2 * j + 1)));
            Exponents e(static_cast<size_t>(nv), 0);
            e[static_cast<size_t>(2 * j + 1)] = d - 1;
            gens.push_back(Polynomial::monomial(nv, e));
        }
        bool ok = true;
        int sigma = F.socle_full() - lin.P.degree();
        for (int e = 0; e <= sigma + 1; ++e)
            ok = ok && colon_piece(F, lin.P, e) == ideal_piece(gens, F, e);
        add_check(res, "d=" + std::to_string(d) + " n=" + std::to_string(n) + " join colon ideal",
                  ok);
    };
    for (int d : {3, 4, 5, 6})
        join_case(d, 2);
    for (int d : {3, 4})
        join_case(d, 4);
    res.note = "linear-cycle colon ideals match the binomial generators degree by degree; "
               "n=4 joins run for d=3,4 to stay within the time budget";
    return res;
}

// ------------------------------------------------------- prop-5.3 (d=3)

FixtureResult fx_prop53() {
    FixtureResult res;
    res.id = "prop-5.3";
    struct Params {
        int a0, a2, a4;
        long r, rc;
    };
    const std::vector<Params> cases = {{3, 5, 3, 1, 2}, {5, 3, 5, 2, 1}, {3, 3, 3, 1, -1}};
    Cyclo z = Cyclo::zeta(6);
    for (const Params& pc : cases) {
        std::string tag = "a=(" + std::to_string(pc.a0) + "," + std::to_string(pc.a2) + "," +
                          std::to_string(pc.a4) + ") r=" + std::to_string(pc.r) +
                          " rc=" + std::to_string(pc.rc);
        CycleSpec z1 = two_linear_combination(
            3, 4, {z, z, z}, {z.pow(pc.a0), z.pow(pc.a2), z.pow(pc.a4)}, rat(pc.r, 1),
            rat(pc.rc, 1));

        Cyclo A1 = Cyclo(-pc.r) + Cyclo(pc.rc) * z.pow(pc.a0 + pc.a2 + pc.a4);
        Cyclo A2 = Cyclo(pc.r) * z - Cyclo(pc.rc) * z.pow(pc.a0 + pc.a2 + 2 * pc.a4);
        Cyclo B1 = cdiv(-(z.pow(pc.a0 + pc.a2) - z * z), z.pow(pc.a2) - z);
        Cyclo B2 = cdiv(z.pow(pc.a2 + 1) * (z.pow(pc.a0) - z), z.pow(pc.a2) - z);
        Cyclo C1 = cdiv(-(z.pow(pc.a0) - z), z.pow(pc.a2) - z);
        Cyclo C2 = cdiv(z * (z.pow(pc.a0) - z.pow(pc.a2)), z.pow(pc.a2) - z);
        Cyclo D1 = cdiv(-(z.pow(pc.a0 + pc.a4) - z * z), z.pow(pc.a4) - z);
        Cyclo D2 = cdiv(z.pow(pc.a4 + 1) * (z.pow(pc.a0) - z), z.pow(pc.a4) - z);
        Cyclo E1 = cdiv(-(z.pow(pc.a0) - z), z.pow(pc.a4) - z);
        Cyclo E2 = cdiv(z * (z.pow(pc.a0) - z.pow(pc.a4)), z.pow(pc.a4) - z);
        Cyclo F1 = cdiv(-(z.pow(pc.a2 + pc.a4) - z * z), z.pow(pc.a4) - z);
        Cyclo F2 = cdiv(z.pow(pc.a4 + 1) * (z.pow(pc.a2) - z), z.pow(pc.a4) - z);
        Cyclo G1 = cdiv(-(z.pow(pc.a2) - z), z.pow(pc.a4) - z);
        Cyclo G2 = cdiv(z * (z.pow(pc.a2) - z.pow(pc.a4)), z.pow(pc.a4) - z);

        // The combination generators over nv variables.
        auto combos = [&](long nv) {
            std::vector<Polynomial> g;
            g.push_back(A1 * mvar(nv, {1, 3, 4}) + A2 * mvar(nv, {1, 3, 5}));
            g.push_back(mvar(nv, {0, 2}) + B1 * mvar(nv, {1, 2}) + B2 * mvar(nv, {1, 3}));
            g.push_back(mvar(nv, {0, 3}) + C1 * mvar(nv, {1, 2}) + C2 * mvar(nv, {1, 3}));
            g.push_back(mvar(nv, {0, 4}) + D1 * mvar(nv, {1, 4}) + D2 * mvar(nv, {1, 5}));
            g.push_back(mvar(nv, {0, 5}) + E1 * mvar(nv, {1, 4}) + E2 * mvar(nv, {1, 5}));
            g.push_back(mvar(nv, {2, 4}) + F1 * mvar(nv, {3, 4}) + F2 * mvar(nv, {3, 5}));
            g.push_back(mvar(nv, {2, 5}) + G1 * mvar(nv, {3, 4}) + G2 * mvar(nv, {3, 5}));
            return g;
        };

        // Factor generators (6 variables).
        std::vector<Polynomial> fgens;
        for (int j = 0; j < 6; ++j)
            fgens.push_back(mvar(6, {j, j}));
        fgens.push_back(mvar(6, {0, 1}));
        fgens.push_back(mvar(6, {2, 3}));
        fgens.push_back(mvar(6, {4, 5}));
        for (const Polynomial& g : combos(6))
            fgens.push_back(g);

        bool member = true;
        for (const Polynomial& g : fgens)
            member = member && in_colon(*z1.ambient, z1.P, g);
        add_check(res, tag + " factor generators", member);

        add_check(res, tag + " Hilbert function (1,6,6,1)",
                  trimmed_hf(*z1.ambient, z1.P) == std::vector<long>{1, 6, 6, 1});

        bool vanish = true;
        for (int e = 1; e <= 3; ++e)
            vanish = vanish && qff_vanishes_on_degree(*z1.ambient, z1.P, e, true).vanishes;
        add_check(res, tag + " quadratic form vanishes through degree 3", vanish);

        // Full cycle at n = 8: join with the remaining two pairs.
        CycleSpec z2 = linear_cycle_poly(3, 2, {z, z});
        CycleSpec joined = join_poly(z1, z2);
        const HypersurfaceSpec& F = *joined.ambient;
        std::vector<Polynomial> gens;
        for (int j = 0; j < 10; ++j)
            gens.push_back(mvar(10, {j, j}));
        for (int j = 3; j <= 4; ++j)
            gens.push_back(Polynomial::variable(10, 2 * j) -
                           z * Polynomial::variable(10, 2 * j + 1));
        gens.push_back(mvar(10, {0, 1}));
        gens.push_back(mvar(10, {2, 3}));
        gens.push_back(mvar(10, {4, 5}));
        for (const Polynomial& g : combos(10))
            gens.push_back(g);
        bool full = true;
        for (const Polynomial& g : gens)
            full = full && in_colon(F, joined.P, g);
        add_check(res, tag + " full n=8 generators", full);
    }
    res.note = "two-parameter combinations of two linear cycles meeting in codimension 3 "
               "on the cubic; the third case exercises the A1=0 branch. The reference "
               "display of the B generator reads zeta in its first numerator where the "
               "ideal requires zeta^2 (matching the analogous D and F generators); the "
               "corrected coefficient is verified here";
    return res;
}

// ------------------------------------------------------- prop-5.4 (d=3)

FixtureResult fx_prop54() {
    FixtureResult res;
    res.id = "prop-5.4";
    struct Params {
        int a0, a2;
        long r, rc;
    };
    const std::vector<Params> cases = {{3, 5, 1, 2}, {5, 3, 1, 3}, {3, 5, 1, -1}};
    Cyclo z = Cyclo::zeta(6);
    for (const Params& pc : cases) {
        std::string tag = "a=(" + std::to_string(pc.a0) + "," + std::to_string(pc.a2) +
                          ") r=" + std::to_string(pc.r) + " rc=" + std::to_string(pc.rc);
        CycleSpec z1 = two_linear_combination(3, 2, {z, z}, {z.pow(pc.a0), z.pow(pc.a2)},
                                              rat(pc.r, 1), rat(pc.rc, 1));

        Cyclo A1 = Cyclo(pc.r) * z.pow(2) + Cyclo(pc.rc) * z.pow(pc.a0 + pc.a2);
        Cyclo A2 = Cyclo(pc.r) - Cyclo(pc.rc) * z.pow(pc.a0 + 2 * pc.a2);
        Cyclo B1, B2, B3, C1, C2, C3;
        if (!A1.is_zero()) {
            B1 = A1;
            B2 = Cyclo(0);
            B3 = Cyclo(pc.r) * z - Cyclo(pc.rc) * z.pow(2 * (pc.a0 + pc.a2));
            C1 = A1;
            C2 = Cyclo(0);
            C3 = Cyclo(pc.r) - Cyclo(pc.rc) * z.pow(2 * pc.a0 + pc.a2);
        } else {
            B1 = A2;
            B2 = Cyclo(-pc.r) * z + Cyclo(pc.rc) * z.pow(2 * (pc.a0 + pc.a2));
            B3 = Cyclo(0);
            C1 = A2;
            C2 = Cyclo(-pc.r) + Cyclo(pc.rc) * z.pow(2 * pc.a0 + pc.a2);
            C3 = Cyclo(0);
        }
        add_check(res, tag + " branch " + (A1.is_zero() ? "A1=0" : "A1!=0"), true);

        auto combos = [&](long nv) {
            std::vector<Polynomial> g;
            g.push_back(A1 * mvar(nv, {1, 2}) + A2 * mvar(nv, {1, 3}));
            g.push_back(B1 * mvar(nv, {0, 2}) + B2 * mvar(nv, {1, 2}) + B3 * mvar(nv, {1, 3}));
            g.push_back(C1 * mvar(nv, {0, 3}) + C2 * mvar(nv, {1, 2}) + C3 * mvar(nv, {1, 3}));
            return g;
        };

        std::vector<Polynomial> fgens;
        for (int j = 0; j < 4; ++j)
            fgens.push_back(mvar(4, {j, j}));
        fgens.push_back(mvar(4, {0, 1}));
        fgens.push_back(mvar(4, {2, 3}));
        for (const Polynomial& g : combos(4))
            fgens.push_back(g);
        bool member = true;
        for (const Polynomial& g : fgens)
            member = member && in_colon(*z1.ambient, z1.P, g);
        add_check(res, tag + " factor generators", member);

        add_check(res, tag + " Hilbert function (1,4,1)",
                  trimmed_hf(*z1.ambient, z1.P) == std::vector<long>{1, 4, 1});

        bool vanish = true;
        for (int e = 1; e <= 2; ++e)
            vanish = vanish && qff_vanishes_on_degree(*z1.ambient, z1.P, e, true).vanishes;
        add_check(res, tag + " quadratic form vanishes through degree 2", vanish);

        // Full cycle at n = 4: join with one more pair.
        CycleSpec z2 = linear_cycle_poly(3, 0, {z});
        CycleSpec joined = join_poly(z1, z2);
        std::vector<Polynomial> gens;
        for (int j = 0; j < 6; ++j)
            gens.push_back(mvar(6, {j, j}));
        gens.push_back(Polynomial::variable(6, 4) - z * Polynomial::variable(6, 5));
        gens.push_back(mvar(6, {0, 1}));
        gens.push_back(mvar(6, {2, 3}));
        for (const Polynomial& g : combos(6))
            gens.push_back(g);
        bool full = true;
        for (const Polynomial& g : gens)
            full = full && in_colon(*joined.ambient, joined.P, g);
        add_check(res, tag + " full n=4 generators", full);
    }
    res.note = "combinations meeting in codimension 2 on the cubic; the third case "
               "exercises the A1=0 branch of the B and C generators";
    return res;
}

// ------------------------------------------------------- prop-5.5 (d=4)

FixtureResult fx_prop55() {
    FixtureResult res;
    res.id = "prop-5.5";
    struct Params {
        int a0, a2;
        long r, rc;
    };
    const std::vector<Params> cases = {{3, 7, 1, 2}, {5, 3, 2, 1}, {3, 7, 1, -1}};
    Cyclo z = Cyclo::zeta(8);
    for (const Params& pc : cases) {
        std::string tag = "a=(" + std::to_string(pc.a0) + "," + std::to_string(pc.a2) +
                          ") r=" + std::to_string(pc.r) + " rc=" + std::to_string(pc.rc);
        CycleSpec z1 = two_linear_combination(4, 2, {z, z}, {z.pow(pc.a0), z.pow(pc.a2)},
                                              rat(pc.r, 1), rat(pc.rc, 1));

        Cyclo A1 = Cyclo(pc.r) * z.pow(2) + Cyclo(pc.rc) * z.pow(pc.a0 + pc.a2);
        Cyclo A2 = -(Cyclo(pc.r) * z.pow(3) + Cyclo(pc.rc) * z.pow(pc.a0 + 2 * pc.a2));
        Cyclo B1 = cdiv(z.pow(2) - z.pow(pc.a0 + pc.a2), z.pow(pc.a2) - z);
        Cyclo B2 = cdiv(z * (z.pow(pc.a0 + pc.a2) - z.pow(pc.a2 + 1)), z.pow(pc.a2) - z);
        Cyclo C1 = cdiv(z - z.pow(pc.a0), z.pow(pc.a2) - z);
        Cyclo C2 = cdiv(z * (z.pow(pc.a0) - z.pow(pc.a2)), z.pow(pc.a2) - z);
        Cyclo D1 = cdiv(-(z.pow(2 * (pc.a0 + 1)) + Cyclo(1)), z.pow(2) * (z.pow(pc.a0) - z));
        Cyclo D2 =
            cdiv(z.pow(pc.a0) * (Cyclo(1) + z.pow(pc.a0 + 3)), z.pow(2) * (z.pow(pc.a0) - z));
        Cyclo E1 = cdiv(-(z.pow(2 * (pc.a2 + 1)) + Cyclo(1)), z.pow(2) * (z.pow(pc.a2) - z));
        Cyclo E2 =
            cdiv(z.pow(pc.a2) * (Cyclo(1) + z.pow(pc.a2 + 3)), z.pow(2) * (z.pow(pc.a2) - z));
        add_check(res, tag + " branch " + (A1.is_zero() ? "A1=0" : "A1!=0"), true);

        auto combos = [&](long nv) {
            std::vector<Polynomial> g;
            g.push_back(A1 * mvar(nv, {1, 1, 2, 3}) + A2 * mvar(nv, {1, 1, 3, 3}));
            g.push_back(mvar(nv, {0, 2}) + B1 * mvar(nv, {1, 2}) + B2 * mvar(nv, {1, 3}));
            g.push_back(mvar(nv, {0, 3}) + C1 * mvar(nv, {1, 2}) + C2 * mvar(nv, {1, 3}));
            g.push_back(mvar(nv, {0, 0}) + D1 * mvar(nv, {0, 1}) + D2 * mvar(nv, {1, 1}));
            g.push_back(mvar(nv, {2, 2}) + E1 * mvar(nv, {2, 3}) + E2 * mvar(nv, {3, 3}));
            return g;
        };

        std::vector<Polynomial> fgens;
        fgens.push_back(mvar(4, {1, 1, 1}));
        fgens.push_back(mvar(4, {3, 3, 3}));
        fgens.push_back(mvar(4, {0, 1, 1}));
        fgens.push_back(mvar(4, {2, 3, 3}));
        for (const Polynomial& g : combos(4))
            fgens.push_back(g);
        bool member = true;
        for (const Polynomial& g : fgens)
            member = member && in_colon(*z1.ambient, z1.P, g);
        add_check(res, tag + " factor generators", member);

        add_check(res, tag + " Hilbert function (1,4,6,4,1)",
                  trimmed_hf(*z1.ambient, z1.P) == std::vector<long>{1, 4, 6, 4, 1});

        bool vanish = true;
        for (int e = 1; e <= 4; ++e)
            vanish = vanish && qff_vanishes_on_degree(*z1.ambient, z1.P, e, true).vanishes;
        add_check(res, tag + " quadratic form vanishes through degree 4", vanish);

        // Full cycle at n = 4: join with one more pair.
        CycleSpec z2 = linear_cycle_poly(4, 0, {z});
        CycleSpec joined = join_poly(z1, z2);
        std::vector<Polynomial> gens;
        gens.push_back(mvar(6, {1, 1, 1}));
        gens.push_back(mvar(6, {3, 3, 3}));
        gens.push_back(mvar(6, {5, 5, 5}));
        gens.push_back(Polynomial::variable(6, 4) - z * Polynomial::variable(6, 5));
        gens.push_back(mvar(6, {0, 1, 1}));
        gens.push_back(mvar(6, {2, 3, 3}));
        for (const Polynomial& g : combos(6))
            gens.push_back(g);
        bool full = true;
        for (const Polynomial& g : gens)
            full = full && in_colon(*joined.ambient, joined.P, g);
        add_check(res, tag + " full n=4 generators", full);
    }
    res.note = "combinations meeting in codimension 2 on the quartic; the third case "
               "has A1=0 so the top combination generator degenerates to a monomial";
    return res;
}

// ------------------------------------------------------------- thm-1.4

void thm14_checks(FixtureResult& res, int d, int alpha0, const Rat& r, const Rat& rc,
                  int* fixed_sign) {
    Theorem4Report rep = theorem4_witness(d, alpha0, r, rc);
    std::string tag = "d=" + std::to_string(d) + " a0=" + std::to_string(alpha0) + " r=" +
                      rat_to_string(r) + " rc=" + rat_to_string(rc);
    if (r == rc) {
        add_check(res, tag + " determinant vanishes", rep.det.is_zero() && !rep.nonzero);
        return;
    }
    bool ok = rep.nonzero && rep.sign != 0 && rep.det == Cyclo(rep.sign) * rep.reference;
    if (fixed_sign != nullptr) {
        if (*fixed_sign == 0)
            *fixed_sign = rep.sign;
        ok = ok && rep.sign == *fixed_sign;
    }
    // The two closed forms differ by d / (zeta^{a0} - zeta)^2.
    Cyclo delta = Cyclo::zeta(2 * d, alpha0) - Cyclo::zeta(2 * d);
    ok = ok && rep.reference * Cyclo(static_cast<long>(d)) == rep.published * delta * delta;
    add_check(res, tag + " determinant witness", ok);
}

FixtureResult fx_thm14() {
    FixtureResult res;
    res.id = "thm-1.4";
    int fixed_sign = 0;
    for (int d : {4, 5, 6})
        for (int a0 = 3; a0 <= 2 * d - 1; a0 += 2)
            for (long r = 1; r <= 3; ++r)
                for (long rc = 1; rc <= 3; ++rc)
                    thm14_checks(res, d, a0, rat(r, 1), rat(rc, 1), &fixed_sign);
    add_check(res, "d=3 degenerate", theorem4_witness(3, 3, rat(1, 1), rat(2, 1)).degenerate);
    res.note = "the determinant is compared against the corrected closed form; the "
               "reference tuple's normalization differs from it by d/(zeta^{a0}-zeta)^2, "
               "and that relation is checked as well";
    return res;
}

// ------------------------------------------------------------- cor-6.2

FixtureResult fx_cor62() {
    FixtureResult res;
    res.id = "cor-6.2";
    std::mt19937 rng(20260826u);
    const std::map<int, std::vector<Rat>> split_roots = {
        {3, {rat(0, 1), rat(1, 1), rat(-1, 1)}},
        {4, {rat(0, 1), rat(1, 1), rat(-1, 1), rat(2, 1)}},
        {6, worked_sextic_roots}};
    const std::vector<Rat> fake_params = {rat(-2, 1), rat(3, 1), rat(5, 2), rat(7, 1)};

    auto random_factor = [&](int d) -> CycleSpec {
        int kind = static_cast<int>(rng() % 3);
        if (kind == 0) {
            auto F = make_spec(fermat_form(2, d));
            return point_poly(F, Cyclo::zeta(2 * d, 1 + 2 * static_cast<int>(rng() % d)));
        }
        const std::vector<Rat>& roots = split_roots.at(d);
        auto F = make_spec(product_of_roots(roots));
        if (kind == 1)
            return point_poly(F, Cyclo(roots[rng() % roots.size()]));
        return fake_point_poly(F, fake_params[rng() % fake_params.size()]);
    };

    int total = 0;
    auto run_join = [&](int d, int k) {
        std::vector<CycleSpec> parts;
        for (int i = 0; i < k; ++i)
            parts.push_back(random_factor(d));
        CycleSpec join = parts[0];
        std::vector<long> conv = trimmed_hf(*parts[0].ambient, parts[0].P);
        for (int i = 1; i < k; ++i) {
            join = join_poly(join, parts[i]);
            conv = hf_convolution(conv, trimmed_hf(*parts[i].ambient, parts[i].P));
        }
        ++total;
        add_check(res,
                  "join #" + std::to_string(total) + " d=" + std::to_string(d) + " k=" +
                      std::to_string(k) + " Hilbert convolution",
                  trimmed_hf(*join.ambient, join.P) == conv);
    };

    for (int i = 0; i < 4; ++i)
        run_join(3, 2);
    for (int i = 0; i < 3; ++i)
        run_join(3, 3);
    run_join(3, 4);
    for (int i = 0; i < 4; ++i)
        run_join(4, 2);
    for (int i = 0; i < 3; ++i)
        run_join(4, 3);
    for (int i = 0; i < 6; ++i)
        run_join(6, 2);
    res.note = "21 randomized joins of binary point and fake-point factors; the Hilbert "
               "function of each join equals the convolution of the factor Hilbert functions";
    return res;
}

// ------------------------------------------------------- sec7-example

FixtureResult fx_sec7() {
    FixtureResult res;
    res.id = "sec7-example";
    auto F = make_spec(product_of_roots(worked_sextic_roots));
    CycleSpec fake = fake_point_poly(F, rat(-1, 1));

    std::vector<Rat> q = express_in_point_basis(fake, worked_sextic_roots);
    const std::vector<Rat> corrected = {rat(2, 1), rat(-3, 2), rat(-1, 3), rat(3, 5),
                                        rat(1, 4)};
    add_check(res, "expansion in the point basis", q == corrected);

    Polynomial sum(2);
    for (size_t i = 0; i < q.size(); ++i)
        sum += Cyclo(q[i]) * point_poly(F, Cyclo(worked_sextic_roots[i])).P;
    add_check(res, "round trip reconstructs the cycle polynomial", sum == fake.P);

    // The reference tuple carries a sign slip: it is the expansion of the
    // same polynomial with its x1^4 coefficient negated.
    add_check(res, "x1^4 coefficient", fake.P.coeff({0, 4}) == Cyclo(rat(-659, 3600)));
    Polynomial flipped = fake.P - Polynomial::monomial(2, {0, 4}, Cyclo(rat(-659, 1800)));
    std::vector<Rat> published =
        express_in_point_basis(CycleSpec{F, flipped, RawProv{}}, worked_sextic_roots);
    const std::vector<Rat> golden = {rat(-207283, 810), rat(-68941, 270), rat(-507311, 1620),
                                     rat(-26911, 180), rat(-891881, 1620)};
    add_check(res, "reference tuple via the sign slip", published == golden);

    add_check(res, "Hilbert function (1,1,1,1,1)",
              trimmed_hf(*F, fake.P) == std::vector<long>(5, 1));
    add_check(res, "fake-linear verdict", is_fake_linear(fake) == LinearVerdict::FakeLinear);
    res.note = "the reference expansion tuple is reproduced exactly as the expansion of the "
               "cycle polynomial with its x1^4 coefficient negated; the corrected tuple is "
               "(2,-3/2,-1/3,3/5,1/4)";
    return res;
}

// ------------------------------------------------------------- thm-7.6

FixtureResult fx_thm76() {
    FixtureResult res;
    res.id = "thm-7.6";
    auto F7 = make_spec(product_of_roots(worked_sextic_roots));
    auto f6 = make_spec(fermat_form(2, 6));

    Theorem6Report mixed = theorem6_check({F7, f6}, {Cyclo(rat(-1, 1)), Cyclo::zeta(12)});
    bool shape = mixed.verdict == Theorem6Verdict::NotSmoothCertified &&
                 mixed.factors.size() == 2;
    add_check(res, "mixed join certifies non-smoothness", shape);
    if (shape) {
        const Theorem6Report::Factor& f0 = mixed.factors[0];
        add_check(res, "fake factor constant class is 42",
                  f0.fake && f0.certified && f0.constant_class == Cyclo(42) &&
                      f0.expected == Cyclo(42));
        add_check(res, "fake factor multiplier space is nonzero", f0.multiplier_dim > 0);
        add_check(res, "honest factor is uncertified", !mixed.factors[1].fake);
    }

    Theorem6Report honest = theorem6_check({f6, f6}, {Cyclo::zeta(12), Cyclo::zeta(12, 3)});
    add_check(res, "all-honest join expects smoothness",
              honest.verdict == Theorem6Verdict::SmoothExpected);

    auto d2 = make_spec(product_of_roots({rat(1, 1), rat(-1, 1)}));
    add_check(res, "degree 2 degenerate",
              theorem6_check({d2}, {Cyclo(3)}).verdict == Theorem6Verdict::Degenerate);
    res.note = "the fake point at c=-1 on the worked sextic contributes the constant "
               "class 6*F(-1,1) = 42";
    return res;
}

// --------------------------------------------------------- eq-4-tensor

FixtureResult fx_tensor() {
    FixtureResult res;
    res.id = "eq-4-tensor";
    auto f3 = make_spec(fermat_form(2, 3));
    Polynomial p3 = point_poly(f3, Cyclo::zeta(6)).P;
    add_check(res, "cubic point join", verify_tensor_decomposition(*f3, *f3, p3, p3));

    auto f4 = make_spec(fermat_form(2, 4));
    Polynomial p4a = point_poly(f4, Cyclo::zeta(8)).P;
    Polynomial p4b = point_poly(f4, Cyclo::zeta(8, 3)).P;
    add_check(res, "quartic point join", verify_tensor_decomposition(*f4, *f4, p4a, p4b));

    auto F7 = make_spec(product_of_roots(worked_sextic_roots));
    Polynomial q = fake_point_poly(F7, rat(-1, 1)).P;
    auto f6 = make_spec(fermat_form(2, 6));
    Polynomial p6 = point_poly(f6, Cyclo::zeta(12)).P;
    add_check(res, "fake point joined to an honest point",
              verify_tensor_decomposition(*F7, *f6, q, p6));
    add_check(res, "pair of fake points", verify_tensor_decomposition(*F7, *F7, q, q));

    Polynomial bad = Polynomial::variable(4, 0) * Polynomial::variable(4, 2);
    add_check(res, "unrelated join polynomial fails",
              !verify_tensor_decomposition(*f3, *f3, p3, p3, bad));
    res.note = "the colon quotient of each join is the tensor product of the factor "
               "quotients; an unrelated polynomial of the right degree is rejected";
    return res;
}

// ----------------------------------------------------------- eq-6-join

FixtureResult fx_join() {
    FixtureResult res;
    res.id = "eq-6-join";
    std::mt19937 rng(424243u);
    auto rnd = [&]() { return rat(static_cast<long>(rng() % 9) - 4, 1); };
    auto random_linear = [&](long nv) {
        Polynomial p(nv);
        bool nonzero = false;
        while (!nonzero) {
            p = Polynomial(nv);
            for (int i = 0; i < nv; ++i) {
                Rat c = rnd();
                if (c != 0) {
                    nonzero = true;
                    p += Cyclo(c) * Polynomial::variable(nv, i);
                }
            }
        }
        return p;
    };

    auto f = make_spec(fermat_form(2, 3));
    Polynomial P1 = point_poly(f, Cyclo::zeta(6)).P;
    auto g = make_spec(product_of_roots({rat(0, 1), rat(1, 1), rat(-1, 1)}));
    Polynomial P2 = fake_point_poly(g, rat(2, 1)).P;
    std::vector<Polynomial> b1 = colon_basis(*f, P1, 1);
    std::vector<Polynomial> b2 = colon_basis(*g, P2, 1);
    bool ok = !b1.empty() && !b2.empty();
    add_check(res, "degree-1 colon pieces are nonzero", ok);
    if (ok) {
        const Polynomial& G1 = b1[0];
        const Polynomial& G2 = b2[0];
        bool all = true;
        for (int i = 0; i < 12; ++i)
            all = all && qff_join_check(*f, *g, P1, P2, G1, G1, G2, G2, random_linear(4),
                                        random_linear(4), random_linear(4), random_linear(4));
        add_check(res, "12 randomized join identities", all);

        Polynomial zero4(4);
        add_check(res, "join identity with a vanishing coefficient",
                  qff_join_check(*f, *g, P1, P2, G1, G1, G2, G2, zero4, random_linear(4),
                                 random_linear(4), random_linear(4)));
    }
    res.note = "the quadratic form of a join evaluates blockwise against the factor "
               "forms, with random linear coefficient polynomials";
    return res;
}

// ----------------------------------------------------------- qff-props

FixtureResult fx_qffprops() {
    FixtureResult res;
    res.id = "qff-props";
    std::mt19937 rng(771249u);
    auto rnd_scalar = [&]() {
        long n = static_cast<long>(rng() % 7) - 3;
        long den = 1 + static_cast<long>(rng() % 3);
        return Cyclo(rat(n, den));
    };
    auto random_combo = [&](const std::vector<Polynomial>& basis, long nv) {
        Polynomial p(nv);
        for (const Polynomial& b : basis)
            p += rnd_scalar() * b;
        return p;
    };

    // Cycle inventory at d = 3, 4 with at most 4 variables.
    std::vector<CycleSpec> cycles;
    cycles.push_back(point_poly(make_spec(fermat_form(2, 3)), Cyclo::zeta(6)));
    cycles.push_back(point_poly(make_spec(fermat_form(2, 4)), Cyclo::zeta(8, 3)));
    cycles.push_back(fake_point_poly(
        make_spec(product_of_roots({rat(0, 1), rat(1, 1), rat(-1, 1)})), rat(2, 1)));
    cycles.push_back(linear_cycle_poly(3, 2, {Cyclo::zeta(6), Cyclo::zeta(6, 5)}));
    cycles.push_back(linear_cycle_poly(4, 2, {Cyclo::zeta(8), Cyclo::zeta(8, 3)}));

    long total = 0;
    bool symmetry = true, bilinearity = true, annihilation = true;
    for (const CycleSpec& cyc : cycles) {
        const HypersurfaceSpec& F = *cyc.ambient;
        long nv = F.nvars();
        int sigma = F.socle_full() - cyc.P.degree();
        for (int e = 1; e <= std::min(2, sigma); ++e) {
            std::vector<Polynomial> basis = colon_basis(F, cyc.P, e);
            if (basis.empty())
                continue;
            for (int trial = 0; trial < 3; ++trial) {
                Polynomial G = random_combo(basis, nv);
                Polynomial H = random_combo(basis, nv);
                Polynomial G2 = random_combo(basis, nv);
                Cyclo lam = rnd_scalar();

                QffValue qGH = qff_pair(F, cyc.P, G, H);
                QffValue qHG = qff_pair(F, cyc.P, H, G);
                symmetry = symmetry && qGH.class_coords == qHG.class_coords;
                ++total;

                QffValue qG2H = qff_pair(F, cyc.P, G2, H);
                QffValue qSum = qff_pair(F, cyc.P, G + lam * G2, H);
                SparseVec expect = sv_add_scaled(qGH.class_coords, lam, qG2H.class_coords);
                bilinearity = bilinearity && qSum.class_coords == expect;
                ++total;

                // Shifting G by a Jacobian-ideal element of the same degree
                // leaves the value unchanged.
                if (e >= F.d() - 1) {
                    Polynomial J = F.partials()[static_cast<size_t>(rng() % nv)];
                    for (int k = F.d() - 1; k < e; ++k)
                        J = J * Polynomial::variable(nv, static_cast<int>(rng() % nv));
                    QffValue qShift = qff_pair(F, cyc.P, G + J, H);
                    annihilation = annihilation && qShift.class_coords == qGH.class_coords;
                    ++total;
                }
            }
        }
    }
    add_check(res, "symmetry on random colon elements", symmetry);
    add_check(res, "bilinearity on random colon elements", bilinearity);
    add_check(res, "invariance under Jacobian-ideal shifts", annihilation);
    add_check(res, "at least 50 property instances", total >= 50);
    res.note = std::to_string(total) + " randomized property instances over 5 cycles";
    return res;
}

// ---------------------------------------------------------- gorenstein

FixtureResult fx_gorenstein() {
    FixtureResult res;
    res.id = "gorenstein";
    std::vector<std::pair<std::string, CycleSpec>> cycles;
    for (int d : {3, 4, 5, 6})
        cycles.push_back({"point d=" + std::to_string(d),
                          point_poly(make_spec(fermat_form(2, d)), Cyclo::zeta(2 * d))});
    cycles.push_back({"linear join d=3 n=2",
                      linear_cycle_poly(3, 2, {Cyclo::zeta(6), Cyclo::zeta(6, 5)})});
    cycles.push_back({"linear join d=4 n=2",
                      linear_cycle_poly(4, 2, {Cyclo::zeta(8), Cyclo::zeta(8, 3)})});

    auto F7 = make_spec(product_of_roots(worked_sextic_roots));
    CycleSpec fake = fake_point_poly(F7, rat(-1, 1));
    cycles.push_back({"fake point d=6", fake});
    CycleSpec p6 = point_poly(make_spec(fermat_form(2, 6)), Cyclo::zeta(12));
    cycles.push_back({"fake-honest join d=6 n=2", join_poly(fake, p6)});

    Cyclo z6 = Cyclo::zeta(6);
    cycles.push_back({"two-linear combination d=3 n=2",
                      two_linear_combination(3, 2, {z6, z6}, {z6.pow(3), z6.pow(5)},
                                             rat(1, 1), rat(2, 1))});
    cycles.push_back({"two-linear combination d=3 n=4",
                      two_linear_combination(3, 4, {z6, z6, z6},
                                             {z6.pow(3), z6.pow(5), z6.pow(3)}, rat(1, 1),
                                             rat(2, 1))});
    Cyclo z8 = Cyclo::zeta(8);
    cycles.push_back({"two-linear combination d=4 n=2",
                      two_linear_combination(4, 2, {z8, z8}, {z8.pow(3), z8.pow(7)},
                                             rat(1, 1), rat(2, 1))});

    for (const auto& [label, cyc] : cycles) {
        GorensteinCertificate cert = is_artinian_gorenstein(*cyc.ambient, cyc.P);
        add_check(res, label, cert.pass && cert.socle == cyc.ambient->socle_cycle());
    }
    res.note = "every fixture cycle has an Artinian Gorenstein colon quotient with socle "
               "degree (d-2)(n/2+1)";
    return res;
}

using FixtureFn = FixtureResult (*)();

const std::vector<std::pair<std::string, FixtureFn>>& fixture_table() {
    static const std::vector<std::pair<std::string, FixtureFn>> table = {
        {"ex-5.1", fx_ex51},         {"prop-5.3", fx_prop53},
        {"prop-5.4", fx_prop54},     {"prop-5.5", fx_prop55},
        {"thm-1.4", fx_thm14},       {"cor-6.2", fx_cor62},
        {"sec7-example", fx_sec7},   {"thm-7.6", fx_thm76},
        {"eq-4-tensor", fx_tensor},  {"eq-6-join", fx_join},
        {"qff-props", fx_qffprops},  {"gorenstein", fx_gorenstein},
    };
    return table;
}

} // namespace

std::vector<std::string> fixture_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, fn] : fixture_table())
        ids.push_back(id);
    return ids;
}

FixtureResult run_fixture(const std::string& id) {
    for (const auto& [fid, fn] : fixture_table()) {
        if (fid == id) {
            auto t0 = Clock::now();
            FixtureResult res = fn();
            res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
            return res;
        }
    }
    throw UnknownFixture("unknown fixture id: " + id);
}

FixtureResult run_thm14_single(int d, int alpha0, const Rat& r, const Rat& rc) {
    FixtureResult res;
    res.id = "thm-1.4";
    auto t0 = Clock::now();
    thm14_checks(res, d, alpha0, r, rc, nullptr);
    Theorem4Report rep = theorem4_witness(d, alpha0, r, rc);
    std::ostringstream note;
    note << "det = " << rep.det.to_string();
    if (rep.nonzero)
        note << " (sign " << rep.sign << " times the closed form)";
    res.note = note.str();
    res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return res;
}

} // namespace hodge
