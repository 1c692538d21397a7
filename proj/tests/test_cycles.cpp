#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "hodge/cycles.hpp"
#include "hodge/errors.hpp"

using namespace hodge;

namespace {

Polynomial linear_factor(const Rat& r) {
    return Polynomial::variable(2, 0) - Cyclo(r) * Polynomial::variable(2, 1);
}

Polynomial product_of_roots(const std::vector<Rat>& roots) {
    Polynomial F = Polynomial::constant(2, Cyclo(1));
    for (const Rat& r : roots)
        F = F * linear_factor(r);
    return F;
}

const std::vector<Rat> sec7_roots = {rat(0, 1),  rat(1, 1), rat(1, 2),
                                     rat(1, 4), rat(1, 3), rat(2, 5)};

std::vector<long> trimmed_hf(const HypersurfaceSpec& spec, const Polynomial& P) {
    std::vector<long> h = hilbert_function(spec, P);
    while (!h.empty() && h.back() == 0)
        h.pop_back();
    return h;
}

} // namespace

TEST_CASE("linear cycle polynomial, zero-dimensional case") {
    CycleSpec z = linear_cycle_poly(3, 0, {Cyclo::zeta(6)});
    Polynomial expected =
        Polynomial::variable(2, 0) + Cyclo::zeta(6) * Polynomial::variable(2, 1);
    CHECK(z.P == expected);
    CHECK(z.ambient->F() == fermat_form(2, 3));
    CHECK(std::holds_alternative<LinearProv>(z.prov));
}

TEST_CASE("linear cycle polynomial is a product over the pairs") {
    CycleSpec z = linear_cycle_poly(3, 2, {Cyclo::zeta(6), Cyclo::zeta(6)});
    Polynomial a = Polynomial::variable(4, 0) + Cyclo::zeta(6) * Polynomial::variable(4, 1);
    Polynomial b = Polynomial::variable(4, 2) + Cyclo::zeta(6) * Polynomial::variable(4, 3);
    CHECK(z.P == a * b);
    CHECK(z.P.degree() == 2);
}

TEST_CASE("linear cycle argument validation") {
    CHECK_THROWS_AS(linear_cycle_poly(3, 1, {Cyclo(1)}), ArityMismatch);
    CHECK_THROWS_AS(linear_cycle_poly(3, 0, {Cyclo(1), Cyclo(1)}), ArityMismatch);
    CHECK_THROWS_AS(linear_cycle_poly(3, 0, {Cyclo(0)}), Error);
}

TEST_CASE("linear cycle colon ideal has the expected binomial generators") {
    for (int d : {3, 4, 5, 6}) {
        for (int n : {0, 2}) {
            const long nvars = n + 2;
            const Cyclo z = Cyclo::zeta(2 * d);
            CycleSpec cyc = linear_cycle_poly(d, n, std::vector<Cyclo>(n / 2 + 1, z));
            std::vector<Polynomial> gens;
            for (long j = 0; j < nvars / 2; ++j) {
                gens.push_back(Polynomial::variable(nvars, 2 * j) -
                               z * Polynomial::variable(nvars, 2 * j + 1));
                Exponents e(nvars, 0);
                e[2 * j + 1] = d - 1;
                gens.push_back(Polynomial::monomial(nvars, e));
            }
            const int sigma = cyc.ambient->socle_full() - cyc.P.degree();
            for (int e = 0; e <= sigma + 1; ++e)
                CHECK(colon_piece(*cyc.ambient, cyc.P, e) ==
                      ideal_piece(gens, *cyc.ambient, e));
        }
    }
}

TEST_CASE("point cycle on the Fermat binary matches the linear cycle") {
    for (int d : {3, 5}) {
        auto F = make_spec(fermat_form(2, d));
        CycleSpec pt = point_poly(F, Cyclo::zeta(2 * d));
        CycleSpec lin = linear_cycle_poly(d, 0, {Cyclo::zeta(2 * d)});
        CHECK(pt.P.degree() == d - 2);
        CHECK(ideal_equal(*F, pt.P, lin.P));
    }
}

TEST_CASE("point cycle divides back exactly") {
    auto F = make_spec(product_of_roots(sec7_roots));
    const Cyclo r(rat(1, 2));
    CycleSpec pt = point_poly(F, r);
    Polynomial div = Polynomial::variable(2, 0) - r * Polynomial::variable(2, 1);
    CHECK(pt.P * div == r * F->partials()[0] + F->partials()[1]);
}

TEST_CASE("point cycle rejects non-roots") {
    auto F = make_spec(fermat_form(2, 3));
    CHECK_THROWS_AS(point_poly(F, Cyclo(2)), RootMismatch);
    CHECK_THROWS_AS(point_poly(make_spec(fermat_form(4, 3)), Cyclo(1)), ArityMismatch);
}

TEST_CASE("rational roots of a split binary form") {
    std::vector<Rat> roots = rational_roots(product_of_roots(sec7_roots));
    std::vector<Rat> expected = sec7_roots;
    std::sort(roots.begin(), roots.end());
    std::sort(expected.begin(), expected.end());
    CHECK(roots == expected);
}

TEST_CASE("rational roots handles multiplicity and scaling") {
    Polynomial F = Cyclo(rat(2, 3)) * (linear_factor(rat(5, 7)) * linear_factor(rat(5, 7)) *
                                       linear_factor(rat(-3, 1)));
    std::vector<Rat> roots = rational_roots(F);
    std::sort(roots.begin(), roots.end());
    CHECK(roots == std::vector<Rat>{rat(-3, 1), rat(5, 7), rat(5, 7)});
}

TEST_CASE("rational roots failure modes") {
    CHECK_THROWS_AS(rational_roots(fermat_form(2, 2)), NonRationalRoots); // x0^2 + x1^2
    Polynomial xy = Polynomial::variable(2, 0) * Polynomial::variable(2, 1);
    CHECK_THROWS_AS(rational_roots(xy), NonRationalRoots); // root at (1:0)
    Polynomial zeta_coeff = linear_factor(rat(1, 1)) +
                            Cyclo::zeta(6) * Polynomial::variable(2, 1);
    CHECK_THROWS_AS(rational_roots(zeta_coeff), NonRationalRoots);
    CHECK_THROWS_AS(rational_roots(Polynomial(2)), NonRationalRoots);
}

TEST_CASE("worked fake point: expansion coefficients in the point basis") {
    auto F = make_spec(product_of_roots(sec7_roots));
    CycleSpec fake = fake_point_poly(F, rat(-1, 1));

    // Frozen against an independent exact computation (synthetic division
    // and fraction elimination from scratch), cross-checked by the round
    // trip below.
    std::vector<Rat> q = express_in_point_basis(fake, sec7_roots);
    const std::vector<Rat> corrected = {rat(2, 1), rat(-3, 2), rat(-1, 3),
                                        rat(3, 5), rat(1, 4)};
    CHECK(q == corrected);

    // Round trip: the combination reconstructs the fake point polynomial.
    Polynomial sum(2);
    for (size_t i = 0; i < q.size(); ++i)
        sum += Cyclo(q[i]) * point_poly(F, Cyclo(sec7_roots[i])).P;
    CHECK(sum == fake.P);

    // The reference tuple used by the sec7-example fixture carries a sign
    // slip in its source: it is exactly the expansion of the same cycle
    // polynomial with its x1^4 coefficient negated. Freeze the published
    // digits through that relationship.
    CHECK(fake.P.coeff({0, 4}) == Cyclo(rat(-659, 3600)));
    Polynomial flipped =
        fake.P - Polynomial::monomial(2, {0, 4}, Cyclo(rat(-659, 1800)));
    std::vector<Rat> published =
        express_in_point_basis(CycleSpec{F, flipped, RawProv{}}, sec7_roots);
    const std::vector<Rat> golden = {rat(-207283, 810), rat(-68941, 270),
                                     rat(-507311, 1620), rat(-26911, 180),
                                     rat(-891881, 1620)};
    CHECK(published == golden);
}

TEST_CASE("point basis expansion of a basis element and of the dropped point") {
    auto F = make_spec(product_of_roots(sec7_roots));
    CycleSpec p1 = point_poly(F, Cyclo(sec7_roots[0]));
    std::vector<Rat> q1 = express_in_point_basis(p1, sec7_roots);
    CHECK(q1 == std::vector<Rat>{rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)});

    CycleSpec p6 = point_poly(F, Cyclo(sec7_roots[5]));
    std::vector<Rat> rel = express_in_point_basis(p6, sec7_roots);
    Polynomial sum(2);
    for (size_t i = 0; i < rel.size(); ++i)
        sum += Cyclo(rel[i]) * point_poly(F, Cyclo(sec7_roots[i])).P;
    CHECK(sum == p6.P);
}

TEST_CASE("fake point failure modes") {
    auto F = make_spec(product_of_roots(sec7_roots));
    CHECK_THROWS_AS(fake_point_poly(F, rat(1, 2)), RootCollision);
    CHECK_THROWS_AS(fake_point_poly(make_spec(fermat_form(2, 6)), rat(2, 1)),
                    NonRationalRoots);
    auto repeated = product_of_roots({rat(1, 1), rat(1, 1), rat(0, 1)});
    CHECK_THROWS_AS(fake_point_poly(make_spec(repeated), rat(2, 1)), SmoothnessFailure);
}

TEST_CASE("fake point colon ideal and Hilbert function") {
    for (const Rat& c : {rat(-1, 1), rat(7, 1)}) {
        auto F = make_spec(product_of_roots(sec7_roots));
        CycleSpec fake = fake_point_poly(F, c);
        const int d = 6;
        std::vector<Polynomial> gens = {
            Polynomial::variable(2, 0) - Cyclo(c) * Polynomial::variable(2, 1),
            Polynomial::monomial(2, {d - 1, 0}), Polynomial::monomial(2, {0, d - 1})};
        const int sigma = F->socle_full() - fake.P.degree();
        for (int e = 0; e <= sigma + 1; ++e)
            CHECK(colon_piece(*F, fake.P, e) == ideal_piece(gens, *F, e));
        CHECK(trimmed_hf(*F, fake.P) == std::vector<long>(d - 1, 1));
    }
}

TEST_CASE("join of point cycles equals the linear cycle") {
    const int d = 4;
    auto Fbin = make_spec(fermat_form(2, d));
    CycleSpec pt = point_poly(Fbin, Cyclo::zeta(2 * d));
    CycleSpec joined = join_poly(pt, pt);
    CycleSpec lin = linear_cycle_poly(d, 2, {Cyclo::zeta(2 * d), Cyclo::zeta(2 * d)});
    CHECK(joined.ambient->F() == lin.ambient->F());
    CHECK(ideal_equal(*joined.ambient, joined.P, lin.P));
    CHECK(std::holds_alternative<JoinProv>(joined.prov));
}

TEST_CASE("join degree bookkeeping and mismatch") {
    auto f3 = make_spec(fermat_form(2, 3));
    auto f4 = make_spec(fermat_form(2, 4));
    CycleSpec a = point_poly(f3, Cyclo::zeta(6));
    CycleSpec b = point_poly(f4, Cyclo::zeta(8));
    CHECK_THROWS_AS(join_poly(a, b), DegreeMismatch);
    CycleSpec aa = join_poly(a, a);
    CHECK(aa.P.degree() == (3 - 2) * (2 / 2 + 1));
    CHECK(aa.ambient->nvars() == 4);
}

TEST_CASE("join is associative up to flattening") {
    auto F = make_spec(fermat_form(2, 3));
    CycleSpec a = point_poly(F, Cyclo::zeta(6));
    CycleSpec b = point_poly(F, Cyclo::zeta(6, 3));
    CycleSpec c = point_poly(F, Cyclo::zeta(6, 5));
    CycleSpec left = join_poly(join_poly(a, b), c);
    CycleSpec right = join_poly(a, join_poly(b, c));
    CHECK(left.P == right.P);
    CHECK(left.ambient->F() == right.ambient->F());
}

TEST_CASE("Hilbert function convolution") {
    CHECK(hf_convolution({1, 1}, {1, 1}) == std::vector<long>{1, 2, 1});
    CHECK(hf_convolution({1, 2, 1}, {1}) == std::vector<long>{1, 2, 1});
    CHECK(hf_convolution({1, 1, 0}, {1, 1}) == std::vector<long>{1, 2, 1});
    CHECK(hf_convolution({3, 1}, {2, 5}) == hf_convolution({2, 5}, {3, 1}));
    CHECK(hf_convolution({}, {1, 1}).empty());
}

TEST_CASE("join Hilbert function equals the convolution, randomized") {
    std::mt19937 rng(20260826);
    const std::vector<Rat> pool = {rat(0, 1), rat(1, 1),  rat(-1, 1), rat(1, 2),
                                   rat(2, 1), rat(-1, 3), rat(3, 1),  rat(1, 4)};
    for (int iter = 0; iter < 12; ++iter) {
        const int d = 3 + static_cast<int>(rng() % 2);
        auto pick_factor = [&]() {
            std::vector<Rat> roots = pool;
            std::shuffle(roots.begin(), roots.end(), rng);
            roots.resize(d);
            auto F = make_spec(product_of_roots(roots));
            if (rng() % 2 == 0)
                return point_poly(F, Cyclo(roots[0]));
            Rat c = rat(5, 1);
            while (std::find(roots.begin(), roots.end(), c) != roots.end())
                c += 1;
            return fake_point_poly(F, c);
        };
        CycleSpec left = pick_factor(), right = pick_factor();
        CycleSpec joined = join_poly(left, right);
        std::vector<long> conv =
            hf_convolution(hilbert_function(left), hilbert_function(right));
        CHECK(trimmed_hf(*joined.ambient, joined.P) == conv);
    }
}

TEST_CASE("combination polynomial") {
    CycleSpec a = linear_cycle_poly(3, 2, {Cyclo::zeta(6), Cyclo::zeta(6)});
    CycleSpec b = linear_cycle_poly(3, 2, {Cyclo::zeta(6, 5), Cyclo::zeta(6, 5)});
    CycleSpec left_only = combination_poly({{rat(1, 1), a}, {rat(0, 1), b}});
    CHECK(left_only.P == a.P);
    CycleSpec mix = combination_poly({{rat(1, 1), a}, {rat(1, 1), b}});
    CHECK(mix.P == a.P + b.P);
    CHECK_THROWS_AS(combination_poly({{rat(1, 1), a}, {rat(-1, 1), a}}), ZeroClass);
    CHECK_THROWS_AS(combination_poly({}), ArityMismatch);
}

TEST_CASE("linear verdicts") {
    CycleSpec lin = linear_cycle_poly(4, 2, {Cyclo::zeta(8), Cyclo::zeta(8, 3)});
    CHECK(is_fake_linear(lin) == LinearVerdict::Linear);

    auto F = make_spec(product_of_roots(sec7_roots));
    CycleSpec fake = fake_point_poly(F, rat(-1, 1));
    CHECK(is_fake_linear(fake) == LinearVerdict::FakeLinear);
    CHECK(is_fake_linear(join_poly(fake, fake)) == LinearVerdict::FakeLinear);

    CycleSpec honest_pt = point_poly(F, Cyclo(rat(1, 3)));
    CHECK(is_fake_linear(honest_pt) == LinearVerdict::Linear);

    CycleSpec a = linear_cycle_poly(3, 2, {Cyclo::zeta(6), Cyclo::zeta(6)});
    CycleSpec b = linear_cycle_poly(3, 2, {Cyclo::zeta(6, 5), Cyclo::zeta(6, 5)});
    CycleSpec mix = combination_poly({{rat(1, 1), a}, {rat(1, 1), b}});
    CHECK(is_fake_linear(mix) == LinearVerdict::NotLinearType);
}

TEST_CASE("verdicts and ideals are scalar invariant") {
    auto F = make_spec(product_of_roots(sec7_roots));
    CycleSpec fake = fake_point_poly(F, rat(-1, 1));
    CycleSpec scaled{F, Cyclo(rat(7, 3)) * fake.P, RawProv{}};
    CHECK(is_fake_linear(scaled) == LinearVerdict::FakeLinear);
    CHECK(hilbert_function(scaled) == hilbert_function(fake));
    CHECK(ideal_equal(*F, fake.P, scaled.P));
}

TEST_CASE("tensor decomposition of joins") {
    auto f = make_spec(fermat_form(2, 3));
    Polynomial p = (point_poly(f, Cyclo::zeta(6))).P;
    CHECK(verify_tensor_decomposition(*f, *f, p, p));

    auto F7 = make_spec(product_of_roots(sec7_roots));
    Polynomial q = fake_point_poly(F7, rat(-1, 1)).P;
    auto f6 = make_spec(fermat_form(2, 6));
    Polynomial p6 = point_poly(f6, Cyclo::zeta(12)).P;
    CHECK(verify_tensor_decomposition(*F7, *f6, q, p6));

    // An unrelated join polynomial of the right degree fails the check.
    Polynomial bad = Polynomial::variable(4, 0) * Polynomial::variable(4, 2);
    CHECK_FALSE(verify_tensor_decomposition(*f, *f, p, p, bad));
}
