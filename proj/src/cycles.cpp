#include "hodge/cycles.hpp"

#include <algorithm>
#include <map>

#include "hodge/errors.hpp"

namespace hodge {

std::shared_ptr<const HypersurfaceSpec> make_spec(Polynomial F) {
    return std::make_shared<const HypersurfaceSpec>(std::move(F));
}

Polynomial fermat_form(long nvars, int d) {
    Polynomial F(nvars);
    for (long i = 0; i < nvars; ++i) {
        Exponents e(nvars, 0);
        e[i] = d;
        F += Polynomial::monomial(nvars, e);
    }
    return F;
}

CycleSpec linear_cycle_poly(int d, int n, const std::vector<Cyclo>& c) {
    if (d < 2)
        throw DegreeMismatch("linear cycle requires degree >= 2");
    if (n < 0 || n % 2 != 0)
        throw ArityMismatch("linear cycle requires even nonnegative dimension");
    const long nvars = n + 2;
    if (static_cast<long>(c.size()) != nvars / 2)
        throw ArityMismatch("expected one parameter per variable pair");
    for (const Cyclo& cj : c)
        if (cj.is_zero())
            throw Error("linear cycle parameters must be nonzero");

    auto ambient = make_spec(fermat_form(nvars, d));
    Polynomial P = Polynomial::constant(nvars, Cyclo(1));
    for (long j = 0; j < nvars / 2; ++j) {
        Exponents hi(nvars, 0), lo(nvars, 0);
        hi[2 * j] = d - 1;
        lo[2 * j + 1] = d - 1;
        Polynomial num = Polynomial::monomial(nvars, hi) -
                         Polynomial::monomial(nvars, lo, c[j].pow(d - 1));
        Polynomial div = Polynomial::variable(nvars, 2 * j) -
                         c[j] * Polynomial::variable(nvars, 2 * j + 1);
        P = P * divide_exact(num, div);
    }
    return CycleSpec{std::move(ambient), std::move(P), LinearProv{c}};
}

CycleSpec point_poly(std::shared_ptr<const HypersurfaceSpec> Fbin, const Cyclo& r) {
    if (Fbin->nvars() != 2)
        throw ArityMismatch("point cycle requires a binary form");
    const Polynomial& F = Fbin->F();
    if (!evaluate(F, {r, Cyclo(1)}).is_zero())
        throw RootMismatch();
    Polynomial num = r * Fbin->partials()[0] + Fbin->partials()[1];
    Polynomial div = Polynomial::variable(2, 0) - r * Polynomial::variable(2, 1);
    Polynomial P = divide_exact(num, div);
    return CycleSpec{std::move(Fbin), std::move(P), PointProv{r}};
}

CycleSpec fake_point_poly(std::shared_ptr<const HypersurfaceSpec> Fbin, const Rat& c) {
    if (Fbin->nvars() != 2)
        throw ArityMismatch("fake point requires a binary form");
    Fbin->require_smooth();
    std::vector<Rat> roots = rational_roots(Fbin->F());
    for (const Rat& r : roots)
        if (r == c)
            throw RootCollision();
    Cyclo a = evaluate(Fbin->partials()[1], {Cyclo(c), Cyclo(1)});
    Cyclo b = evaluate(Fbin->partials()[0], {Cyclo(c), Cyclo(1)});
    Polynomial num = a * Fbin->partials()[0] - b * Fbin->partials()[1];
    Polynomial div = Polynomial::variable(2, 0) - Cyclo(c) * Polynomial::variable(2, 1);
    Polynomial P = divide_exact(num, div);
    return CycleSpec{std::move(Fbin), std::move(P), FakePointProv{c}};
}

namespace {

// All positive divisors of |n|, n nonzero.
std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> low, high;
    for (mpz_class i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            low.push_back(i);
            if (i * i != n)
                high.push_back(n / i);
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

Rat horner(const std::vector<Rat>& p, const Rat& t) {
    Rat v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        v = v * t + *it;
    return v;
}

// Quotient of p by (t - r) given that p(r) = 0.
std::vector<Rat> deflate(const std::vector<Rat>& p, const Rat& r) {
    std::vector<Rat> q(p.size() - 1);
    Rat carry = 0;
    for (size_t i = p.size(); i-- > 1;) {
        carry = p[i] + carry * r;
        q[i - 1] = carry;
    }
    return q;
}

} // namespace

std::vector<Rat> rational_roots(const Polynomial& binary_form) {
    if (binary_form.nvars() != 2)
        throw ArityMismatch("expected a binary form");
    if (binary_form.is_zero())
        throw NonRationalRoots("zero form has no well-defined roots");
    const int d = binary_form.degree();
    std::vector<Rat> p(static_cast<size_t>(d) + 1, Rat(0));
    for (const auto& [e, coeff] : binary_form.terms()) {
        auto r = coeff.as_rational();
        if (!r)
            throw NonRationalRoots("form has non-rational coefficients");
        p[e[0]] = *r;
    }
    if (p[d] == 0)
        throw NonRationalRoots("form vanishes at (1:0)");

    std::vector<Rat> roots;
    while (p.size() > 1) {
        if (p[0] == 0) {
            roots.emplace_back(0);
            p.erase(p.begin());
            continue;
        }
        // Integerize and enumerate rational-root candidates num/den with
        // num | constant term, den | leading coefficient.
        mpz_class den_lcm = 1;
        for (const Rat& c : p)
            den_lcm = lcm(den_lcm, c.get_den());
        std::vector<mpz_class> ip;
        for (const Rat& c : p) {
            Rat scaled = c * Rat(den_lcm);
            ip.push_back(scaled.get_num());
        }
        bool found = false;
        for (const mpz_class& num : divisors(ip.front())) {
            for (const mpz_class& den : divisors(ip.back())) {
                for (int sign : {1, -1}) {
                    Rat cand(sign * num, den);
                    cand.canonicalize();
                    if (horner(p, cand) == 0) {
                        roots.push_back(cand);
                        p = deflate(p, cand);
                        found = true;
                        break;
                    }
                }
                if (found)
                    break;
            }
            if (found)
                break;
        }
        if (!found)
            throw NonRationalRoots();
    }
    return roots;
}

std::vector<Rat> express_in_point_basis(const CycleSpec& P, const std::vector<Rat>& roots) {
    const HypersurfaceSpec& spec = *P.ambient;
    if (spec.nvars() != 2)
        throw ArityMismatch("point basis requires a binary form");
    const int d = spec.d();
    const long k = d - 1; // number of basis cycles and of degree-(d-2) monomials
    if (static_cast<long>(roots.size()) < k)
        throw ArityMismatch("need at least d-1 roots");
    if (P.P.degree() != d - 2)
        throw DegreeMismatch("cycle polynomial must have degree d-2");

    std::vector<Polynomial> basis_polys;
    for (long i = 0; i < k; ++i)
        basis_polys.push_back(point_poly(P.ambient, Cyclo(roots[i])).P);

    const auto monos = monomial_basis(2, d - 2);
    std::vector<SparseVec> rows;
    std::vector<Cyclo> rhs;
    for (long j = 0; j < k; ++j) {
        SparseVec row;
        for (long i = 0; i < k; ++i) {
            Cyclo c = basis_polys[i].coeff(monos[j]);
            if (!c.is_zero())
                row.emplace_back(static_cast<int>(i), c);
        }
        rows.push_back(std::move(row));
        rhs.push_back(P.P.coeff(monos[j]));
    }
    std::vector<AugRow> aug;
    for (const SparseVec& r : rows)
        aug.push_back(AugRow{r, {}});
    if (rref(std::move(aug)).rank() < k)
        throw SingularSystem("point cycles are linearly dependent");
    auto sol = solve(rows, static_cast<int>(k), rhs);
    if (!sol)
        throw SingularSystem("cycle is not a combination of the point cycles");
    std::vector<Rat> out;
    for (const Cyclo& c : *sol) {
        auto r = c.as_rational();
        if (!r)
            throw SingularSystem("combination coefficients are not rational");
        out.push_back(*r);
    }
    return out;
}

CycleSpec join_poly(const CycleSpec& left, const CycleSpec& right) {
    const long n1 = left.ambient->nvars(), n2 = right.ambient->nvars();
    if (left.ambient->d() != right.ambient->d())
        throw DegreeMismatch("join requires equal degrees");
    Polynomial F = rename_variables(left.ambient->F(), 0, n1 + n2) +
                   rename_variables(right.ambient->F(), static_cast<int>(n1), n1 + n2);
    Polynomial P = rename_variables(left.P, 0, n1 + n2) *
                   rename_variables(right.P, static_cast<int>(n1), n1 + n2);
    return CycleSpec{make_spec(std::move(F)), std::move(P),
                     JoinProv{std::make_shared<const CycleSpec>(left),
                              std::make_shared<const CycleSpec>(right)}};
}

std::vector<long> hf_convolution(const std::vector<long>& h1, const std::vector<long>& h2) {
    auto trim = [](std::vector<long> v) {
        while (!v.empty() && v.back() == 0)
            v.pop_back();
        return v;
    };
    std::vector<long> a = trim(h1), b = trim(h2);
    if (a.empty() || b.empty())
        return {};
    std::vector<long> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

CycleSpec combination_poly(const std::vector<std::pair<Rat, CycleSpec>>& parts) {
    if (parts.empty())
        throw ArityMismatch("empty combination");
    const auto& ambient = parts.front().second.ambient;
    Polynomial sum(ambient->nvars());
    CombinationProv prov;
    for (const auto& [q, cyc] : parts) {
        if (cyc.ambient->nvars() != ambient->nvars() || cyc.ambient->F() != ambient->F())
            throw ArityMismatch("combination parts live on different forms");
        sum += Cyclo(q) * cyc.P;
        prov.parts.emplace_back(q, std::make_shared<const CycleSpec>(cyc));
    }
    if (sum.is_zero() || sv_is_zero(ambient->nf(sum)))
        throw ZeroClass();
    return CycleSpec{ambient, std::move(sum), std::move(prov)};
}

std::vector<long> hilbert_function(const CycleSpec& cycle) {
    return hilbert_function(*cycle.ambient, cycle.P);
}

namespace {

// Per-pair binary forms F_j of a form that is a sum of binary forms in the
// variable pairs (x_{2j}, x_{2j+1}); throws when F has a mixed term.
std::vector<Polynomial> pair_forms(const HypersurfaceSpec& spec) {
    const long pairs = spec.nvars() / 2;
    std::vector<std::map<Exponents, Cyclo>> parts(pairs);
    for (const auto& [e, c] : spec.F().terms()) {
        long j = -1;
        for (long i = 0; i < spec.nvars(); ++i)
            if (e[i] != 0) {
                if (j >= 0 && j != i / 2)
                    throw Error("form is not a sum of binary forms in variable pairs");
                j = i / 2;
            }
        parts[j][{e[2 * j], e[2 * j + 1]}] = c;
    }
    std::vector<Polynomial> out;
    for (auto& m : parts)
        out.emplace_back(2, std::move(m));
    return out;
}

} // namespace

LinearVerdict is_fake_linear(const CycleSpec& cycle) {
    const HypersurfaceSpec& spec = *cycle.ambient;
    if (spec.nvars() % 2 != 0)
        throw ArityMismatch("expected an even number of variables");
    std::vector<Polynomial> forms = pair_forms(spec);
    const long pairs = spec.nvars() / 2;
    const int d = spec.d();

    std::vector<long> profile(static_cast<size_t>(d) - 1, 1);
    std::vector<long> expected = profile;
    for (long j = 1; j < pairs; ++j)
        expected = hf_convolution(expected, profile);
    std::vector<long> actual = hilbert_function(spec, cycle.P);
    while (!actual.empty() && actual.back() == 0)
        actual.pop_back();
    if (actual != expected)
        return LinearVerdict::NotLinearType;

    GradedSubspace deg1 = colon_piece(spec, cycle.P, 1);
    if (deg1.rank() != pairs)
        return LinearVerdict::NotLinearType;
    bool all_on_form = true;
    for (const AugRow& row : deg1.basis.rows) {
        // Column i of the degree-1 basis is x_i; the row must be a linear
        // form in one variable pair.
        long j = -1;
        for (const auto& [col, c] : row.main) {
            (void)c;
            if (j >= 0 && j != col / 2)
                return LinearVerdict::NotLinearType;
            j = col / 2;
        }
        Cyclo a = sv_get(row.main, static_cast<int>(2 * j));
        Cyclo b = sv_get(row.main, static_cast<int>(2 * j + 1));
        // a*x_{2j} + b*x_{2j+1} vanishes at the point (-b : a).
        if (!evaluate(forms[j], {-b, a}).is_zero())
            all_on_form = false;
    }
    return all_on_form ? LinearVerdict::Linear : LinearVerdict::FakeLinear;
}

namespace {

// Interprets the RREF rows of a graded subspace as polynomials over the
// monomial basis of its degree.
std::vector<Polynomial> subspace_polys(const GradedSubspace& s, long nvars) {
    const auto monos = monomial_basis(nvars, s.degree, s.order);
    std::vector<Polynomial> out;
    for (const AugRow& row : s.basis.rows) {
        Polynomial p(nvars);
        for (const auto& [col, c] : row.main)
            p += Polynomial::monomial(nvars, monos[col], c);
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace

bool verify_tensor_decomposition(const HypersurfaceSpec& f, const HypersurfaceSpec& g,
                                 const Polynomial& P1, const Polynomial& P2) {
    const long n1 = f.nvars(), n2 = g.nvars();
    Polynomial PJ = rename_variables(P1, 0, n1 + n2) *
                    rename_variables(P2, static_cast<int>(n1), n1 + n2);
    return verify_tensor_decomposition(f, g, P1, P2, PJ);
}

bool verify_tensor_decomposition(const HypersurfaceSpec& f, const HypersurfaceSpec& g,
                                 const Polynomial& P1, const Polynomial& P2,
                                 const Polynomial& PJ) {
    if (f.d() != g.d())
        throw DegreeMismatch("join requires equal degrees");
    const long n1 = f.nvars(), n2 = g.nvars();
    HypersurfaceSpec join(rename_variables(f.F(), 0, n1 + n2) +
                          rename_variables(g.F(), static_cast<int>(n1), n1 + n2));

    std::vector<long> h1 = hilbert_function(f, P1);
    std::vector<long> h2 = hilbert_function(g, P2);
    std::vector<long> conv = hf_convolution(h1, h2);
    std::vector<long> hj = hilbert_function(join, PJ);
    while (!hj.empty() && hj.back() == 0)
        hj.pop_back();
    if (hj != conv)
        return false;

    const int s1 = f.socle_full() - P1.degree();
    const int s2 = g.socle_full() - P2.degree();
    for (int e = 0; e <= s1 + s2; ++e) {
        GradedSubspace colj = colon_piece(join, PJ, e);
        const auto monos = monomial_basis(n1 + n2, e, colj.order);
        std::map<Exponents, int> index;
        for (size_t i = 0; i < monos.size(); ++i)
            index[monos[i]] = static_cast<int>(i);

        std::vector<AugRow> lifted;
        auto add_products = [&](const std::vector<Polynomial>& us, int offset, long onv,
                                int other_deg, long other_offset) {
            for (const Polynomial& u : us) {
                Polynomial ug = rename_variables(u, offset, n1 + n2);
                for (const Exponents& m : monomial_basis(onv, other_deg)) {
                    Exponents gm(n1 + n2, 0);
                    for (long i = 0; i < onv; ++i)
                        gm[other_offset + i] = m[i];
                    Polynomial prod = ug * Polynomial::monomial(n1 + n2, gm);
                    SparseVec row;
                    for (const auto& [em, c] : prod.terms())
                        row.emplace_back(index.at(em), c);
                    std::sort(row.begin(), row.end(),
                              [](const auto& a, const auto& b) { return a.first < b.first; });
                    lifted.push_back(AugRow{std::move(row), {}});
                }
            }
        };
        for (int a = 0; a <= e; ++a) {
            const int b = e - a;
            add_products(subspace_polys(colon_piece(f, P1, a), n1), 0, n2, b, n1);
            add_products(subspace_polys(colon_piece(g, P2, b), n2),
                         static_cast<int>(n1), n1, a, 0);
        }
        RrefResult lref = rref(std::move(lifted));
        if (lref.rank() != colj.rank())
            return false;
        GradedSubspace lspan{e, static_cast<long>(monos.size()), colj.order, std::move(lref)};
        if (!colj.contains(lspan))
            return false;
    }
    return true;
}

} // namespace hodge
