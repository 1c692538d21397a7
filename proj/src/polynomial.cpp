#include "hodge/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hodge/errors.hpp"

namespace hodge {

int mono_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

bool mono_greater(const Exponents& a, const Exponents& b, MonomialOrder ord) {
    int da = mono_degree(a), db = mono_degree(b);
    if (ord == MonomialOrder::Lex) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
    // Graded reverse lexicographic: higher degree wins; at equal degree the
    // monomial whose last differing exponent is smaller is the larger one.
    if (da != db) return da > db;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

Polynomial::Polynomial(long nvars) : nvars_(nvars), degree_(-1) {
    if (nvars < 1) throw ArityMismatch("ring needs at least one variable");
}

Polynomial::Polynomial(long nvars, std::map<Exponents, Cyclo> terms)
    : nvars_(nvars), degree_(-1), terms_(std::move(terms)) {
    if (nvars < 1) throw ArityMismatch("ring needs at least one variable");
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (static_cast<long>(it->first.size()) != nvars_)
            throw ArityMismatch("monomial arity differs from ring arity");
        for (int x : it->first)
            if (x < 0) throw Error("negative exponent");
        if (it->second.is_zero()) {
            it = terms_.erase(it);
            continue;
        }
        int deg = mono_degree(it->first);
        if (degree_ == -1)
            degree_ = deg;
        else if (deg != degree_)
            throw DegreeMismatch("inhomogeneous polynomial");
        ++it;
    }
}

Polynomial Polynomial::monomial(long nvars, Exponents e, Cyclo coeff) {
    std::map<Exponents, Cyclo> t;
    t.emplace(std::move(e), std::move(coeff));
    return Polynomial(nvars, std::move(t));
}

Polynomial Polynomial::constant(long nvars, Cyclo value) {
    return monomial(nvars, Exponents(nvars, 0), std::move(value));
}

Polynomial Polynomial::variable(long nvars, int i) {
    if (i < 0 || i >= nvars) throw ArityMismatch("variable index out of range");
    Exponents e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, std::move(e));
}

Cyclo Polynomial::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Cyclo(0) : it->second;
}

const Exponents& Polynomial::leading_monomial(MonomialOrder ord) const {
    if (terms_.empty()) throw Error("zero polynomial has no leading monomial");
    const Exponents* best = &terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        if (mono_greater(e, *best, ord)) best = &e;
    return *best;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw ArityMismatch("adding polynomials from different rings");
    if (o.is_zero()) return *this;
    if (!is_zero() && degree_ != o.degree_)
        throw DegreeMismatch("adding homogeneous polynomials of different degrees");
    degree_ = o.degree_;
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    if (terms_.empty()) degree_ = -1;
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    return *this += -o;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw ArityMismatch("multiplying polynomials from different rings");
    Polynomial r(nvars_);
    if (is_zero() || o.is_zero()) return r;
    r.degree_ = degree_ + o.degree_;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(nvars_);
            for (long i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            Cyclo prod = ca * cb;
            auto [it, inserted] = r.terms_.emplace(std::move(e), std::move(prod));
            if (!inserted) {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    if (r.terms_.empty()) r.degree_ = -1;
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    auto jt = o.terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first || it->second != jt->second) return false;
    }
    return true;
}

Polynomial operator*(const Cyclo& c, const Polynomial& p) {
    if (c.is_zero()) return Polynomial(p.nvars());
    std::map<Exponents, Cyclo> t = p.terms();
    for (auto& [e, v] : t) v = c * v;
    return Polynomial(p.nvars(), std::move(t));
}

Polynomial partial_derivative(const Polynomial& p, int i) {
    if (i < 0 || i >= p.nvars()) throw ArityMismatch("variable index out of range");
    Polynomial r(p.nvars());
    std::map<Exponents, Cyclo> t;
    for (const auto& [e, c] : p.terms()) {
        if (e[i] == 0) continue;
        Exponents de = e;
        de[i] -= 1;
        t.emplace(std::move(de), Cyclo(e[i]) * c);
    }
    return Polynomial(p.nvars(), std::move(t));
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b, MonomialOrder ord) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.nvars() != b.nvars()) throw ArityMismatch("dividing polynomials from different rings");
    Polynomial q(a.nvars());
    Polynomial r = a;
    const Exponents& lb = b.leading_monomial(ord);
    const Cyclo cb = b.coeff(lb);
    while (!r.is_zero()) {
        const Exponents& lr = r.leading_monomial(ord);
        Exponents e(r.nvars());
        for (long i = 0; i < r.nvars(); ++i) {
            e[i] = lr[i] - lb[i];
            if (e[i] < 0) throw NotDivisible("no exact polynomial quotient exists");
        }
        Polynomial term = Polynomial::monomial(a.nvars(), std::move(e), r.coeff(lr) / cb);
        q += term;
        r -= term * b;
    }
    return q;
}

namespace {

void enumerate(long nvars, int e, int pos, Exponents& cur, std::vector<Exponents>& out) {
    if (pos == nvars - 1) {
        cur[pos] = e;
        out.push_back(cur);
        return;
    }
    for (int k = e; k >= 0; --k) {
        cur[pos] = k;
        enumerate(nvars, e - k, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

} // namespace

std::vector<Exponents> monomial_basis(long nvars, int e, MonomialOrder ord) {
    std::vector<Exponents> out;
    Exponents cur(nvars, 0);
    enumerate(nvars, e, 0, cur, out);
    std::sort(out.begin(), out.end(),
              [ord](const Exponents& a, const Exponents& b) { return mono_greater(a, b, ord); });
    return out;
}

Cyclo evaluate(const Polynomial& p, const std::vector<Cyclo>& point) {
    if (static_cast<long>(point.size()) != p.nvars())
        throw ArityMismatch("evaluation point arity differs from ring arity");
    Cyclo total(0);
    for (const auto& [e, c] : p.terms()) {
        Cyclo term = c;
        for (long i = 0; i < p.nvars(); ++i)
            if (e[i] > 0) term *= point[i].pow(e[i]);
        total += term;
    }
    return total;
}

Polynomial rename_variables(const Polynomial& p, int offset, long new_nvars) {
    if (offset < 0 || offset + p.nvars() > new_nvars)
        throw ArityMismatch("renamed variables fall outside the target ring");
    std::map<Exponents, Cyclo> t;
    for (const auto& [e, c] : p.terms()) {
        Exponents ne(new_nvars, 0);
        for (long i = 0; i < p.nvars(); ++i) ne[offset + i] = e[i];
        t.emplace(std::move(ne), c);
    }
    return Polynomial(new_nvars, std::move(t));
}

Polynomial poly_pow(const Polynomial& p, int k) {
    if (k < 0) throw Error("negative polynomial power");
    Polynomial r = Polynomial::constant(p.nvars(), Cyclo(1));
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

namespace {

std::string coeff_to_string(const Cyclo& c) {
    auto q = c.as_rational();
    if (q) return rat_to_string(*q);
    return "(" + c.to_string() + ")";
}

} // namespace

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    // Print largest monomial first under grevlex.
    std::vector<const Exponents*> order;
    for (const auto& [e, c] : terms_) order.push_back(&e);
    std::sort(order.begin(), order.end(), [](const Exponents* a, const Exponents* b) {
        return mono_greater(*a, *b, MonomialOrder::Grevlex);
    });
    std::ostringstream os;
    bool first = true;
    for (const Exponents* e : order) {
        Cyclo c = terms_.at(*e);
        auto q = c.as_rational();
        if (q && *q < 0) {
            os << (first ? "-" : " - ");
            c = -c;
        } else if (!first) {
            os << " + ";
        }
        std::string mono;
        for (long i = 0; i < nvars_; ++i) {
            if ((*e)[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i);
            if ((*e)[i] > 1) mono += "^" + std::to_string((*e)[i]);
        }
        bool unit = c.is_one();
        if (mono.empty()) {
            os << coeff_to_string(c);
        } else if (unit) {
            os << mono;
        } else {
            os << coeff_to_string(c) << "*" << mono;
        }
        first = false;
    }
    return os.str();
}

} // namespace hodge
