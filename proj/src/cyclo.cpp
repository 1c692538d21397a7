#include "hodge/cyclo.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hodge/errors.hpp"

namespace hodge {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    try {
        Rat r(text);
        if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational '" + text + "'");
    }
}

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

namespace uni {

UniPoly trim(UniPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

UniPoly add(const UniPoly& a, const UniPoly& b) {
    UniPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trim(std::move(r));
}

UniPoly sub(const UniPoly& a, const UniPoly& b) {
    UniPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return trim(std::move(r));
}

UniPoly mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return trim(std::move(r));
}

UniPoly divmod(const UniPoly& a, const UniPoly& b, UniPoly& rem) {
    if (b.empty()) throw DivisionByZero("univariate division by zero");
    rem = a;
    if (a.size() < b.size()) return {};
    UniPoly q(a.size() - b.size() + 1, Rat(0));
    const Rat& lead = b.back();
    for (int i = static_cast<int>(rem.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
        if (rem[i] == 0) continue;
        Rat f = rem[i] / lead;
        q[i - (b.size() - 1)] = f;
        for (size_t j = 0; j < b.size(); ++j) {
            rem[i - (b.size() - 1) + j] -= f * b[j];
        }
    }
    rem = trim(std::move(rem));
    return trim(std::move(q));
}

} // namespace uni

long euler_phi(long m) {
    long result = m;
    long n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const UniPoly& cyclotomic_polynomial(long m) {
    if (m < 1) throw Error("cyclotomic polynomial needs m >= 1");
    static std::map<long, UniPoly> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;

    // Phi_m = (t^m - 1) / prod_{k | m, k < m} Phi_k, computed without
    // recursive locking by resolving divisors from small to large.
    std::function<const UniPoly&(long)> phi = [&](long mm) -> const UniPoly& {
        auto found = memo.find(mm);
        if (found != memo.end()) return found->second;
        UniPoly num(mm + 1, Rat(0));
        num[0] = -1;
        num[mm] = 1;
        for (long k = 1; k < mm; ++k) {
            if (mm % k != 0) continue;
            UniPoly rem;
            num = uni::divmod(num, phi(k), rem);
            if (!rem.empty()) throw Error("cyclotomic division left a remainder");
        }
        return memo.emplace(mm, std::move(num)).first->second;
    };
    return phi(m);
}

namespace {

UniPoly mod_phi(const UniPoly& p, long m) {
    UniPoly rem;
    uni::divmod(p, cyclotomic_polynomial(m), rem);
    return rem;
}

std::vector<Rat> pad(UniPoly p, long len) {
    p.resize(len, Rat(0));
    return p;
}

} // namespace

Cyclo::Cyclo() : m_(1), c_(1, Rat(0)) {}

Cyclo::Cyclo(const Rat& value) : m_(1), c_(1, value) {}

Cyclo::Cyclo(long value) : m_(1), c_(1, Rat(value)) {}

Cyclo::Cyclo(long conductor, std::vector<Rat> coeffs) : m_(conductor), c_(std::move(coeffs)) {
    if (m_ < 1) throw Error("conductor must be positive");
    if (static_cast<long>(c_.size()) != euler_phi(m_))
        throw Error("coefficient vector must have length phi(m)");
}

Cyclo Cyclo::zeta(long m, long k) {
    if (m < 1) throw Error("conductor must be positive");
    k %= m;
    if (k < 0) k += m;
    UniPoly p(k + 1, Rat(0));
    p[k] = 1;
    return Cyclo(m, pad(mod_phi(p, m), euler_phi(m)));
}

bool Cyclo::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclo::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::optional<Rat> Cyclo::as_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return std::nullopt;
    return c_[0];
}

Cyclo Cyclo::embedded(long L) const {
    if (L == m_) return *this;
    if (L % m_ != 0) throw Error("embedding target must be a multiple of the conductor");
    long stride = L / m_;
    UniPoly p;
    p.resize((c_.size() - 1) * stride + 1, Rat(0));
    bool any = false;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != 0) {
            p[i * stride] = c_[i];
            any = true;
        }
    }
    if (!any) p.clear();
    return Cyclo(L, pad(mod_phi(p, L), euler_phi(L)));
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    long L = std::lcm(m_, o.m_);
    Cyclo a = embedded(L), b = o.embedded(L);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
    long L = std::lcm(m_, o.m_);
    Cyclo a = embedded(L), b = o.embedded(L);
    UniPoly prod = uni::mul(uni::trim(a.c_), uni::trim(b.c_));
    return Cyclo(L, pad(mod_phi(prod, L), euler_phi(L)));
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    if (m_ == o.m_) {
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    *this = *this + o;
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    if (m_ == o.m_) {
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    *this = *this - o;
    return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    *this = *this * o;
    return *this;
}

Cyclo Cyclo::inv() const {
    if (is_zero()) throw DivisionByZero("inverting zero cyclotomic number");
    // Extended Euclid in Q[t] against Phi_m: u * a + v * Phi = 1.
    UniPoly a = uni::trim(c_);
    UniPoly b = cyclotomic_polynomial(m_);
    UniPoly u0{Rat(1)}, u1{};
    UniPoly r0 = a, r1 = b;
    while (!r1.empty()) {
        // Make r1 monic for divmod.
        Rat lead = r1.back();
        UniPoly r1m = r1;
        for (auto& x : r1m) x /= lead;
        UniPoly rem;
        UniPoly q = uni::divmod(r0, r1m, rem);
        for (auto& x : q) x /= lead;
        UniPoly u2 = uni::sub(u0, uni::mul(q, u1));
        r0 = r1;
        r1 = rem;
        u0 = u1;
        u1 = u2;
    }
    // r0 = gcd (a nonzero constant, since Phi_m is irreducible and a != 0 mod Phi_m).
    if (uni::degree(r0) != 0) throw DivisionByZero("element is a zero divisor (internal error)");
    Rat g = r0[0];
    for (auto& x : u0) x /= g;
    return Cyclo(m_, pad(mod_phi(u0, m_), euler_phi(m_)));
}

Cyclo Cyclo::pow(long k) const {
    Cyclo base = *this;
    if (k < 0) {
        base = inv();
        k = -k;
    }
    Cyclo result(Rat(1));
    while (k > 0) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

bool Cyclo::operator==(const Cyclo& o) const {
    if (m_ == o.m_) return c_ == o.c_;
    long L = std::lcm(m_, o.m_);
    return embedded(L).c_ == o.embedded(L).c_;
}

std::string Cyclo::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat v = c_[i];
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (i == 0) {
            os << rat_to_string(v);
        } else {
            if (v != 1) os << rat_to_string(v) << "*";
            os << "z(" << m_ << ")";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace hodge
