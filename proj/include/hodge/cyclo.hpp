#ifndef HODGE_CYCLO_HPP
#define HODGE_CYCLO_HPP

#include <optional>
#include <string>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

// Dense univariate polynomial over Q, coefficient of t^i at index i.
// Normalized: no trailing zero coefficients (zero polynomial = empty vector).
using UniPoly = std::vector<Rat>;

namespace uni {
UniPoly trim(UniPoly p);
int degree(const UniPoly& p); // -1 for zero
UniPoly add(const UniPoly& a, const UniPoly& b);
UniPoly sub(const UniPoly& a, const UniPoly& b);
UniPoly mul(const UniPoly& a, const UniPoly& b);
// Euclidean division by a monic divisor; returns quotient, stores remainder.
UniPoly divmod(const UniPoly& a, const UniPoly& b, UniPoly& rem);
} // namespace uni

long euler_phi(long m);

// The m-th cyclotomic polynomial, computed by recursive exact division of
// t^m - 1 and memoized. Monic of degree phi(m).
const UniPoly& cyclotomic_polynomial(long m);

// An element of Q(zeta_m), stored as phi(m) rational coefficients of the
// reduced representative in Q[t]/Phi_m(t), t = e^{2*pi*i/m}.
//
// The conductor of a result is the lcm of the operand conductors; no
// automatic conductor minimization is performed. Equality embeds both sides
// into the common field. Values are immutable in practice and safe to share
// between threads.
class Cyclo {
public:
    Cyclo(); // zero, conductor 1
    Cyclo(const Rat& value);
    Cyclo(long value);
    Cyclo(long conductor, std::vector<Rat> coeffs); // coeffs.size() == phi(conductor)

    static Cyclo zeta(long m, long k = 1); // zeta_m^k, canonical representative

    long conductor() const { return m_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    std::optional<Rat> as_rational() const;

    Cyclo operator-() const;
    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);

    Cyclo inv() const;              // throws DivisionByZero on zero
    Cyclo operator/(const Cyclo& o) const { return *this * o.inv(); }
    Cyclo pow(long k) const;        // negative k inverts

    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    // Re-expresses the element in Q(zeta_L); L must be a multiple of the
    // current conductor.
    Cyclo embedded(long L) const;

    std::string to_string() const; // textual grammar, e.g. "1/2 + 3*z(6)^2"

private:
    long m_;
    std::vector<Rat> c_;
};

inline Cyclo zeta_pow(long m, long k) { return Cyclo::zeta(m, k); }

} // namespace hodge

#endif
