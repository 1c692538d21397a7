#ifndef HODGE_POLYNOMIAL_HPP
#define HODGE_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "hodge/cyclo.hpp"

namespace hodge {

// Exponent vector of a monomial; length fixed by the ambient ring.
using Exponents = std::vector<int>;

int mono_degree(const Exponents& e);

enum class MonomialOrder { Grevlex, Lex };

// Strict "a comes before b" in the chosen descending term order
// (i.e. a is the larger monomial).
bool mono_greater(const Exponents& a, const Exponents& b, MonomialOrder ord);

// A homogeneous sparse polynomial over cyclotomic numbers. Zero is the
// unique polynomial with no terms; every nonzero polynomial has all terms
// of one common degree (enforced at construction).
class Polynomial {
public:
    explicit Polynomial(long nvars);
    Polynomial(long nvars, std::map<Exponents, Cyclo> terms);

    static Polynomial monomial(long nvars, Exponents e, Cyclo coeff = Cyclo(1));
    static Polynomial constant(long nvars, Cyclo value);
    static Polynomial variable(long nvars, int i); // x_i

    long nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return degree_; } // -1 for zero
    const std::map<Exponents, Cyclo>& terms() const { return terms_; }
    Cyclo coeff(const Exponents& e) const; // zero if absent

    // Largest monomial under the given order; polynomial must be nonzero.
    const Exponents& leading_monomial(MonomialOrder ord) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const; // DegreeMismatch/ArityMismatch
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const; // ArityMismatch
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    long nvars_;
    int degree_;
    std::map<Exponents, Cyclo> terms_;
};

Polynomial operator*(const Cyclo& c, const Polynomial& p);
inline Polynomial poly_scale(const Cyclo& c, const Polynomial& p) { return c * p; }

Polynomial partial_derivative(const Polynomial& p, int i);

// Exact quotient a / b: throws NotDivisible when division with remainder
// under `ord` leaves a nonzero remainder, DivisionByZero when b = 0.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b,
                        MonomialOrder ord = MonomialOrder::Grevlex);

// All monomials of degree e in nvars variables, largest first under `ord`.
std::vector<Exponents> monomial_basis(long nvars, int e,
                                      MonomialOrder ord = MonomialOrder::Grevlex);

Cyclo evaluate(const Polynomial& p, const std::vector<Cyclo>& point);

// Embeds p into a ring with new_nvars variables, x_i -> x_{i+offset}.
Polynomial rename_variables(const Polynomial& p, int offset, long new_nvars);

Polynomial poly_pow(const Polynomial& p, int k);

} // namespace hodge

#endif
