#ifndef HODGE_JACOBIAN_HPP
#define HODGE_JACOBIAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "hodge/hypersurface.hpp"

namespace hodge {

// The degree-e piece of a graded ideal, as a canonical RREF basis over the
// monomial basis (largest monomial = column 0) of that degree.
struct GradedSubspace {
    int degree = 0;
    long ambient_dim = 0;
    MonomialOrder order = MonomialOrder::Grevlex;
    RrefResult basis;

    long rank() const { return basis.rank(); }
    bool operator==(const GradedSubspace& o) const;
    bool operator!=(const GradedSubspace& o) const { return !(*this == o); }
    bool contains(const GradedSubspace& o) const;
};

// Span of all monomial multiples of the generators in degree e.
GradedSubspace ideal_piece(const std::vector<Polynomial>& gens, const HypersurfaceSpec& spec,
                           int e, MonomialOrder ord = MonomialOrder::Grevlex);

bool smoothness_check(const HypersurfaceSpec& spec);

// Degree-e piece of the colon ideal (J^F : P) = {G : G*P in J^F}.
// Throws ZeroClass when P's class in the Jacobian quotient vanishes.
GradedSubspace colon_piece(const HypersurfaceSpec& spec, const Polynomial& P, int e,
                           MonomialOrder ord = MonomialOrder::Grevlex);

// Hilbert function of the colon quotient, degrees 0 .. sigma+1 where
// sigma = socle_full - deg P; the final entry is 0 for every valid input.
std::vector<long> hilbert_function(const HypersurfaceSpec& spec, const Polynomial& P);

struct GorensteinCertificate {
    bool pass = false;
    int socle = 0;
    std::vector<long> hf;
    std::optional<int> failing_degree;
    std::string reason;
};

// Certifies that the colon quotient is Artinian Gorenstein: vanishing
// beyond the socle, one-dimensional socle, and perfect multiplication
// pairings R_i x R_{sigma-i} -> R_sigma.
GorensteinCertificate is_artinian_gorenstein(const HypersurfaceSpec& spec, const Polynomial& P);

// Whether (J^F : P1) = (J^F : P2); computed both by degreewise subspace
// comparison and by proportionality of the classes of P1, P2, which must
// agree.
bool ideal_equal(const HypersurfaceSpec& spec, const Polynomial& P1, const Polynomial& P2);

// Whether Q lies in <gens> + J^F.
bool membership(const HypersurfaceSpec& spec, const std::vector<Polynomial>& gens,
                const Polynomial& Q);

// Determinant of the matrix of second partials of F.
Polynomial hessian_det(const HypersurfaceSpec& spec);

} // namespace hodge

#endif
