#ifndef HODGE_CYCLES_HPP
#define HODGE_CYCLES_HPP

#include <memory>
#include <variant>
#include <vector>

#include "hodge/jacobian.hpp"

namespace hodge {

struct CycleSpec;

// Construction record of a cycle polynomial.
struct LinearProv {
    std::vector<Cyclo> c; // one parameter per variable pair
};
struct PointProv {
    Cyclo r;
};
struct FakePointProv {
    Rat c;
};
struct JoinProv {
    std::shared_ptr<const CycleSpec> left, right;
};
struct CombinationProv {
    std::vector<std::pair<Rat, std::shared_ptr<const CycleSpec>>> parts;
};
struct RawProv {};

using Provenance =
    std::variant<LinearProv, PointProv, FakePointProv, JoinProv, CombinationProv, RawProv>;

// A cycle polynomial attached to its ambient hypersurface, with the record
// of how it was built. All derived invariants (colon ideal, Hilbert
// function, verdicts) are invariant under nonzero scaling of P.
struct CycleSpec {
    std::shared_ptr<const HypersurfaceSpec> ambient;
    Polynomial P;
    Provenance prov = RawProv{};
};

// Product of telescoped quotients
// (x_{2j}^{d-1} - (c_j x_{2j+1})^{d-1}) / (x_{2j} - c_j x_{2j+1})
// on the Fermat form of degree d in n+2 variables; normalized scalar 1.
CycleSpec linear_cycle_poly(int d, int n, const std::vector<Cyclo>& c);

// Class polynomial of the point (r:1) on a binary form:
// (r dF/dx0 + dF/dx1) / (x0 - r x1). Throws RootMismatch unless F(r,1)=0.
CycleSpec point_poly(std::shared_ptr<const HypersurfaceSpec> Fbin, const Cyclo& r);

// Fake point at the non-root parameter c of a binary form with simple
// rational roots: (a dF/dx0 - b dF/dx1)/(x0 - c x1) with a = dF/dx1(c,1),
// b = dF/dx0(c,1). Throws RootCollision / NonRationalRoots.
CycleSpec fake_point_poly(std::shared_ptr<const HypersurfaceSpec> Fbin, const Rat& c);

// The rational roots r_i of a binary form monic in x0, with multiplicity;
// throws NonRationalRoots unless the form splits over Q with x0^d present.
std::vector<Rat> rational_roots(const Polynomial& binary_form);

// Unique rationals (q_1,...,q_{d-1}) with P = sum q_i * point_poly(r_i)
// over the first d-1 of the d given roots.
std::vector<Rat> express_in_point_basis(const CycleSpec& P, const std::vector<Rat>& roots);

// Join: ambient f(x) + g(y) over the concatenated variables, polynomial
// P1 * P2. Throws DegreeMismatch on unequal degrees.
CycleSpec join_poly(const CycleSpec& left, const CycleSpec& right);

// Convolution of Hilbert functions (trailing zeros trimmed).
std::vector<long> hf_convolution(const std::vector<long>& h1, const std::vector<long>& h2);

// Q-linear combination with multiplicities; throws ZeroClass when the sum
// falls into the Jacobian ideal.
CycleSpec combination_poly(const std::vector<std::pair<Rat, CycleSpec>>& parts);

enum class LinearVerdict { Linear, FakeLinear, NotLinearType };

// Classifies a cycle on a pair-structured form (F = sum of binary forms in
// the variable pairs (x_{2j}, x_{2j+1})): compares the Hilbert function
// against the linear-cycle profile, recovers the pair linear forms from
// the degree-1 colon piece, and tests whether each recovered point lies on
// its factor.
LinearVerdict is_fake_linear(const CycleSpec& cycle);

// Checks that the colon quotient of the join of (f, P1) and (g, P2) is the
// tensor product of the factor quotients, degree by degree.
bool verify_tensor_decomposition(const HypersurfaceSpec& f, const HypersurfaceSpec& g,
                                 const Polynomial& P1, const Polynomial& P2);

// Same check with the join polynomial supplied explicitly instead of the
// product P1 * P2 (renamed into the concatenated variables).
bool verify_tensor_decomposition(const HypersurfaceSpec& f, const HypersurfaceSpec& g,
                                 const Polynomial& P1, const Polynomial& P2,
                                 const Polynomial& PJ);

std::vector<long> hilbert_function(const CycleSpec& cycle);

std::shared_ptr<const HypersurfaceSpec> make_spec(Polynomial F);

// x0^d + ... + x_{nvars-1}^d.
Polynomial fermat_form(long nvars, int d);

} // namespace hodge

#endif
