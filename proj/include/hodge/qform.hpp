#ifndef HODGE_QFORM_HPP
#define HODGE_QFORM_HPP

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "hodge/cycles.hpp"

namespace hodge {

// An exact writing A = sum_i components[i] * dF/dx_i.
struct KoszulDecomposition {
    std::vector<Polynomial> components;
};

// Deterministic decomposition of a Jacobian-ideal element; throws
// NotInIdeal when A is not in the ideal.
KoszulDecomposition koszul_decompose(const HypersurfaceSpec& spec, const Polynomial& A);

// A value of the quadratic fundamental form: a representative polynomial
// and its canonical coset coordinates in (R^F / <P>) at its degree.
struct QffValue {
    Polynomial representative;
    int degree = 0;
    SparseVec class_coords;
    bool is_zero = true;
};

// q(G, H) for the cycle polynomial P: with G*P = sum Q_i dF/dx_i and
// H*P = sum R_i dF/dx_i, the class of sum_i (H dQ_i/dx_i - R_i dG/dx_i)
// in R^F/<P>. Independent of the decomposition choice. Throws
// NotInColonIdeal when G*P or H*P is not in the Jacobian ideal.
QffValue qff_pair(const HypersurfaceSpec& spec, const Polynomial& P, const Polynomial& G,
                  const Polynomial& H);

struct QffVanishing {
    bool vanishes = true;
    // First basis pair (by canonical order) with a nonzero class.
    std::optional<std::pair<Polynomial, Polynomial>> witness;
};

// Evaluates q on all unordered pairs from the canonical basis of the
// degree-e colon piece; pair evaluations may run concurrently, the witness
// is deterministic.
QffVanishing qff_vanishes_on_degree(const HypersurfaceSpec& spec, const Polynomial& P, int e,
                                    bool parallel = false);

// Checks the join identity
//   q(A1*G1 + A2*G2, B1*H1 + B2*H2)
//     = A1*B1*P2*q1(G1,H1) + A2*B2*P1*q2(G2,H2)
// in R^{f+g}/<P1*P2>. G1,H1 live over f; G2,H2 over g; A1,A2,B1,B2 over
// the concatenated variables.
bool qff_join_check(const HypersurfaceSpec& f, const HypersurfaceSpec& g, const Polynomial& P1,
                    const Polynomial& P2, const Polynomial& G1, const Polynomial& H1,
                    const Polynomial& G2, const Polynomial& H2, const Polynomial& A1,
                    const Polynomial& A2, const Polynomial& B1, const Polynomial& B2);

// Witness data for the rank computation behind the two-parameter
// combination of point cycles on the binary Fermat form.
struct Theorem4Report {
    bool degenerate = false;
    Cyclo det;       // determinant of the 3x3 matrix (q1(G,G), Q1, Q2)
    Cyclo reference; // (1/d) zeta^{3a0+3} (zeta^{a0} - zeta)^5 r^2 rc^2 (r - rc)
    Cyclo published; // zeta^{3a0+3} (zeta^{a0} - zeta)^3 r^2 rc^2 (r - rc);
                     // equals det * d / (zeta^{a0} - zeta)^2
    int sign = 0;    // det = sign * reference (0 when both vanish)
    bool nonzero = false;
};

// Builds the explicit determinant witness for degree d, odd exponent
// alpha0 in 3..2d-1 and multiplicities r, rc; d = 3 reports degenerate
// (the relevant graded piece is 1-dimensional).
Theorem4Report theorem4_witness(int d, int alpha0, const Rat& r, const Rat& rc);

enum class Theorem6Verdict { SmoothExpected, NotSmoothCertified, Degenerate };

struct Theorem6Report {
    Theorem6Verdict verdict = Theorem6Verdict::SmoothExpected;
    struct Factor {
        bool fake = false;
        Cyclo constant_class;  // class of q_i(x0 - c x1, x0 - c x1)
        Cyclo expected;        // d * F_i(c, 1)
        long multiplier_dim = 0; // dim (R^{F_i}/<P>)_{2d-5}
        bool certified = false;
    };
    std::vector<Factor> factors;
};

// Non-smoothness certificate for a sum of binary forms with the cycle
// joined from per-factor point data: each factor with a non-root
// parameter c_i contributes the nonzero constant class d*F_i(c_i,1) and a
// nonzero degree-(2d-5) multiplier space. d = 2 reports degenerate.
Theorem6Report theorem6_check(
    const std::vector<std::shared_ptr<const HypersurfaceSpec>>& F_list,
    const std::vector<Cyclo>& c_list);

} // namespace hodge

#endif
