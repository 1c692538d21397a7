#ifndef HODGE_HYPERSURFACE_HPP
#define HODGE_HYPERSURFACE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hodge/linalg.hpp"
#include "hodge/polynomial.hpp"

namespace hodge {

// The Jacobian-quotient data of one polynomial in its own (small) set of
// variables. Pieces are computed lazily per degree and cached; all methods
// are safe for concurrent use.
class BlockRing {
public:
    BlockRing(Polynomial f, int d); // f lives in k = f.nvars() variables

    long k() const { return k_; }
    int d() const { return d_; }
    int socle() const { return socle_; } // (d-2)*k
    // True iff the quotient is Artinian with one-dimensional socle exactly
    // at socle().
    bool certified() const { return certified_; }

    long quotient_dim(int e) const;
    // Standard monomials (local exponent vectors) of degree e, largest
    // first in grevlex.
    const std::vector<Exponents>& std_monomials(int e) const;

    // Normal form of a local monomial: the residual over the standard
    // monomials of its degree, together with quotients Q_i such that
    //   x^a = residual + sum_i Q_i * df/dx_i.
    struct MonoNF {
        Polynomial residual;
        std::vector<Polynomial> quotients; // one per local variable
    };
    const MonoNF& mono_nf(const Exponents& a) const;

private:
    struct Piece {
        std::vector<Exponents> basis;      // degree-e monomials, grevlex desc
        std::map<Exponents, int> index;
        std::vector<Exponents> multipliers; // degree e-(d-1) monomials
        RrefResult jac;                     // tracked ideal piece
        std::vector<Exponents> std_monos;
    };
    const Piece& piece(int e) const;

    Polynomial f_;
    long k_;
    int d_;
    int socle_;
    bool certified_;
    std::vector<Polynomial> partials_;
    mutable std::mutex mtx_;
    mutable std::map<int, Piece> pieces_;
    mutable std::map<Exponents, MonoNF> nf_cache_;
};

// A homogeneous form F together with the graded data of its Jacobian ring,
// exploiting the decomposition of F into forms in disjoint variable sets:
// the quotient ring is the tensor product of the per-block quotients, so
// normal forms, dimensions and standard monomials are assembled blockwise.
class HypersurfaceSpec {
public:
    explicit HypersurfaceSpec(Polynomial F);

    long nvars() const { return nvars_; }
    int d() const { return d_; }
    int n() const { return static_cast<int>(nvars_) - 2; }
    const Polynomial& F() const { return F_; }
    const std::vector<Polynomial>& partials() const { return partials_; }

    int socle_full() const { return (d_ - 2) * static_cast<int>(nvars_); }
    int socle_cycle() const { return (d_ - 2) * (n() / 2 + 1); }

    bool smooth() const { return smooth_; }
    void require_smooth() const; // throws SmoothnessFailure

    // Variable partition induced by the supports of the terms of F;
    // singleton blocks for unused variables.
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const BlockRing& block_ring(size_t b) const { return *rings_[b]; }

    long quotient_dim(int e) const;
    const std::vector<Exponents>& std_monomials(int e) const;
    int std_index(int e, const Exponents& m) const; // -1 if not standard

    // Coordinates of the class of A over std_monomials(deg A).
    SparseVec nf(const Polynomial& A) const;

    struct NfQ {
        SparseVec coords;
        std::vector<Polynomial> quotients; // A = sum coords*std + sum Q_i dF/dx_i
    };
    NfQ nf_with_quotients(const Polynomial& A) const;

private:
    struct StdPiece {
        std::vector<Exponents> monos;
        std::map<Exponents, int> index;
    };
    const StdPiece& std_piece(int e) const;
    Polynomial globalize(const Polynomial& local, size_t b) const;
    // Splits a global exponent vector into per-block local vectors.
    std::vector<Exponents> split(const Exponents& e) const;
    Exponents merge(const std::vector<Exponents>& parts) const;

    long nvars_;
    int d_;
    Polynomial F_;
    std::vector<Polynomial> partials_;
    std::vector<std::vector<int>> blocks_;
    std::vector<std::unique_ptr<BlockRing>> rings_;
    bool smooth_;
    mutable std::mutex mtx_;
    mutable std::map<int, StdPiece> std_cache_;
};

} // namespace hodge

#endif
