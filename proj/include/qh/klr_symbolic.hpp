/// @file klr_symbolic.hpp
/// @brief Symbolic (non-cyclotomic) quiver Hecke algebra over a finite vertex
///        set, with a straightening engine onto the PBW basis
///        { psi_w y^r e(k) : w in S_n (canonical words), r in N^n, k in K^n }.
///
/// The vertex set K is partitioned into d parts; the defining data is the
/// matrix of bivariate polynomials Q_{k,k'}(u, v) with Q_{k,k} = 0,
/// Q_{k,k'}(u, v) = Q_{k',k}(v, u), and Q_{k,k'} = 1 across distinct parts.
/// Products are computed by left-multiplying one generator letter at a time:
/// idempotents collapse or annihilate, dots slide through crossings picking up
/// +-1 corrections on equal residues, and crossings are resolved against the
/// canonical reduced word by walking the reduced-word graph, paying a
/// divided-difference correction (always an exact polynomial) per 3-braid
/// move and a Q-polynomial per length drop.
///
/// The coset elements psi_{pi_t} e(t), the central idempotents e(lambda) and
/// the matrix-decomposition maps Psi_lambda / Phi_lambda are built on top.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qh/linalg.hpp"
#include "qh/perm.hpp"
#include "qh/report.hpp"
#include "qh/yokonuma.hpp"  // AlgebraError

namespace qh {

/// Bivariate polynomial over F_p in (u, v), sparse by exponent pair.
struct BiPoly {
    PrimeField F;
    std::map<std::pair<int, int>, std::uint32_t> c;  ///< (deg_u, deg_v) -> coeff

    static BiPoly zero(PrimeField F) { return BiPoly{F, {}}; }
    static BiPoly constant(PrimeField F, std::uint32_t v);
    /// Monomial c * u^a v^b.
    static BiPoly monomial(PrimeField F, std::uint32_t coeff, int a, int b);

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    bool operator==(const BiPoly& o) const { return c == o.c; }
    /// Swap the roles of u and v.
    BiPoly flipped() const;
    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
};

/// A finite vertex set K partitioned into d parts, with the KLR coefficient
/// matrix Q.  Vertices are 0..nverts-1; part[v] in 0..d-1.
struct QuiverSpec {
    PrimeField F;
    int nverts = 0;
    int d = 1;
    std::vector<int> part;
    std::vector<std::vector<BiPoly>> Q;  ///< Q[k][k']

    /// Throws AlgebraError("InvalidQuiver") when Q_{k,k} != 0, the symmetry
    /// Q_{k,k'}(u,v) = Q_{k',k}(v,u) fails, or a cross-part entry is not 1.
    void validate() const;
};

/// The disjoint union over d parts of cyclic quivers on Z/eZ, with the
/// standard quiver matrix: 0 / 1 / v-u / u-v / -(u-v)^2 according to
/// equal / unlinked / -> / <- / <->.  Vertex (i, j) has id j*e + i.
QuiverSpec make_disjoint_cyclic_quiver(PrimeField F, int e, int d);

/// One PBW basis monomial psi_w y^r e(k); `rank` is the deterministic basis
/// rank of w (by length, then canonical-word lex), which drives term order.
struct SymKey {
    int rank;
    int w;
    std::vector<int> r;
    std::vector<int> k;

    bool operator<(const SymKey& o) const {
        return std::tie(rank, r, k) < std::tie(o.rank, o.r, o.k);
    }
    bool operator==(const SymKey& o) const {
        return rank == o.rank && r == o.r && k == o.k;
    }
};

/// Sparse element: PBW monomial -> nonzero scalar.
using SymElem = std::map<SymKey, std::uint32_t>;

/// One abstract generator letter for `straighten`.
struct SymLetter {
    enum class Kind { E, Y, PSI };
    Kind kind;
    int pos = 0;               ///< strand for Y/PSI (0-based)
    std::vector<int> k;        ///< vertex tuple for E
};

class SymAlg {
public:
    /// Throws AlgebraError("InvalidQuiver") on bad spec and
    /// AlgebraError("InfeasibleSize") when n > 5 or |K| > kcap.
    SymAlg(QuiverSpec spec, int n, int kcap = 6);

    const QuiverSpec& spec() const { return spec_; }
    const PermTable& perms() const { return St_; }
    int n() const { return n_; }

    SymElem zero() const { return {}; }
    /// 1 = sum over all k of e(k).
    SymElem unit() const;
    SymElem e_of(const std::vector<int>& k) const;
    SymElem add(SymElem x, const SymElem& y) const;
    SymElem scaled(SymElem x, std::uint32_t c) const;

    /// Left action of a permutation on tuples: (w . k)[w(a)] = k[a].
    std::vector<int> act(int w, const std::vector<int>& k) const;

    /// psi_{word} e(k) in PBW form; the word may be arbitrary (non-reduced,
    /// non-canonical).  Memoized.
    SymElem resolve_word(const Word& word, const std::vector<int>& k) const;

    /// Left multiplication by single generators.
    SymElem lmul_e(const std::vector<int>& k0, const SymElem& x) const;
    SymElem lmul_y(int b, const SymElem& x) const;
    SymElem lmul_psi(int a, const SymElem& x) const;

    SymElem product(const SymElem& A, const SymElem& B) const;

    /// Straighten an abstract generator word (applied left to right to 1).
    SymElem straighten(const std::vector<SymLetter>& word) const;

    /// Degree of a PBW monomial: 2|r| plus the crossing degrees along the
    /// canonical word of w.
    int term_degree(const SymKey& key) const;
    /// Cartan value of a vertex pair: 2 on the diagonal, else minus the total
    /// degree of Q_{k,k'}.
    int cartan_of(int k1, int k2) const;

    /// The J-tuple of parts of a vertex tuple.
    std::vector<int> part_tuple(const std::vector<int>& k) const;
    /// All vertex tuples with the given part tuple (K^t).
    std::vector<std::vector<int>> tuples_over(const std::vector<int>& t) const;

    /// psi_{pi_t} e(t) via the canonical reduced word of pi_t.
    SymElem psi_pi(const std::vector<int>& t) const;
    /// Test-mode variant with an arbitrary reduced word of pi_t; throws
    /// AlgebraError("NotReduced") when the word is not reduced for pi_t.
    SymElem psi_pi(const std::vector<int>& t, const Word& word) const;
    /// psi_{pi_t^{-1}} e(t^lambda).
    SymElem psi_pi_inverse(const std::vector<int>& t) const;
    /// psi_{pi} without a trailing idempotent (summed over all tuples).
    SymElem psi_perm_full(int w) const;

    /// e(lambda) = sum over t of shape lambda, k in K^t of e(k).
    SymElem block_idempotent_lambda(const Composition& lambda) const;

    SymKey make_key(int w, std::vector<int> r, std::vector<int> k) const;

private:
    QuiverSpec spec_;
    int n_;
    PermTable St_;
    mutable std::map<std::pair<Word, std::vector<int>>, SymElem> memo_;
    mutable std::map<std::tuple<int, Word, std::vector<int>>, SymElem> ymemo_;
    mutable std::uint64_t steps_ = 0;

    void bump_steps() const;
    std::vector<int> act_word(const Word& word, std::vector<int> k) const;
    /// y_b psi_{word} e(k) for a reduced suffix word (memoized walker).
    SymElem y_push(int b, const Word& word, const std::vector<int>& k) const;
    /// Apply a polynomial-in-three-dots correction and prefix letters.
    SymElem apply_prefix(const Word& prefix, SymElem x) const;
    void add_term(SymElem& x, const SymKey& key, std::uint32_t c) const;
};

/// The matrix-decomposition maps of the block e(lambda) H_n(Q):
/// Psi(x)_{t',t} = psi_{pi_{t'}} e(t') x e(t) psi_{pi_t^{-1}} and
/// Phi(M) = sum_{t',t} psi_{pi_{t'}^{-1}} M_{t',t} psi_{pi_t}.
class SymDecompMaps {
public:
    SymDecompMaps(const SymAlg& alg, Composition lambda);

    const std::vector<std::vector<int>>& row_tuples() const { return jtuples_; }

    /// Throws AlgebraError("SupportOutsideBlock") when x is not supported on
    /// e(lambda).
    std::vector<std::vector<SymElem>> Psi(const SymElem& x) const;
    SymElem Phi(const std::vector<std::vector<SymElem>>& M) const;

private:
    const SymAlg& alg_;
    Composition lambda_;
    std::vector<std::vector<int>> jtuples_;  ///< J^lambda, sorted
};

}  // namespace qh
