/// @file yokonuma.hpp
/// @brief Exact materialization of the cyclotomic Yokonuma-Hecke algebra over F_p
///        (and its degenerate q = 1 analogue) on the monomial basis g_w X^u t^v.
///
/// The algebra of level l = |Lambda| on n strands has basis
///     { g_w X^u t^v : w in S_n, 0 <= u_a < l, v_a in Z/dZ },
/// of dimension l^n d^n n!.  Elements are dense coefficient vectors over this
/// basis; multiplication rewrites products into normal form by the exchange
/// rules (pushing braid generators left, X's into range via the cyclotomic
/// relation at position 1 and the recursion q X_{a+1} = g_a X_a g_a, and t's to
/// the right), memoizing every basis-times-generator product.
///
/// In the degenerate case the braid generators square to 1 and the exchange
/// rules acquire the additive correction e_a = (1/d) sum_j t_a^j t_{a+1}^{-j}.

#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qh/field.hpp"
#include "qh/linalg.hpp"
#include "qh/perm.hpp"
#include "qh/report.hpp"

namespace qh {

/// Raised by the algebra engines.  `kind` is one of "InfeasibleSize",
/// "NonTerminating".
struct AlgebraError : std::runtime_error {
    std::string kind;
    AlgebraError(std::string k, const std::string& what)
        : std::runtime_error(k + ": " + what), kind(std::move(k)) {}
};

/// One generator letter: a braid generator g_a (f_a when degenerate), a
/// polynomial generator X_a (x_a), or a power of a wreath generator t_a.
/// Positions are 0-based; for G, pos ranges over 0..n-2.
struct GenLetter {
    enum class Kind { G, X, T };
    Kind kind;
    int pos;
    int exp = 1;  ///< used by T only, taken mod d
};
using GenWord = std::vector<GenLetter>;

/// A basis monomial g_w X^u t^v.
struct BasisLabel {
    int w;               ///< permutation id in the context's PermTable
    std::vector<int> u;  ///< exponents of X_1..X_n, each in 0..l-1
    std::vector<int> v;  ///< exponents of t_1..t_n, each in 0..d-1
};

/// Dense coefficient vector over the monomial basis.
using Elem = std::vector<std::uint32_t>;

class YContext {
public:
    /// Builds the context; `degenerate` selects the q = 1 degenerate
    /// presentation and requires cfg.q == 1.  Throws AlgebraError
    /// ("InfeasibleSize") when the dimension exceeds the desk-scale cap.
    YContext(FieldCfg cfg, int n, Weight weight, bool degenerate = false);

    const FieldCfg& cfg() const { return cfg_; }
    const Weight& weight() const { return wt_; }
    const PermTable& perms() const { return St_; }
    int n() const { return n_; }
    int level() const { return ell_; }
    int dim() const { return dim_; }
    bool degenerate() const { return degenerate_; }

    /// Basis order: by (length, canonical word) rank of w, then u
    /// lexicographically, then v lexicographically.
    int basis_index(const BasisLabel& b) const;
    BasisLabel basis_label(int idx) const;
    /// The generator word spelling a basis monomial (g's of the canonical word,
    /// then X's, then t's).
    GenWord basis_word(int idx) const;

    Elem zero() const { return Elem(dim_, 0); }
    Elem one() const;
    Elem basis_elem(int idx) const;
    Elem gen_g(int a) const;  ///< g_a (f_a when degenerate)
    Elem gen_t(int a) const;
    Elem gen_x(int a) const;  ///< X_a (x_a when degenerate)
    Elem idem_e(int a) const; ///< e_a = (1/d) sum_j t_a^j t_{a+1}^{-j}

    Elem add(const Elem& x, const Elem& y) const;
    Elem sub(const Elem& x, const Elem& y) const;
    Elem scaled(const Elem& x, std::uint32_t c) const;

    /// Right-multiply by a single generator letter (memoized per basis term).
    Elem mul_letter(const Elem& x, GenLetter L) const;
    Elem mul_word(Elem x, const GenWord& w) const;
    /// Algebra product.
    Elem mul(const Elem& x, const Elem& y) const;

    /// Left-multiplication matrix (the regular representation).
    FpMat rep(const Elem& x) const;
    /// Recover an element from its regular-representation matrix (the column
    /// over the identity basis monomial).
    Elem from_matrix(const FpMat& M) const { return M.col(0); }

    /// The monic polynomial relation at position 1: X_1^l = sum_m red[m] X_1^m
    /// (the expanded cyclotomic relation prod_i (X_1 - q^i)^{Lambda_i} = 0,
    /// with eigenvalues i itself in the degenerate case).
    const std::vector<std::uint32_t>& x1_reduction() const { return red_; }

private:
    FieldCfg cfg_;
    Weight wt_;
    int n_, ell_, dim_;
    bool degenerate_;
    PermTable St_;
    std::vector<std::uint32_t> red_;
    std::uint32_t inv_d_, inv_q_;
    mutable std::unordered_map<std::uint64_t, Elem> memo_;
    mutable std::uint64_t steps_ = 0;

    std::uint64_t letter_key(int idx, GenLetter L) const;
    const Elem& basis_letter(int idx, GenLetter L) const;
    void bump_steps() const;
};

/// Machine check of the defining presentation (braid/wreath/polynomial exchange
/// relations and the cyclotomic relation) plus the derived exchange identities,
/// all verified as identities of regular-representation matrices.
Report check_presentation(const YContext& ctx);

/// Seeded associativity probe: (b_i b_j) b_k = b_i (b_j b_k) on random basis
/// triples, plus rep(x y) = rep(x) rep(y) on random basis pairs.
Report associativity_probe(const YContext& ctx, std::uint64_t seed, int samples);

}  // namespace qh
