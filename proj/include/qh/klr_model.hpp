/// @file klr_model.hpp
/// @brief KLR (quiver Hecke) generators realized inside the regular
///        representation of the wreath Hecke algebra, in both directions.
///
/// From the generator matrices of the wreath Hecke algebra we build:
///   * the joint generalized eigenprojections e(i, j) of the commuting family
///     {X_a, t_a} (X_a spectrum: powers of q; t_a spectrum: powers of xi),
///   * the nilpotent dots y_a = sum_i (1 - q^{-i_a} X_a) e(i)
///     (degenerate: y_a = sum_i (x_a - i_a) e(i)),
///   * intertwiners Phi_a = sum_k (g_a + P_a(k)) e(k) and the crossings
///     psi_a = sum_k Phi_a Q_a(k)^{-1} e(k),
/// where P_a, Q_a are power series in (y_a, y_{a+1}) evaluated exactly thanks
/// to nilpotency.  The quiver on K = I x J is the disjoint union over J of
/// cyclic quivers on I = Z/eZ; crossings between distinct J-components carry
/// the unit coefficients f_{a,j} (q below / 1 above the diagonal, or sqrt(q)
/// twice in the symmetric normalization).
///
/// The reverse direction rebuilds g_a = sum_k (psi_a Q_a(k) - P_a(k)) e(k),
/// t_a = sum_j xi^{j_a} e(j), X_a = sum_i q^{i_a}(1 - y_a) e(i), giving the
/// two mutually inverse isomorphisms verified by the round-trip suite.

#pragma once

#include <map>
#include <vector>

#include "qh/linalg.hpp"
#include "qh/report.hpp"
#include "qh/yokonuma.hpp"

namespace qh {

/// A residue tuple in K^n = (I x J)^n, stored as parallel i / j vectors.
struct KTuple {
    std::vector<int> i, j;

    bool operator<(const KTuple& o) const { return std::tie(i, j) < std::tie(o.i, o.j); }
    bool operator==(const KTuple& o) const { return i == o.i && j == o.j; }
    KTuple swapped(int a) const {
        KTuple t = *this;
        std::swap(t.i[a], t.i[a + 1]);
        std::swap(t.j[a], t.j[a + 1]);
        return t;
    }
};

/// Arrow relation between two vertices of the quiver on K.
enum class Arrow {
    Same,     ///< k = k'
    None,     ///< no arrows (including distinct J-components)
    To,       ///< k -> k'
    From,     ///< k <- k'
    Both,     ///< k <-> k' (cyclic quiver with e = 2)
};

/// Arrow relation in the disjoint union of cyclic quivers Gamma_e over J.
Arrow arrow_between(int i1, int j1, int i2, int j2, std::uint32_t e);

/// Cartan value c_{k,k'}: 2 / 0 / -1 / -2 for Same / None / single arrow / Both.
int cartan(Arrow rel);

/// The KLR generators materialized as matrices in a regular representation.
struct KlrModel {
    FieldCfg cfg;
    Weight wt;
    int n = 0;
    int dim = 0;
    bool degenerate = false;
    bool symmetric_f = false;

    std::vector<FpMat> G, T, X;  ///< the wreath Hecke generator matrices

    std::map<KTuple, FpMat> eK;                 ///< nonzero e(i, j) only
    std::map<std::vector<int>, FpMat> eI, eJ;   ///< nonzero marginals
    std::vector<FpMat> Y;                       ///< dots y_a
    std::vector<FpMat> Phi;                     ///< intertwiners Phi_a
    std::vector<FpMat> Psi;                     ///< crossings psi_a
    std::vector<int> nil;                       ///< nilpotency index of y_a
    int cap = 0;                                ///< series truncation bound

    const PrimeField& F() const { return cfg.F; }
    FpMat id() const { return FpMat::identity(cfg.F, dim); }
    FpMat zero() const { return FpMat(cfg.F, dim, dim); }
    /// e(k), or the zero matrix when the weight space is absent.
    FpMat e_of(const KTuple& k) const;

    /// The unit scalar f_{a,j} attached to a crossing between distinct
    /// J-components (depends only on the order of j_a, j_{a+1}).
    std::uint32_t f_scalar(int ja, int jb) const;

    /// Q_a(k) and P_a(k) as truncated series in (y_a, y_{a+1}).
    TruncSeries q_series(const KTuple& k, int a) const;
    TruncSeries p_series(const KTuple& k, int a) const;
    /// Evaluated on (y_a, y_{a+1}) against e(k).
    FpMat q_mat(const KTuple& k, int a) const;
    FpMat p_mat(const KTuple& k, int a) const;
    FpMat q_inv_mat(const KTuple& k, int a) const;
};

/// Build the model from explicit generator matrices of a faithful
/// representation.  Throws AlgebraError("NoSquareRoot") when symmetric_f is
/// requested but q has no square root in F_p.
KlrModel build_klr_model(const FieldCfg& cfg, const Weight& wt, int n, bool degenerate,
                         bool symmetric_f, std::vector<FpMat> G, std::vector<FpMat> T,
                         std::vector<FpMat> X);
/// Convenience: build from the regular representation of a context.
KlrModel build_klr_model(const YContext& ctx, bool symmetric_f = false);

/// The idempotent suite: resolution of unity, orthogonality, centrality of the
/// content idempotents e(alpha), and the marginal identity e(i) e(j) = e(i, j).
Report verify_idempotents(const KlrModel& m);

/// The full defining relation set of the cyclotomic quiver Hecke algebra,
/// checked exhaustively over the nonzero weight spaces, with the quadratic and
/// braid relations in both the generic (Q-polynomial) and the specialized
/// per-arrow forms.
Report verify_klr_relations(const KlrModel& m);

/// Corner and intertwiner lemmas: behaviour of g_a, Phi_a, psi_a on the
/// J-graded weight spaces, the scalar identity f_{a,j} f_{a,s_a j} = q, and
/// the formal twist identities for the Q- and P-series.
Report verify_intertwiner_lemmas(const KlrModel& m);

/// The reconstructed wreath Hecke generators (the reverse direction).
struct YhImages {
    std::vector<FpMat> G, T, X;
};
YhImages yh_generators_from_klr(const KlrModel& m);

/// Round trip: reconstructing the wreath generators from the KLR generators
/// returns the originals, and rebuilding the KLR generators from the
/// reconstructed wreath generators returns the same idempotents, dots and
/// crossings.
Report roundtrip_check(const KlrModel& m);

/// Degree homogeneity audit: every defining relation instance is homogeneous
/// for deg e(k) = 0, deg y_a e(k) = 2, deg psi_a e(k) = -c_{k_a, k_{a+1}}.
Report grading_audit(const KlrModel& m);

}  // namespace qh
