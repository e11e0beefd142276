/// @file decomp.hpp
/// @brief The block-matrix decomposition of the cyclotomic wreath Hecke
///        algebra: for each d-composition lambda of n, an isomorphism
///        Psi_lambda between e(lambda) H and Mat_{m_lambda}(H_lambda) with
///        H_lambda the tensor product of d cyclotomic d = 1 factors; the
///        Lusztig-style matrix isomorphism on the wreath generators; the
///        level-one vanishing certificate; and the commutative-diagram check
///        relating the two isomorphism routes.
///
/// Psi_lambda is realized concretely: the closed-form images of the KLR
/// generators (e(k) |-> e(k*) E_{t,t} with k* = pi_t . k, and so on) seed a
/// linear correspondence between regular-representation matrices and block
/// matrices, which is closed under products and certified bijective by rank
/// counting; Phi_lambda is its computed linear inverse.

#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "qh/klr_model.hpp"
#include "qh/klr_symbolic.hpp"
#include "qh/linalg.hpp"
#include "qh/perm.hpp"
#include "qh/report.hpp"
#include "qh/yokonuma.hpp"

namespace qh {

/// One tensor factor: a d = 1 cyclotomic context on `nstrands` strands with
/// its KLR model, or the trivial one-dimensional algebra when nstrands = 0.
struct Factor {
    int nstrands = 0;
    std::shared_ptr<YContext> ctx;
    std::shared_ptr<KlrModel> model;
    int dim() const { return ctx ? ctx->dim() : 1; }
};

/// The tensor product H_{lambda_1} x ... x H_{lambda_d} of d = 1 cyclotomic
/// factors, with dense elements over the product basis (factor 0 is the most
/// significant digit of the mixed-radix index).
class TensorAlg {
public:
    using E = std::vector<std::uint32_t>;

    TensorAlg(const FieldCfg& cfg, const Weight& wt, const Composition& lambda,
              bool degenerate);

    const FieldCfg& cfg() const { return cfg_; }
    const std::vector<Factor>& factors() const { return factors_; }
    int dim() const { return dim_; }

    E zero() const { return E(dim_, 0); }
    E one() const;
    E add(const E& a, const E& b) const;
    E sub(const E& a, const E& b) const;
    E scaled(const E& a, std::uint32_t c) const;
    E mul(const E& a, const E& b) const;
    bool is_zero(const E& a) const;
    bool eq(const E& a, const E& b) const { return a == b; }

    /// Pure tensor of per-factor elements (trivial factors contribute {1}).
    E pure(const std::vector<std::vector<std::uint32_t>>& parts) const;

private:
    FieldCfg cfg_;
    std::vector<Factor> factors_;
    int dim_;
    std::vector<int> radix_;
    mutable std::vector<std::map<std::pair<int, int>, std::vector<std::uint32_t>>> tables_;

    const std::vector<std::uint32_t>& factor_product(int j, int p, int q) const;
};

/// A matrix over a tensor algebra, indexed by J^lambda.
using BlockE = std::vector<std::vector<TensorAlg::E>>;

/// Direct sum over all d-compositions lambda of Mat_{m_lambda}(H_lambda);
/// the carrier of the Lusztig-style matrix isomorphism.
class BigBlockAlg {
public:
    using E = std::vector<BlockE>;

    BigBlockAlg(const FieldCfg& cfg, const Weight& wt, int n, bool degenerate);

    const std::vector<Composition>& lambdas() const { return lambdas_; }
    const std::vector<std::shared_ptr<TensorAlg>>& tensors() const { return tensors_; }
    const std::vector<std::vector<std::vector<int>>>& jtuples() const { return jtuples_; }
    int n() const { return n_; }

    E zero() const;
    E one() const;
    E add(const E& a, const E& b) const;
    E sub(const E& a, const E& b) const;
    E scaled(const E& a, std::uint32_t c) const;
    E mul(const E& a, const E& b) const;
    bool is_zero(const E& a) const;
    bool eq(const E& a, const E& b) const { return a == b; }

private:
    FieldCfg cfg_;
    int n_;
    std::vector<Composition> lambdas_;
    std::vector<std::shared_ptr<TensorAlg>> tensors_;
    std::vector<std::vector<std::vector<int>>> jtuples_;
};

/// The images of the wreath generators under the Lusztig-style matrix
/// isomorphism: t_a diagonal with entries xi^{t_a}, X_a |-> X_{pi_t(a)}
/// E_{t,t}, and g_a |-> g_{pi_t(a)} E_{t,t} on t_a = t_{a+1} blocks plus
/// sqrt(q) E_{t, s_a t} across.  Throws AlgebraError("NoSquareRoot") when
/// sqrt(q) does not exist in F_p (degenerate q = 1 uses sqrt(q) = 1).
struct JpaImages {
    std::shared_ptr<BigBlockAlg> alg;
    std::vector<BigBlockAlg::E> G, T, X;
};
JpaImages jpa_map(const FieldCfg& cfg, const Weight& wt, int n, bool degenerate);

/// Verify that the images satisfy the defining wreath Hecke presentation in
/// the block-matrix carrier.
Report verify_jpa(const JpaImages& jpa, const FieldCfg& cfg, const Weight& wt,
                  bool degenerate);

/// One lambda-block of the cyclotomic decomposition.
struct DecompBlock {
    Composition lambda;
    std::vector<std::vector<int>> jtuples;  ///< J^lambda, sorted (matrix index)
    std::uint64_t m = 0;                    ///< m_lambda
    std::shared_ptr<TensorAlg> tensor;
    FpMat e_lambda;                         ///< sum of the shape-lambda e(k)

    /// Psi_lambda on an arbitrary matrix in the block; throws
    /// AlgebraError("SupportOutsideBlock") when the matrix is not in the span
    /// of e(lambda) H.
    BlockE Psi(const FpMat& x) const;
    /// The inverse map.
    FpMat Phi(const BlockE& b) const;

    // Linear correspondence data (filled by CycloDecomp).
    std::shared_ptr<RowSpan> left, right;
    std::vector<std::vector<std::uint32_t>> left_images, right_images;
    int model_dim = 0;

    std::vector<std::uint32_t> vec_of_block(const BlockE& b) const;
    BlockE block_of_vec(const std::vector<std::uint32_t>& v) const;
};

/// The full decomposition of a cyclotomic KLR model (Theorem-level object):
/// builds every lambda-block from the closed-form generator images and closes
/// the correspondence under multiplication.  Throws
/// AlgebraError("DimensionMismatch") when a block rank disagrees with
/// m_lambda^2 prod_j dim H_{lambda_j}.
class CycloDecomp {
public:
    explicit CycloDecomp(const KlrModel& model);

    const std::vector<DecompBlock>& blocks() const { return blocks_; }
    const DecompBlock& block_of(const Composition& lambda) const;

    /// Well-definedness, rank/dimension identities, multiplicativity on
    /// generator pairs, and Phi o Psi = id on generators.
    Report verify() const;

private:
    const KlrModel& model_;
    PermTable St_;
    std::vector<DecompBlock> blocks_;
    std::vector<std::vector<std::pair<FpMat, BlockE>>> gens_;  ///< per block
    mutable Report build_report_;

    void build_block(DecompBlock& blk, std::vector<std::pair<FpMat, BlockE>>& gens);
};

/// The commutative-diagram check: for every wreath generator x, applying the
/// matrix isomorphism and then the per-block inverse maps of the (symmetric
/// normalization) decomposition returns x itself.
Report diagram_check(const YContext& ctx);

/// Level-one vanishing certificate in the symbolic cyclotomic quotient with a
/// weight concentrated at the single vertex k0: every idempotent e(k) whose
/// tuple leaves the part of k0 is certified zero, by propagating the
/// cyclotomic base case through verified psi_a^2 e(k) = e(k) steps.
Report level_one_vanishing(const SymAlg& alg, int k0);

}  // namespace qh
