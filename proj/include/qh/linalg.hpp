/// @file linalg.hpp
/// @brief Dense exact linear algebra over F_p: matrices, univariate polynomials,
///        generalized eigenprojections, corner inverses, nilpotency indices,
///        truncated multivariate power series, and an incremental row-space.
///
/// The regular representations materialized here have dimension at most a few
/// hundred, so a dense kernel is the right tool; sparse triplets appear only in
/// the JSON export layer.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qh/field.hpp"

namespace qh {

/// Raised on spectral / invertibility failures.  `kind` is one of
/// "SpectrumIncomplete", "DuplicateEigenvalue", "SingularInCorner",
/// "NotNilpotent", "Singular".
struct LinalgError : std::runtime_error {
    std::string kind;
    LinalgError(std::string k, const std::string& what)
        : std::runtime_error(k + ": " + what), kind(std::move(k)) {}
};

/// Dense matrix over F_p, row major.
class FpMat {
public:
    FpMat() : rows_(0), cols_(0) {}
    FpMat(PrimeField F, int rows, int cols)
        : F_(F), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

    static FpMat identity(PrimeField F, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const PrimeField& field() const { return F_; }

    std::uint32_t& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::uint32_t at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const FpMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const FpMat& o) const { return !(*this == o); }

    FpMat operator+(const FpMat& o) const;
    FpMat operator-(const FpMat& o) const;
    FpMat operator*(const FpMat& o) const;
    FpMat scaled(std::uint32_t c) const;
    FpMat pow(std::uint64_t k) const;

    /// Column c as a vector.
    std::vector<std::uint32_t> col(int c) const;

    int rank() const;
    /// Inverse of a square matrix; throws LinalgError("Singular", ...) if singular.
    FpMat inverse() const;

private:
    PrimeField F_;
    int rows_, cols_;
    std::vector<std::uint32_t> a_;
};

/// Univariate polynomial over F_p, coefficient k of x^k; trailing zeros trimmed.
struct FpPoly {
    PrimeField F;
    std::vector<std::uint32_t> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    void trim();
    static FpPoly constant(PrimeField F, std::uint32_t v);
    /// (x - r)
    static FpPoly linear_root(PrimeField F, std::uint32_t r);
    bool operator==(const FpPoly& o) const { return c == o.c; }
    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    /// Quotient and remainder by a nonzero divisor.
    std::pair<FpPoly, FpPoly> divmod(const FpPoly& o) const;
    /// Evaluate at a matrix by Horner's rule.
    FpMat eval(const FpMat& M) const;
    std::uint32_t eval(std::uint32_t x) const;
};

/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
std::tuple<FpPoly, FpPoly, FpPoly> poly_ext_gcd(const FpPoly& a, const FpPoly& b);

/// Generalized eigenprojections of M for the given candidate spectrum: returns
/// P_s with sum P_s = 1, P_s P_t = delta, (M - s)^N P_s = 0, each P_s a
/// polynomial in M.  Throws LinalgError("SpectrumIncomplete") when the product
/// of (x - s)^N over the spectrum does not annihilate M, and
/// LinalgError("DuplicateEigenvalue") on repeated spectrum entries.
std::vector<FpMat> generalized_eigenprojections(const FpMat& M,
                                                const std::vector<std::uint32_t>& spectrum,
                                                int N);

/// Inverse of A inside the corner algebra E * End * E, for an idempotent E
/// commuting with A (A = E A E).  Computed as the global inverse of
/// A + (1 - E) cut back to the corner; throws LinalgError("SingularInCorner")
/// when A is not invertible in the corner.
FpMat corner_inverse(const FpMat& A, const FpMat& E);

/// Least k >= 0 with M^k = 0; throws LinalgError("NotNilpotent") when no such k
/// exists up to the matrix dimension.
int nilpotency_index(const FpMat& M);

/// Truncated multivariate power series over F_p: monomials of total degree
/// <= cap in `nv` variables, stored sparsely by exponent vector.  Supports the
/// exact inversion of unit-constant-term series needed for the intertwiner
/// coefficients (the variables are substituted by commuting nilpotents, so
/// truncation at the sum of nilpotency indices is exact).
class TruncSeries {
public:
    TruncSeries(PrimeField F, int nv, int cap);

    static TruncSeries constant(PrimeField F, int nv, int cap, std::uint32_t v);
    static TruncSeries variable(PrimeField F, int nv, int cap, int which);

    PrimeField field() const { return F_; }
    int nvars() const { return nv_; }
    int cap() const { return cap_; }
    std::uint32_t constant_term() const;

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries scaled(std::uint32_t c) const;
    /// Multiplicative inverse; requires a nonzero constant term.
    TruncSeries inverse() const;
    bool operator==(const TruncSeries& o) const;

    /// Substitute commuting matrices for the variables and multiply by E on the
    /// right (E typically an idempotent commuting with all the arguments).
    FpMat eval(const std::vector<FpMat>& vars, const FpMat& E) const;

    /// Coefficients, indexed by exponent vector (only the stored ones).
    const std::vector<std::pair<std::vector<int>, std::uint32_t>>& terms() const { return terms_; }
    void set_coeff(const std::vector<int>& expo, std::uint32_t v);

private:
    PrimeField F_;
    int nv_, cap_;
    std::vector<std::pair<std::vector<int>, std::uint32_t>> terms_;  // sorted by exponent
    void normalize();
};

/// Incremental row space over F_p with recorded combinations: vectors are
/// reduced against the pivots already present; `add` reports whether the vector
/// enlarged the span.  Used for closure computations and for solving
/// "express v in terms of the inserted generators".
class RowSpan {
public:
    RowSpan(PrimeField F, int width) : F_(F), width_(width) {}

    int rank() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }

    /// Insert v; returns true when independent of the current span.
    bool add(std::vector<std::uint32_t> v);
    /// Coordinates of v as a combination of the *inserted independent* vectors,
    /// or an empty optional when v is outside the span.
    std::optional<std::vector<std::uint32_t>> solve(std::vector<std::uint32_t> v) const;

private:
    PrimeField F_;
    int width_;
    std::vector<std::vector<std::uint32_t>> rows_;   // echelon rows
    std::vector<std::vector<std::uint32_t>> combo_;  // row_i = sum combo_i[j] * inserted_j
    std::vector<int> pivot_;
};

}  // namespace qh
