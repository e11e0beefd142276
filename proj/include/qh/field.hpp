/// @file field.hpp
/// @brief Exact arithmetic in the prime field F_p and the derived ground-field
///        configuration (root of unity xi, deformation q, quantum characteristic e).
///
/// Everything downstream works over F_p for an odd prime p.  A configuration fixes
///   * d >= 1 and xi, a primitive d-th root of unity in F_p^x (canonically the
///     smallest residue of multiplicative order exactly d),
///   * q in F_p^x, and e = the quantum characteristic of q: the multiplicative
///     order of q when q != 1, and p itself when q = 1 (the degenerate case),
///   * optionally a square root of q, when one exists in F_p.
/// Residue indices live in I = Z/eZ and J = Z/dZ (J carried as {0..d-1} with the
/// natural total order).

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qh {

/// Raised when a requested ground-field configuration is inconsistent
/// (composite or even modulus, d not dividing p-1, q = 0, ...).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Arithmetic in F_p.  Scalars are canonical residues 0..p-1 stored in uint32_t;
/// intermediate products go through uint64_t, so p < 2^31 is safe (we only ever
/// use small primes).
class PrimeField {
public:
    PrimeField() : p_(0) {}
    explicit PrimeField(std::uint32_t p) : p_(p) {}

    std::uint32_t modulus() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;
    /// Inverse via Fermat; a must be nonzero.
    std::uint32_t inv(std::uint32_t a) const;
    /// Canonical residue of a signed integer.
    std::uint32_t from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }
    /// Multiplicative order of a nonzero residue.
    std::uint32_t order(std::uint32_t a) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

/// True iff n is prime (trial division; inputs here are tiny).
bool is_prime(std::uint32_t n);

/// The quantum characteristic of q in F_p^x: the multiplicative order of q if
/// q != 1, and p if q = 1.
std::uint32_t quantum_char(std::uint32_t q, std::uint32_t p);

/// Frozen ground-field data shared by every context.
struct FieldCfg {
    std::uint32_t p = 0;   ///< odd prime modulus
    std::uint32_t d = 1;   ///< order of the wreath factor; xi has order exactly d
    std::uint32_t xi = 1;  ///< smallest residue of multiplicative order d
    std::uint32_t q = 1;   ///< deformation parameter, nonzero
    std::uint32_t e = 0;   ///< quantum characteristic of q
    std::optional<std::uint32_t> sqrt_q;  ///< smallest square root of q, if any
    PrimeField F;

    bool degenerate_q() const { return q == 1; }
};

/// Validate (p, d, q) and derive xi, e and sqrt_q.  Throws ConfigError when
/// p is not an odd prime, d does not divide p-1 (no primitive d-th root then,
/// and 1/d must exist), or q = 0.
FieldCfg make_field_cfg(std::uint32_t p, std::uint32_t d, std::uint32_t q);

/// A dominant weight for the cyclotomic quotient: multiplicities Lambda_i >= 0
/// indexed by i in I = Z/eZ.  The level is the sum; the extension to K = I x J
/// used downstream is constant in j.
struct Weight {
    std::vector<std::uint32_t> mult;  ///< size e; mult[i] = Lambda_i

    std::uint32_t level() const {
        std::uint32_t s = 0;
        for (auto m : mult) s += m;
        return s;
    }
    std::uint32_t at(std::uint32_t i) const { return mult.at(i % mult.size()); }
};

/// The weight with Lambda_{i0} = level and all other multiplicities zero.
Weight fundamental_weight(std::uint32_t e, std::uint32_t i0, std::uint32_t level = 1);

}  // namespace qh
