/// @file field.cpp
/// @brief Prime-field arithmetic and ground-field configuration.

#include "qh/field.hpp"

namespace qh {

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t k) const {
    std::uint32_t r = 1 % p_;
    std::uint32_t b = a % p_;
    while (k) {
        if (k & 1) r = mul(r, b);
        b = mul(b, b);
        k >>= 1;
    }
    return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("PrimeField::inv of zero");
    return pow(a, p_ - 2);
}

std::uint32_t PrimeField::order(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("PrimeField::order of zero");
    std::uint32_t k = 1;
    std::uint32_t x = a;
    while (x != 1) {
        x = mul(x, a);
        ++k;
        if (k > p_) throw std::logic_error("order loop exceeded group size");
    }
    return k;
}

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t f = 2; static_cast<std::uint64_t>(f) * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

std::uint32_t quantum_char(std::uint32_t q, std::uint32_t p) {
    PrimeField F(p);
    if (q % p == 1) return p;
    return F.order(q % p);
}

FieldCfg make_field_cfg(std::uint32_t p, std::uint32_t d, std::uint32_t q) {
    if (!is_prime(p) || p == 2)
        throw ConfigError("modulus p = " + std::to_string(p) + " is not an odd prime");
    if (d == 0) throw ConfigError("d must be positive");
    if ((p - 1) % d != 0)
        throw ConfigError("F_" + std::to_string(p) + " has no primitive " +
                          std::to_string(d) + "-th root of unity (d must divide p-1)");
    q %= p;
    if (q == 0) throw ConfigError("q must be a unit in F_p");

    FieldCfg cfg;
    cfg.p = p;
    cfg.d = d;
    cfg.q = q;
    cfg.F = PrimeField(p);
    cfg.e = quantum_char(q, p);

    // xi: smallest residue of multiplicative order exactly d.
    cfg.xi = 0;
    for (std::uint32_t a = 1; a < p; ++a) {
        if (cfg.F.order(a) == d) {
            cfg.xi = a;
            break;
        }
    }
    if (cfg.xi == 0) throw ConfigError("no residue of order d found");  // unreachable

    for (std::uint32_t s = 1; s < p; ++s) {
        if (cfg.F.mul(s, s) == q) {
            cfg.sqrt_q = s;
            break;
        }
    }
    return cfg;
}

Weight fundamental_weight(std::uint32_t e, std::uint32_t i0, std::uint32_t level) {
    Weight wt;
    wt.mult.assign(e, 0);
    wt.mult.at(i0 % e) = level;
    return wt;
}

}  // namespace qh
