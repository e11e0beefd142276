/// @file relations.hpp
/// @brief Carrier-generic verification of the wreath Hecke presentation.
///
/// The checks are phrased against a minimal algebra interface (products, sums,
/// scalars, equality), so the same code certifies the defining relations for
/// regular-representation matrices and for the block-matrix carrier of the
/// Morita decomposition.

#pragma once

#include <string>
#include <vector>

#include "qh/field.hpp"
#include "qh/report.hpp"

namespace qh {

/// Verify the defining relations of the (degenerate when q = 1 and requested)
/// wreath Hecke algebra on n strands for the given generator images: braid
/// generators G[0..n-2], wreath generators T[0..n-1], polynomial generators
/// X[0..n-1] (X beyond position 1 must satisfy the defining recursion, which is
/// also checked).  The algebra interface A must provide a value type A::E and
/// members mul, add, sub, scaled, one, is_zero, eq.
template <class A>
Report check_yh_relations(A& alg, const FieldCfg& cfg, const Weight& wt, bool degenerate,
                          const std::vector<typename A::E>& G,
                          const std::vector<typename A::E>& T,
                          const std::vector<typename A::E>& X) {
    using E = typename A::E;
    const int n = static_cast<int>(T.size());
    const PrimeField& F = cfg.F;
    const std::uint32_t q = cfg.q;
    const std::uint32_t qm1 = F.sub(q, 1);
    Report rep;

    auto mul = [&](const E& a, const E& b) { return alg.mul(a, b); };
    auto pw = [&](const E& a, std::uint32_t k) {
        E r = alg.one();
        for (std::uint32_t s = 0; s < k; ++s) r = mul(r, a);
        return r;
    };
    // e_a = (1/d) sum_j t_a^j t_{a+1}^{-j}
    auto e_of = [&](int a) {
        E acc = alg.scaled(alg.one(), 0);
        for (std::uint32_t j = 0; j < cfg.d; ++j)
            acc = alg.add(acc, mul(pw(T[a], j), pw(T[a + 1], cfg.d - j)));
        return alg.scaled(acc, F.inv(cfg.d % F.modulus()));
    };
    std::vector<E> Eidem;
    for (int a = 0; a + 1 < n; ++a) Eidem.push_back(e_of(a));

    {
        Suite& s = rep.suite("wreath: t_a^d = 1, t's commute");
        for (int a = 0; a < n; ++a)
            s.check(alg.eq(pw(T[a], cfg.d), alg.one()), "t_" + std::to_string(a + 1) + "^d != 1");
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                s.check(alg.eq(mul(T[a], T[b]), mul(T[b], T[a])),
                        "t_" + std::to_string(a + 1) + " t_" + std::to_string(b + 1));
    }
    {
        Suite& s = rep.suite("wreath slide: t_b g_a = g_a t_{s_a(b)}");
        for (int a = 0; a + 1 < n; ++a)
            for (int b = 0; b < n; ++b) {
                int sb = (b == a) ? a + 1 : (b == a + 1 ? a : b);
                s.check(alg.eq(mul(T[b], G[a]), mul(G[a], T[sb])),
                        "t_" + std::to_string(b + 1) + " g_" + std::to_string(a + 1));
            }
    }
    {
        Suite& s = rep.suite(degenerate ? "quadratic: f_a^2 = 1"
                                        : "quadratic: g_a^2 = q + (q-1) g_a e_a");
        for (int a = 0; a + 1 < n; ++a) {
            E lhs = mul(G[a], G[a]);
            E rhs = degenerate
                        ? alg.one()
                        : alg.add(alg.scaled(alg.one(), q),
                                  alg.scaled(mul(G[a], Eidem[a]), qm1));
            s.check(alg.eq(lhs, rhs), "a = " + std::to_string(a + 1));
        }
    }
    {
        Suite& s = rep.suite("braid relations");
        for (int a = 0; a + 1 < n; ++a)
            for (int b = a + 2; b + 1 < n; ++b)
                s.check(alg.eq(mul(G[a], G[b]), mul(G[b], G[a])),
                        "distant g_" + std::to_string(a + 1) + " g_" + std::to_string(b + 1));
        for (int a = 0; a + 2 < n; ++a)
            s.check(alg.eq(mul(mul(G[a], G[a + 1]), G[a]), mul(mul(G[a + 1], G[a]), G[a + 1])),
                    "braid at a = " + std::to_string(a + 1));
    }
    if (n >= 2) {
        Suite& s = rep.suite(degenerate ? "polynomial: x_1 exchange"
                                        : "polynomial: X_1 g_1 X_1 g_1 = g_1 X_1 g_1 X_1");
        if (degenerate) {
            // f_1 x_2 = x_1 f_1 + e_1 covers the degenerate seed relation.
            s.check(alg.eq(mul(G[0], X[1]), alg.add(mul(X[0], G[0]), Eidem[0])),
                    "f_1 x_2 = x_1 f_1 + e_1");
        } else {
            s.check(alg.eq(mul(mul(mul(X[0], G[0]), X[0]), G[0]),
                           mul(mul(mul(G[0], X[0]), G[0]), X[0])),
                    "X_1 g_1 X_1 g_1");
        }
    }
    {
        Suite& s = rep.suite("polynomial commutations with X_1");
        for (int a = 1; a + 1 < n; ++a)
            s.check(alg.eq(mul(X[0], G[a]), mul(G[a], X[0])),
                    "X_1 g_" + std::to_string(a + 1));
        for (int b = 0; b < n; ++b)
            s.check(alg.eq(mul(X[0], T[b]), mul(T[b], X[0])),
                    "X_1 t_" + std::to_string(b + 1));
    }
    {
        Suite& s = rep.suite("cyclotomic relation at position 1");
        E prod = alg.one();
        for (std::uint32_t i = 0; i < cfg.e; ++i) {
            std::uint32_t eig = degenerate ? (i % F.modulus()) : F.pow(q, i);
            E fac = alg.sub(X[0], alg.scaled(alg.one(), eig));
            for (std::uint32_t m = 0; m < wt.at(i); ++m) prod = mul(prod, fac);
        }
        s.check(alg.is_zero(prod), "prod_i (X_1 - eigenvalue_i)^{Lambda_i} != 0");
    }
    {
        Suite& s = rep.suite(degenerate ? "recursion: x_{a+1} = f_a x_a f_a + f_a e_a"
                                        : "recursion: q X_{a+1} = g_a X_a g_a");
        for (int a = 0; a + 1 < n; ++a) {
            E lhs = degenerate ? X[a + 1] : alg.scaled(X[a + 1], q);
            E rhs = mul(mul(G[a], X[a]), G[a]);
            if (degenerate) rhs = alg.add(rhs, mul(G[a], Eidem[a]));
            s.check(alg.eq(lhs, rhs), "a = " + std::to_string(a + 1));
        }
    }
    {
        Suite& s = rep.suite("derived: X's commute, commute with t's, distant g's");
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                s.check(alg.eq(mul(X[a], X[b]), mul(X[b], X[a])),
                        "X_" + std::to_string(a + 1) + " X_" + std::to_string(b + 1));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                s.check(alg.eq(mul(X[a], T[b]), mul(T[b], X[a])),
                        "X_" + std::to_string(a + 1) + " t_" + std::to_string(b + 1));
        for (int a = 0; a + 1 < n; ++a)
            for (int b = 0; b < n; ++b)
                if (b != a && b != a + 1)
                    s.check(alg.eq(mul(G[a], X[b]), mul(X[b], G[a])),
                            "g_" + std::to_string(a + 1) + " X_" + std::to_string(b + 1));
    }
    {
        Suite& s = rep.suite(degenerate ? "derived: x exchange across f_a"
                                        : "derived: X exchange across g_a");
        for (int a = 0; a + 1 < n; ++a) {
            if (degenerate) {
                s.check(alg.eq(mul(X[a + 1], G[a]), alg.add(mul(G[a], X[a]), Eidem[a])),
                        "x_{a+1} f_a, a = " + std::to_string(a + 1));
                s.check(alg.eq(mul(X[a], G[a]), alg.sub(mul(G[a], X[a + 1]), Eidem[a])),
                        "x_a f_a, a = " + std::to_string(a + 1));
            } else {
                E corr = alg.scaled(mul(X[a + 1], Eidem[a]), qm1);
                s.check(alg.eq(mul(G[a], X[a + 1]), alg.add(mul(X[a], G[a]), corr)),
                        "g_a X_{a+1}, a = " + std::to_string(a + 1));
                s.check(alg.eq(mul(X[a + 1], G[a]), alg.add(mul(G[a], X[a]), corr)),
                        "X_{a+1} g_a, a = " + std::to_string(a + 1));
            }
        }
    }
    {
        Suite& s = rep.suite("e_a is a central idempotent for g_a");
        for (int a = 0; a + 1 < n; ++a) {
            s.check(alg.eq(mul(Eidem[a], Eidem[a]), Eidem[a]),
                    "e_a^2, a = " + std::to_string(a + 1));
            s.check(alg.eq(mul(G[a], Eidem[a]), mul(Eidem[a], G[a])),
                    "g_a e_a, a = " + std::to_string(a + 1));
        }
    }
    return rep;
}

}  // namespace qh
