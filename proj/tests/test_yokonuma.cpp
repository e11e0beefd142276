/// @file test_yokonuma.cpp
/// @brief The wreath Hecke engine: normal form, defining presentation, derived
///        exchange identities, degenerate analogue, intertwiner lemmas.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qh/yokonuma.hpp"

using namespace qh;

namespace {
YContext make(std::uint32_t p, std::uint32_t d, std::uint32_t q, int n,
              std::uint32_t i0 = 0, std::uint32_t level = 1, bool degenerate = false) {
    FieldCfg cfg = make_field_cfg(p, d, q);
    return YContext(cfg, n, fundamental_weight(cfg.e, i0, level), degenerate);
}

void report_all_pass(const Report& rep) {
    CHECK(rep.total_instances() > 0);
    for (const auto& s : rep.suites) {
        INFO(s.name);
        CHECK(s.failures.empty());
        for (const auto& f : s.failures) { INFO(f); CHECK(false); }
    }
}
}  // namespace

TEST_CASE("basis indexing round-trips and the identity sits at index 0") {
    YContext ctx = make(5, 2, 2, 3);
    CHECK(ctx.dim() == 48);  // 1^3 * 2^3 * 3!
    for (int idx = 0; idx < ctx.dim(); ++idx)
        CHECK(ctx.basis_index(ctx.basis_label(idx)) == idx);
    BasisLabel id_label = ctx.basis_label(0);
    CHECK(id_label.w == ctx.perms().identity());
    CHECK(id_label.u == std::vector<int>(3, 0));
    CHECK(id_label.v == std::vector<int>(3, 0));
}

TEST_CASE("basis monomials are reproduced by their spelling words") {
    for (YContext ctx : {make(5, 2, 2, 2, 0, 2), make(13, 2, 3, 3)}) {
        for (int idx = 0; idx < ctx.dim(); ++idx)
            CHECK(ctx.mul_word(ctx.one(), ctx.basis_word(idx)) == ctx.basis_elem(idx));
        // The unit really is a unit.
        for (int idx = 0; idx < ctx.dim(); ++idx) {
            CHECK(ctx.mul(ctx.one(), ctx.basis_elem(idx)) == ctx.basis_elem(idx));
            CHECK(ctx.mul(ctx.basis_elem(idx), ctx.one()) == ctx.basis_elem(idx));
        }
    }
}

TEST_CASE("defining presentation: p=5, d=2, q=2, n=3") {
    YContext ctx = make(5, 2, 2, 3);
    report_all_pass(check_presentation(ctx));
}

TEST_CASE("defining presentation: p=13, d=2, q=3, n=3") {
    YContext ctx = make(13, 2, 3, 3);
    report_all_pass(check_presentation(ctx));
}

TEST_CASE("defining presentation: level 2, d=1 (plain cyclotomic Hecke), n=3") {
    // d = 1 collapses e_a to 1: the quadratic relation becomes g^2 = q + (q-1)g.
    YContext ctx = make(5, 1, 2, 3, 0, 2);
    CHECK(ctx.dim() == 48);  // 2^3 * 1 * 3!
    report_all_pass(check_presentation(ctx));
    FpMat G = ctx.rep(ctx.gen_g(0));
    FpMat I = FpMat::identity(ctx.cfg().F, ctx.dim());
    CHECK(G * G == I.scaled(2) + G.scaled(1));  // q = 2, q - 1 = 1
}

TEST_CASE("defining presentation: degenerate p=7, d=2, q=1, n=2") {
    YContext ctx = make(7, 2, 1, 2, 0, 1, true);
    CHECK(ctx.dim() == 8);  // 1 * 2^2 * 2!
    report_all_pass(check_presentation(ctx));
}

TEST_CASE("defining presentation: degenerate p=7, d=3, q=1, n=2, level 2") {
    YContext ctx = make(7, 3, 1, 2, 1, 2, true);
    CHECK(ctx.dim() == 72);  // 2^2 * 3^2 * 2!
    report_all_pass(check_presentation(ctx));
}

TEST_CASE("degenerate requires q = 1") {
    FieldCfg cfg = make_field_cfg(5, 2, 2);
    CHECK_THROWS_AS(YContext(cfg, 2, fundamental_weight(cfg.e, 0), true), ConfigError);
}

TEST_CASE("infeasible sizes are rejected") {
    FieldCfg cfg = make_field_cfg(5, 2, 2);
    CHECK_THROWS_AS(YContext(cfg, 6, fundamental_weight(cfg.e, 0, 3)), AlgebraError);
}

TEST_CASE("associativity probe (seeded)") {
    YContext ctx = make(5, 2, 2, 3);
    report_all_pass(associativity_probe(ctx, 0xC0FFEE, 60));
    YContext deg = make(7, 2, 1, 2, 0, 2, true);
    report_all_pass(associativity_probe(deg, 42, 60));
}

TEST_CASE("degenerate power-exchange identities") {
    // f_a x_{a+1}^v = x_a^v f_a + e_a sum_{m<v} x_a^m x_{a+1}^{v-1-m}
    // f_a x_a^u     = x_{a+1}^u f_a - e_a sum_{m<u} x_a^m x_{a+1}^{u-1-m}
    // f_a x_a^u x_{a+1}^v = x_a^v x_{a+1}^u f_a
    //     + e_a sum_{m=0}^{v-u-1} x_a^{u+m} x_{a+1}^{v-1-m}   (u <= v)
    //     - e_a sum_{m=0}^{u-v-1} x_a^{v+m} x_{a+1}^{u-1-m}   (u >= v)
    YContext ctx = make(7, 2, 1, 2, 0, 2, true);
    const int a = 0;
    FpMat f = ctx.rep(ctx.gen_g(a));
    FpMat xa = ctx.rep(ctx.gen_x(a));
    FpMat xb = ctx.rep(ctx.gen_x(a + 1));
    FpMat e = ctx.rep(ctx.idem_e(a));
    FpMat I = FpMat::identity(ctx.cfg().F, ctx.dim());
    FpMat Z(ctx.cfg().F, ctx.dim(), ctx.dim());
    CHECK(f * xa * xb == xa * xb * f);
    for (int v = 0; v <= 4; ++v) {
        FpMat corr = Z;
        for (int m = 0; m < v; ++m) corr = corr + xa.pow(m) * xb.pow(v - 1 - m);
        CHECK(f * xb.pow(v) == xa.pow(v) * f + e * corr);
        CHECK(f * xa.pow(v) == xb.pow(v) * f - e * corr);
    }
    for (int u = 0; u <= 3; ++u) {
        for (int v = 0; v <= 3; ++v) {
            FpMat corr = Z;
            if (u <= v)
                for (int m = 0; m <= v - u - 1; ++m) corr = corr + xa.pow(u + m) * xb.pow(v - 1 - m);
            else
                for (int m = 0; m <= u - v - 1; ++m) corr = corr - xa.pow(v + m) * xb.pow(u - 1 - m);
            CHECK(f * xa.pow(u) * xb.pow(v) == xa.pow(v) * xb.pow(u) * f + e * corr);
        }
    }
}

TEST_CASE("degenerate intertwiner: x_a phi_a = phi_a x_{a+1} and its square") {
    for (YContext ctx : {make(7, 2, 1, 3, 0, 1, true), make(7, 1, 1, 2, 0, 2, true)}) {
        for (int a = 0; a + 1 < ctx.n(); ++a) {
            FpMat f = ctx.rep(ctx.gen_g(a));
            FpMat xa = ctx.rep(ctx.gen_x(a));
            FpMat xb = ctx.rep(ctx.gen_x(a + 1));
            FpMat e = ctx.rep(ctx.idem_e(a));
            FpMat phi = f * (xa - xb) + e;
            CHECK(xa * phi == phi * xb);
            CHECK(phi * phi == (xb - xa - e) * (xa - xb - e));
        }
    }
}

TEST_CASE("degenerate eigenvalues of every x_a lie in I") {
    YContext ctx = make(7, 2, 1, 2, 0, 2, true);
    std::vector<std::uint32_t> spectrum;
    for (std::uint32_t i = 0; i < ctx.cfg().p; ++i) spectrum.push_back(i);
    for (int a = 0; a < ctx.n(); ++a) {
        // Spectral projections for the full residue spectrum must exist; this
        // is exactly the statement that all eigenvalues are residues of I.
        auto proj = generalized_eigenprojections(ctx.rep(ctx.gen_x(a)), spectrum, ctx.dim());
        FpMat sum(ctx.cfg().F, ctx.dim(), ctx.dim());
        for (const auto& P : proj) sum = sum + P;
        CHECK(sum == FpMat::identity(ctx.cfg().F, ctx.dim()));
    }
}

TEST_CASE("non-degenerate X spectrum consists of powers of q") {
    YContext ctx = make(5, 2, 2, 3);
    std::vector<std::uint32_t> spectrum;
    for (std::uint32_t i = 0; i < ctx.cfg().e; ++i)
        spectrum.push_back(ctx.cfg().F.pow(ctx.cfg().q, i));
    for (int a = 0; a < ctx.n(); ++a)
        CHECK_NOTHROW(static_cast<void>(
            generalized_eigenprojections(ctx.rep(ctx.gen_x(a)), spectrum, ctx.dim())));
}

TEST_CASE("X_a is invertible; t_a has order dividing d") {
    YContext ctx = make(13, 2, 3, 2);
    for (int a = 0; a < ctx.n(); ++a) {
        CHECK_NOTHROW(static_cast<void>(ctx.rep(ctx.gen_x(a)).inverse()));
        CHECK(ctx.rep(ctx.gen_t(a)).pow(ctx.cfg().d) ==
              FpMat::identity(ctx.cfg().F, ctx.dim()));
    }
}

TEST_CASE("element recovery from the regular representation") {
    YContext ctx = make(5, 2, 2, 3);
    for (int idx : {0, 1, 7, 23, 47}) {
        Elem x = ctx.basis_elem(idx);
        CHECK(ctx.from_matrix(ctx.rep(x)) == x);
    }
    Elem mix = ctx.add(ctx.gen_g(0), ctx.scaled(ctx.gen_x(1), 3));
    CHECK(ctx.from_matrix(ctx.rep(mix)) == mix);
}
