/// @file jsonio.cpp
/// @brief JSON serialization of configurations, algebras and reports.

#include "qh/jsonio.hpp"

namespace qh {

json field_cfg_json(const FieldCfg& cfg) {
    json js;
    js["p"] = cfg.p;
    js["d"] = cfg.d;
    js["xi"] = cfg.xi;
    js["q"] = cfg.q;
    js["e"] = cfg.e;
    if (cfg.sqrt_q)
        js["sqrt_q"] = *cfg.sqrt_q;
    else
        js["sqrt_q"] = nullptr;
    return js;
}

json context_json(const YContext& ctx) {
    json js;
    js["n"] = ctx.n();
    js["level"] = ctx.level();
    js["weight"] = ctx.weight().mult;
    js["degenerate"] = ctx.degenerate();
    js["dim"] = ctx.dim();
    return js;
}

json export_algebra(const YContext& ctx) {
    json js;
    js["field_cfg"] = field_cfg_json(ctx.cfg());
    js["context"] = context_json(ctx);

    json basis = json::array();
    for (int i = 0; i < ctx.dim(); ++i) {
        BasisLabel b = ctx.basis_label(i);
        json jb;
        jb["w"] = ctx.perms().one_line(b.w);
        jb["u"] = b.u;
        jb["v"] = b.v;
        basis.push_back(jb);
    }
    js["basis"] = basis;

    // b_i b_j = sum_k c b_k as sparse quadruples [i, j, k, c]; the regular
    // representation of b_i has the product coefficients in column j.
    json sc = json::array();
    for (int i = 0; i < ctx.dim(); ++i) {
        FpMat M = ctx.rep(ctx.basis_elem(i));
        for (int j = 0; j < ctx.dim(); ++j)
            for (int k = 0; k < ctx.dim(); ++k)
                if (M.at(k, j) != 0) sc.push_back({i, j, k, M.at(k, j)});
    }
    js["structure_constants"] = sc;
    return js;
}

ImportedAlgebra import_algebra(const json& js) {
    ImportedAlgebra out;
    out.p = js.at("field_cfg").at("p").get<std::uint32_t>();
    out.dim = js.at("context").at("dim").get<int>();
    PrimeField F(out.p);
    out.left_rep.assign(out.dim, FpMat(F, out.dim, out.dim));
    for (const auto& quad : js.at("structure_constants")) {
        int i = quad.at(0).get<int>(), j = quad.at(1).get<int>(), k = quad.at(2).get<int>();
        out.left_rep[i].at(k, j) = quad.at(3).get<std::uint32_t>();
    }
    return out;
}

json klr_generators_json(const KlrModel& m) {
    json js;
    auto vec = [&](const FpMat& M) { return json(M.col(0)); };
    json eks = json::array();
    for (const auto& [k, E] : m.eK) {
        json jk;
        jk["i"] = k.i;
        jk["j"] = k.j;
        jk["coeffs"] = vec(E);
        eks.push_back(jk);
    }
    js["e"] = eks;
    json ys = json::array(), psis = json::array();
    for (const auto& Y : m.Y) ys.push_back(vec(Y));
    for (const auto& P : m.Psi) psis.push_back(vec(P));
    js["y"] = ys;
    js["psi"] = psis;
    return js;
}

json report_envelope(const FieldCfg& cfg, json context, const Report& rep, json dims) {
    json js;
    js["field_cfg"] = field_cfg_json(cfg);
    js["context"] = std::move(context);
    js["suites"] = rep.to_json();
    js["dims"] = std::move(dims);
    return js;
}

std::string report_text(const Report& rep) {
    std::string out;
    for (const auto& s : rep.suites) {
        out += (s.passed() ? "PASS" : "FAIL");
        out += "  " + s.name + "  (" + std::to_string(s.instances) + " instances)\n";
        for (const auto& f : s.failures) out += "      failed: " + f + "\n";
    }
    out += rep.ok() ? "ALL SUITES PASSED\n" : "SOME SUITES FAILED\n";
    return out;
}

}  // namespace qh
