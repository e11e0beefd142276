/// @file qh_cli.cpp
/// @brief Command-line front end: construction, verification suites, the
///        isomorphism checks, the block decomposition, the commutative
///        diagram, symbolic straightening and JSON export.
///
/// Exit codes: 0 when every requested verification passes, 1 on verification
/// failure, 2 on configuration errors.  Reports are deterministic given the
/// same flags and seed.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qh/decomp.hpp"
#include "qh/jsonio.hpp"
#include "qh/klr_model.hpp"
#include "qh/klr_symbolic.hpp"
#include "qh/yokonuma.hpp"

using namespace qh;

namespace {

struct Common {
    std::uint32_t p = 5, d = 2, q = 2;
    int n = 2;
    std::string weight = "0:1";
    bool degenerate = false;
    bool symmetric_f = false;
    std::uint64_t seed = 0x5EED2024ULL;
    std::string out;
    std::string format = "json";
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--p", c.p, "odd prime modulus");
    cmd->add_option("--d", c.d, "order of the wreath generators");
    cmd->add_option("--q", c.q, "deformation parameter in F_p");
    cmd->add_option("--n", c.n, "number of strands");
    cmd->add_option("--weight", c.weight, "weight as i:mult[,i:mult...] over I");
    cmd->add_flag("--degenerate", c.degenerate, "use the degenerate (q = 1) presentation");
    cmd->add_flag("--symmetric-f", c.symmetric_f, "symmetric crossing normalization sqrt(q)");
    cmd->add_option("--seed", c.seed, "seed for randomized property tests");
    cmd->add_option("--out", c.out, "output path (default: stdout)");
    cmd->add_option("--report", c.format, "report format: json or text");
}

Weight parse_weight(const std::string& s, std::uint32_t e) {
    Weight wt;
    wt.mult.assign(e, 0);
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw ConfigError("weight entries must look like i:mult, got '" + item + "'");
        std::uint32_t i = static_cast<std::uint32_t>(std::stoul(item.substr(0, colon)));
        std::uint32_t m = static_cast<std::uint32_t>(std::stoul(item.substr(colon + 1)));
        wt.mult.at(i % e) += m;
    }
    if (wt.level() == 0) throw ConfigError("weight must have positive level");
    return wt;
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(c.out);
        f << text;
    }
}

void emit_report(const Common& c, const FieldCfg& cfg, json context, const Report& rep,
                 json dims) {
    if (c.format == "text")
        emit(c, report_text(rep));
    else
        emit(c, report_envelope(cfg, std::move(context), rep, std::move(dims)).dump(2) + "\n");
}

YContext make_context(const Common& c, const FieldCfg& cfg) {
    if (c.degenerate && cfg.q != 1)
        throw ConfigError("--degenerate requires q = 1");
    return YContext(cfg, c.n, parse_weight(c.weight, cfg.e), c.degenerate);
}

json dims_json(const YContext& ctx) {
    std::uint64_t formula = 1;
    for (int a = 1; a <= ctx.n(); ++a) formula *= static_cast<std::uint64_t>(a);
    for (int a = 0; a < ctx.n(); ++a)
        formula *= static_cast<std::uint64_t>(ctx.level()) * ctx.cfg().d;
    json dims;
    dims["dim"] = ctx.dim();
    dims["formula"] = formula;
    return dims;
}

int run_build(const Common& c) {
    FieldCfg cfg = make_field_cfg(c.p, c.d, c.q);
    YContext ctx = make_context(c, cfg);
    Report rep;
    json dims = dims_json(ctx);
    rep.suite("dimension identity: dim = l^n d^n n!")
        .check(dims["dim"].get<std::uint64_t>() == dims["formula"].get<std::uint64_t>(),
               "constructed dimension disagrees with the closed formula");
    emit_report(c, cfg, context_json(ctx), rep, dims);
    return rep.ok() ? 0 : 1;
}

int run_verify(const Common& c) {
    FieldCfg cfg = make_field_cfg(c.p, c.d, c.q);
    YContext ctx = make_context(c, cfg);
    Report rep = check_presentation(ctx);
    rep.absorb(associativity_probe(ctx, c.seed, 50));
    json context = context_json(ctx);
    context["seed"] = c.seed;
    emit_report(c, cfg, std::move(context), rep, dims_json(ctx));
    return rep.ok() ? 0 : 1;
}

int run_iso(const Common& c) {
    FieldCfg cfg = make_field_cfg(c.p, c.d, c.q);
    YContext ctx = make_context(c, cfg);
    KlrModel model = build_klr_model(ctx, c.symmetric_f);
    Report rep = verify_idempotents(model);
    rep.absorb(verify_klr_relations(model));
    rep.absorb(verify_intertwiner_lemmas(model));
    rep.absorb(roundtrip_check(model));
    rep.absorb(grading_audit(model));
    emit_report(c, cfg, context_json(ctx), rep, dims_json(ctx));
    return rep.ok() ? 0 : 1;
}

int run_decompose(const Common& c) {
    FieldCfg cfg = make_field_cfg(c.p, c.d, c.q);
    YContext ctx = make_context(c, cfg);
    KlrModel model = build_klr_model(ctx, c.symmetric_f);
    CycloDecomp dec(model);
    Report rep = dec.verify();
    json dims = dims_json(ctx);
    json blocks = json::array();
    for (const auto& blk : dec.blocks()) {
        json jb;
        jb["lambda"] = blk.lambda.parts;
        jb["m"] = blk.m;
        json fd = json::array();
        std::uint64_t prod = blk.m * blk.m;
        for (const auto& f : blk.tensor->factors()) {
            fd.push_back(f.dim());
            prod *= f.dim();
        }
        jb["factor_dims"] = fd;
        jb["block_dim"] = prod;
        blocks.push_back(jb);
    }
    dims["blocks"] = blocks;
    emit_report(c, cfg, context_json(ctx), rep, dims);
    return rep.ok() ? 0 : 1;
}

int run_diagram(const Common& c) {
    FieldCfg cfg = make_field_cfg(c.p, c.d, c.q);
    if (!cfg.sqrt_q && !(c.degenerate && cfg.q == 1)) {
        json js;
        js["field_cfg"] = field_cfg_json(cfg);
        js["comparable"] = false;
        emit(c, js.dump(2) + "\n");
        return 0;
    }
    YContext ctx = make_context(c, cfg);
    Report rep = diagram_check(ctx);
    json context = context_json(ctx);
    context["comparable"] = true;
    emit_report(c, cfg, std::move(context), rep, dims_json(ctx));
    return rep.ok() ? 0 : 1;
}

/// Expression language: whitespace-separated prefix letters, applied left to
/// right to 1 —  `e k1,k2,...,kn` (vertex ids, (i,j) = j*e + i), `y a`,
/// `psi a` with 0-based strand positions.
std::vector<SymLetter> parse_expr(const std::string& expr, int n) {
    std::vector<SymLetter> word;
    std::stringstream ss(expr);
    std::string tok;
    while (ss >> tok) {
        SymLetter L;
        if (tok == "e") {
            std::string tuple;
            if (!(ss >> tuple)) throw ConfigError("'e' needs a vertex tuple");
            L.kind = SymLetter::Kind::E;
            std::stringstream ts(tuple);
            std::string v;
            while (std::getline(ts, v, ',')) L.k.push_back(std::stoi(v));
            if (static_cast<int>(L.k.size()) != n)
                throw ConfigError("'e' tuple must have n entries");
        } else if (tok == "y" || tok == "psi") {
            L.kind = tok == "y" ? SymLetter::Kind::Y : SymLetter::Kind::PSI;
            std::string pos;
            if (!(ss >> pos)) throw ConfigError("'" + tok + "' needs a position");
            L.pos = std::stoi(pos);
        } else {
            throw ConfigError("unknown letter '" + tok + "' (expected e, y, psi)");
        }
        word.push_back(std::move(L));
    }
    if (word.empty()) throw ConfigError("empty expression");
    return word;
}

int run_straighten(const Common& c, const std::string& expr, int kcap) {
    FieldCfg cfg = make_field_cfg(c.p, c.d, c.q);
    QuiverSpec spec = make_disjoint_cyclic_quiver(cfg.F, cfg.e, cfg.d);
    SymAlg alg(spec, c.n, kcap);
    SymElem result = alg.straighten(parse_expr(expr, c.n));
    json js;
    js["field_cfg"] = field_cfg_json(cfg);
    json context;
    context["n"] = c.n;
    context["nverts"] = spec.nverts;
    context["expr"] = expr;
    js["context"] = context;
    json terms = json::array();
    for (const auto& [key, coeff] : result) {
        json jt;
        jt["coeff"] = coeff;
        jt["w"] = alg.perms().one_line(key.w);
        jt["word"] = alg.perms().canonical_word(key.w);
        jt["r"] = key.r;
        jt["k"] = key.k;
        jt["degree"] = alg.term_degree(key);
        terms.push_back(jt);
    }
    js["terms"] = terms;
    emit(c, js.dump(2) + "\n");
    return 0;
}

int run_export(const Common& c, bool klr_generators) {
    FieldCfg cfg = make_field_cfg(c.p, c.d, c.q);
    YContext ctx = make_context(c, cfg);
    json js = export_algebra(ctx);
    if (klr_generators) {
        KlrModel model = build_klr_model(ctx, c.symmetric_f);
        js["klr_generators"] = klr_generators_json(model);
    }
    emit(c, js.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact wreath Hecke / quiver Hecke workbench over F_p"};
    app.require_subcommand(1);

    Common c;
    std::string expr;
    int kcap = 6;
    bool klr_generators = false;

    CLI::App* build = app.add_subcommand("build", "construct the algebra, check dimensions");
    CLI::App* verify = app.add_subcommand("verify", "defining presentation suite");
    CLI::App* iso = app.add_subcommand("iso", "both isomorphism directions and audits");
    CLI::App* decompose = app.add_subcommand("decompose", "block-matrix decomposition");
    CLI::App* diagram = app.add_subcommand("diagram", "commutative diagram of isomorphisms");
    CLI::App* straighten = app.add_subcommand("straighten", "symbolic PBW straightening");
    CLI::App* exp = app.add_subcommand("export", "JSON dump of the algebra");
    for (CLI::App* cmd : {build, verify, iso, decompose, diagram, straighten, exp})
        add_common(cmd, c);
    straighten->add_option("--expr", expr, "generator word (prefix letters e/y/psi)")
        ->required();
    straighten->add_option("--kcap", kcap, "cap on the vertex-set size");
    exp->add_flag("--klr-generators", klr_generators,
                  "also dump the KLR generators as coefficient vectors");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) return run_build(c);
        if (verify->parsed()) return run_verify(c);
        if (iso->parsed()) return run_iso(c);
        if (decompose->parsed()) return run_decompose(c);
        if (diagram->parsed()) return run_diagram(c);
        if (straighten->parsed()) return run_straighten(c, expr, kcap);
        if (exp->parsed()) return run_export(c, klr_generators);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const AlgebraError& e) {
        std::cerr << "algebra error: " << e.what() << "\n";
        return 2;
    } catch (const LinalgError& e) {
        std::cerr << "linear algebra error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
