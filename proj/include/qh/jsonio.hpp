/// @file jsonio.hpp
/// @brief JSON serialization: ground-field configuration, algebra contexts
///        with basis labels and sparse structure constants (round-trippable
///        to the exact regular representation), KLR generator dumps, and the
///        verification-report envelope used by the CLI.

#pragma once

#include <json.hpp>

#include "qh/klr_model.hpp"
#include "qh/report.hpp"
#include "qh/yokonuma.hpp"

namespace qh {

using json = nlohmann::ordered_json;

/// {"p", "d", "xi", "q", "e", "sqrt_q"} (sqrt_q null when absent).
json field_cfg_json(const FieldCfg& cfg);

/// {"n", "level", "weight", "degenerate", "dim"}.
json context_json(const YContext& ctx);

/// Full algebra export: field_cfg, context, basis labels (one-line w, u, v in
/// the deterministic basis order) and the sparse structure constants
/// [i, j, k, c] meaning b_i b_j = sum_k c b_k.
json export_algebra(const YContext& ctx);

/// Structure constants re-imported as left-multiplication matrices: entry i is
/// the regular-representation matrix of basis element i.
struct ImportedAlgebra {
    std::uint32_t p = 0;
    int dim = 0;
    std::vector<FpMat> left_rep;
};
ImportedAlgebra import_algebra(const json& js);

/// Each KLR generator as a coefficient vector over the monomial basis.
json klr_generators_json(const KlrModel& m);

/// The report envelope {"field_cfg", "context", "suites", "dims"}.
json report_envelope(const FieldCfg& cfg, json context, const Report& rep, json dims);

/// Human-readable rendering of a report (one line per suite).
std::string report_text(const Report& rep);

}  // namespace qh
