#include "report.hpp"

namespace planar2 {

using nlohmann::json;

std::string canonical_json(const json& j) { return j.dump() + "\n"; }

json field_json(const FieldDesc& d) {
    return {{"r", d.r}, {"modulus_enc", d.modulus}, {"generator_enc", d.generator}};
}

json witness_json(const Witness& w) {
    json j{{"kind", method_name(w.kind)}};
    switch (w.kind) {
        case Method::definition:
            j["d"] = w.d;
            j["c1"] = w.c1;
            j["c2"] = w.c2;
            break;
        case Method::lemma_mono:
            j["s"] = w.s;
            j["c1"] = w.c1;
            j["c2"] = w.c2;
            break;
        case Method::lemma_mono2:
            j["s"] = w.s;
            j["preimage"] = w.preimage;
            break;
        case Method::matrix_rank:
            j["s"] = w.s;
            j["kernel"] = w.kernel;
            break;
    }
    return j;
}

json verdict_json(const Verdict& v) {
    json j{{"planar", v.planar}, {"method", method_name(v.method)}};
    j["witness"] = v.witness ? witness_json(*v.witness) : json(nullptr);
    return j;
}

json monomial_json(const MonomialSpec& spec) {
    json j{{"r", spec.r}, {"t", spec.t}, {"a_enc", spec.a_enc}};
    if (spec.split) {
        j["i"] = spec.split->first;
        j["j"] = spec.split->second;
    }
    return j;
}

json verifier_report_json(const VerifierReport& rep, bool zero_elapsed) {
    json j{{"name", rep.name},
           {"pass", rep.pass},
           {"cases_checked", rep.cases_checked},
           {"elapsed_ms", zero_elapsed ? 0 : rep.elapsed_ms}};
    j["parameters"] = json(rep.parameters);
    j["counterexample"] = rep.counterexample ? json(*rep.counterexample) : json(nullptr);
    return j;
}

json finding_json(const Finding& f) {
    json j{{"t", f.t},
           {"coset", {{"g", f.g}, {"indices", f.coset_indices}}},
           {"planar_coefficients", f.coefficients},
           {"pair_count", f.pair_count}};
    if (f.ij) {
        j["i"] = f.ij->first;
        j["j"] = f.ij->second;
    }
    return j;
}

const char* search_mode_name(SearchMode m) {
    return m == SearchMode::all_degrees ? "all_degrees" : "quadratic";
}

json search_result_json(const SearchResult& res, bool zero_elapsed) {
    json findings = json::array();
    for (const Finding& f : res.findings) findings.push_back(finding_json(f));
    return {{"r", res.r},
            {"mode", search_mode_name(res.mode)},
            {"field", field_json(res.field)},
            {"findings", findings},
            {"totals",
             {{"units_checked", res.units_checked},
              {"findings", res.findings.size()},
              {"planar_pairs", res.planar_pairs}}},
            {"elapsed_ms", zero_elapsed ? 0 : res.elapsed_ms}};
}

std::string report_to_json(const Report& rep, bool zero_elapsed) {
    json j{{"schema_version", 1},
           {"command", rep.command},
           {"payload", rep.payload},
           {"elapsed_ms", zero_elapsed ? 0 : rep.elapsed_ms},
           {"exit_status", rep.exit_status}};
    j["field"] = rep.field ? field_json(*rep.field) : json(nullptr);
    return canonical_json(j);
}

std::string search_result_csv(const SearchResult& res) {
    std::string out = "r,t,i,j,a_enc,planar\n";
    for (const Finding& f : res.findings) {
        if (f.coefficients.empty() && f.pair_count > 0) {
            throw_usage("CSV output needs expanded coefficients (q - 1 <= 2^16)");
        }
        const std::string i = f.ij ? std::to_string(f.ij->first) : "";
        const std::string j = f.ij ? std::to_string(f.ij->second) : "";
        for (uint64_t a : f.coefficients) {
            out += std::to_string(res.r) + ',' + std::to_string(f.t) + ',' + i + ',' + j + ',' +
                   std::to_string(a) + ",1\n";
        }
    }
    return out;
}

}  // namespace planar2
