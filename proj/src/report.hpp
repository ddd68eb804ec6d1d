#ifndef PLANAR2_REPORT_HPP
#define PLANAR2_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "planarity.hpp"
#include "search.hpp"
#include "theorems.hpp"

namespace planar2 {

// Canonical JSON: nlohmann::json objects keep keys sorted (std::map), dumped
// with no insignificant whitespace and a trailing newline, so equal reports
// are byte-equal.
std::string canonical_json(const nlohmann::json& j);

nlohmann::json field_json(const FieldDesc& d);
nlohmann::json witness_json(const Witness& w);
nlohmann::json verdict_json(const Verdict& v);
nlohmann::json monomial_json(const MonomialSpec& spec);
nlohmann::json verifier_report_json(const VerifierReport& rep, bool zero_elapsed = false);
nlohmann::json finding_json(const Finding& f);
nlohmann::json search_result_json(const SearchResult& res, bool zero_elapsed = false);

// Top-level envelope every CLI command emits on stdout.
struct Report {
    std::string command;
    std::optional<FieldDesc> field;
    nlohmann::json payload;
    uint64_t elapsed_ms = 0;
    int exit_status = 0;  // 0 pass/planar, 1 verified counterexample/non-planar
};

std::string report_to_json(const Report& rep, bool zero_elapsed = false);

// CSV rows r,t,i,j,a_enc,planar for search findings (exit the usage error
// path for anything else); requires expanded coefficients.
std::string search_result_csv(const SearchResult& res);

}  // namespace planar2

#endif
