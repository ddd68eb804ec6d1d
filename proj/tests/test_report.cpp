#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "report.hpp"

using namespace planar2;
using nlohmann::json;

TEST_CASE("canonical JSON is sorted, compact and newline-terminated") {
    json j;
    j["zebra"] = 1;
    j["alpha"] = 2;
    j["m"] = json{{"y", 1}, {"x", 2}};
    const std::string s = canonical_json(j);
    CHECK(s == "{\"alpha\":2,\"m\":{\"x\":2,\"y\":1},\"zebra\":1}\n");
}

TEST_CASE("reports round-trip byte-identically") {
    Report rep;
    rep.command = "check";
    rep.field = FieldDesc{6, 67, 2};
    rep.payload = json{{"verdict", {{"planar", true}}}};
    rep.elapsed_ms = 12;
    rep.exit_status = 0;
    const std::string s = report_to_json(rep);
    CHECK(canonical_json(json::parse(s)) == s);
    CHECK(s.back() == '\n');
    CHECK(s.find(' ') == std::string::npos);
}

TEST_CASE("the report envelope carries the expected keys") {
    Report rep;
    rep.command = "verify weil-gap";
    rep.payload = json{{"pass", true}};
    const json j = json::parse(report_to_json(rep));
    CHECK(j.at("schema_version") == 1);
    CHECK(j.at("command") == "verify weil-gap");
    CHECK(j.at("field").is_null());  // pure-arithmetic commands have no field
    CHECK(j.at("exit_status") == 0);
    CHECK(j.contains("elapsed_ms"));
}

TEST_CASE("empty findings serialize with zeroed totals") {
    SearchResult res;
    res.r = 5;
    res.mode = SearchMode::quadratic;
    res.field = {5, 37, 2};
    res.units_checked = 10;
    const json j = search_result_json(res);
    CHECK(j.at("findings").empty());
    CHECK(j.at("totals").at("planar_pairs") == 0);
    CHECK(j.at("totals").at("findings") == 0);
}

TEST_CASE("witness payloads carry per-method fields") {
    Witness w;
    w.kind = Method::lemma_mono2;
    w.s = 9;
    w.preimage = 3;
    const json j = witness_json(w);
    CHECK(j.at("kind") == "lemma_mono2");
    CHECK(j.at("s") == 9);
    CHECK(j.at("preimage") == 3);
    CHECK_FALSE(j.contains("d"));
}

TEST_CASE("CSV is rejected for unexpanded findings") {
    SearchResult res;
    res.r = 20;
    res.mode = SearchMode::quadratic;
    Finding f;
    f.t = 5;
    f.g = 3;
    f.coset_indices = {0};
    f.pair_count = 349525;  // expansion suppressed at this size
    res.findings.push_back(f);
    CHECK_THROWS_AS(search_result_csv(res), Error);
}

TEST_CASE("verifier reports serialize counterexamples or null") {
    VerifierReport rep;
    rep.name = "fermat";
    rep.parameters = {{"Q", 4}};
    rep.cases_checked = 72;
    const json ok = verifier_report_json(rep);
    CHECK(ok.at("counterexample").is_null());
    CHECK(ok.at("pass") == true);

    rep.pass = false;
    rep.counterexample = std::map<std::string, uint64_t>{{"u", 3}, {"v", 5}};
    const json bad = verifier_report_json(rep);
    CHECK(bad.at("counterexample").at("u") == 3);
    CHECK(bad.at("pass") == false);
}

TEST_CASE("zeroed-elapsed serialization is independent of measured time") {
    SearchResult a, b;
    a.r = b.r = 4;
    a.mode = b.mode = SearchMode::all_degrees;
    a.field = b.field = {4, 19, 2};
    a.elapsed_ms = 123;
    b.elapsed_ms = 456;
    CHECK(search_result_json(a, true) == search_result_json(b, true));
    CHECK(search_result_json(a, false) != search_result_json(b, false));
}
