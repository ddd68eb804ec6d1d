// planar2 CLI: field inspection, single-monomial planarity checks, theorem
// verifiers and planar-monomial searches, all through the C API. Every
// command prints a canonical JSON report on stdout.
//
// Exit codes: 0 = pass/planar, 1 = verified counterexample or non-planar,
// 2 = usage/capability error.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "planar2.h"

namespace {

struct ReportDeleter {
    void operator()(planar2_report* r) const { planar2_report_destroy(r); }
};
struct FieldDeleter {
    void operator()(planar2_field* f) const { planar2_field_destroy(f); }
};
using ReportPtr = std::unique_ptr<planar2_report, ReportDeleter>;
using FieldPtr = std::unique_ptr<planar2_field, FieldDeleter>;

[[noreturn]] void die(planar2_status status) {
    std::fprintf(stderr, "planar2: %s error: %s\n", planar2_status_name(status),
                 planar2_last_error());
    std::exit(2);
}

void check_status(planar2_status status) {
    if (status != PLANAR2_OK) die(status);
}

int print_report(const planar2_report* rep) {
    char* json = nullptr;
    check_status(planar2_report_to_json(rep, &json));
    std::fputs(json, stdout);
    planar2_string_free(json);
    return planar2_report_passed(rep) ? 0 : 1;
}

FieldPtr make_field(uint32_t r) {
    planar2_field* f = nullptr;
    check_status(planar2_field_create(r, &f));
    return FieldPtr(f);
}

// --jobs wins over the PLANAR2_JOBS environment variable; 0 = all cores.
uint32_t resolve_jobs(const CLI::App& app, uint32_t flag_value) {
    if (app.count("--jobs") > 0) return flag_value;
    if (const char* env = std::getenv("PLANAR2_JOBS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0') return static_cast<uint32_t>(v);
        std::fprintf(stderr, "planar2: usage error: PLANAR2_JOBS must be an unsigned integer\n");
        std::exit(2);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar functions over GF(2^r): checks, theorem verifiers, searches"};
    app.require_subcommand(1);
    uint32_t jobs_flag = 0;
    app.add_option("--jobs", jobs_flag, "worker count (0 = all cores; env PLANAR2_JOBS)");

    // field --r N [--show-modulus]
    auto* cmd_field = app.add_subcommand("field", "inspect the canonical GF(2^r)");
    uint32_t field_r = 0;
    bool show_modulus = false;
    cmd_field->add_option("--r", field_r, "extension degree")->required();
    cmd_field->add_flag("--show-modulus", show_modulus, "include the modulus as a polynomial");

    // check --r N --t T (--a-enc E | --a-pow M)
    auto* cmd_check = app.add_subcommand("check", "decide planarity of c -> a*c^t");
    uint32_t check_r = 0;
    uint64_t check_t = 0, check_a_enc = 0, check_a_pow = 0;
    cmd_check->add_option("--r", check_r, "extension degree")->required();
    cmd_check->add_option("--t", check_t, "exponent (reduced mod q-1)")->required();
    auto* opt_a_enc = cmd_check->add_option("--a-enc", check_a_enc, "coefficient encoding");
    auto* opt_a_pow =
        cmd_check->add_option("--a-pow", check_a_pow, "coefficient as generator^M");
    opt_a_enc->excludes(opt_a_pow);
    opt_a_pow->excludes(opt_a_enc);

    // verify <name> ...
    auto* cmd_verify = app.add_subcommand("verify", "run one theorem verifier");
    cmd_verify->require_subcommand(1);

    uint32_t v_k = 0, v_Q = 0, v_r = 0, v_m = 0, v_J = 0;
    uint64_t v_a_enc = 0;

    auto* v_theorem1 = cmd_verify->add_subcommand("theorem1", "planar family over GF(4^(3k))");
    v_theorem1->add_option("--k", v_k, "Q = 4^k")->required();

    auto* v_fermat = cmd_verify->add_subcommand("fermat", "products u*v are cubes in GF(Q^3)");
    v_fermat->add_option("--Q", v_Q, "power of 2")->required();

    auto* v_prop_odd =
        cmd_verify->add_subcommand("prop-odd", "classification of degree 1+2^j monomials");
    v_prop_odd->add_option("--r", v_r, "extension degree")->required();

    auto* v_identities =
        cmd_verify->add_subcommand("identities", "cube-substitution product identities");
    v_identities->add_option("--m", v_m, "even subfield degree")->required();

    auto* v_minpoly = cmd_verify->add_subcommand("minpoly", "minimal-polynomial structure");
    v_minpoly->add_option("--Q", v_Q, "power of 4")->required();

    auto* v_root_d = cmd_verify->add_subcommand("root-d", "explicit root of the cubic");
    v_root_d->add_option("--m", v_m, "even subfield degree")->required();

    auto* v_no_de = cmd_verify->add_subcommand("no-de", "insolubility of the d,e equation");
    v_no_de->add_option("--k", v_k, "Q = 4^k")->required();
    v_no_de->add_option("--a-enc", v_a_enc, "coefficient encoding")->required();

    auto* v_curve = cmd_verify->add_subcommand("curve", "point counts of the Fermat-type curve");
    v_curve->add_option("--r", v_r, "extension degree")->required();
    v_curve->add_option("--J", v_J, "divisor of r")->required();
    auto* v_curve_a = v_curve->add_option("--a-enc", v_a_enc, "single coefficient (default all)");

    auto* v_weil_gap = cmd_verify->add_subcommand("weil-gap", "exact Weil-bound gap chain");
    v_weil_gap->add_option("--r", v_r, "extension degree")->required();
    v_weil_gap->add_option("--J", v_J, "with J <= r/4")->required();

    // search --r N --mode all|quadratic [--out PATH] [--resume] [--format json|csv]
    auto* cmd_search = app.add_subcommand("search", "search planar monomials exhaustively");
    uint32_t s_r = 0;
    std::string s_mode, s_out, s_format = "json", s_progress;
    bool s_resume = false, s_large = false;
    cmd_search->add_option("--r", s_r, "extension degree")->required();
    cmd_search->add_option("--mode", s_mode, "all | quadratic")
        ->required()
        ->check(CLI::IsMember({"all", "quadratic"}));
    cmd_search->add_option("--out", s_out, "write the result file here");
    cmd_search->add_option("--format", s_format, "result file / stdout format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_search->add_option("--progress", s_progress,
                           "progress sidecar path (default: <out>.progress)");
    cmd_search->add_flag("--resume", s_resume, "skip units recorded in the sidecar");
    cmd_search->add_flag("--large", s_large, "raise the degree cap (longer runs)");

    // let a trailing --jobs reach the global option from any subcommand
    for (CLI::App* sub : app.get_subcommands(nullptr)) {
        sub->fallthrough();
        for (CLI::App* subsub : sub->get_subcommands(nullptr)) subsub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::fprintf(stderr, "planar2: usage error: %s\n", e.what());
        return 2;
    }

    const uint32_t jobs = resolve_jobs(app, jobs_flag);
    planar2_report* rep = nullptr;

    if (*cmd_field) {
        FieldPtr f = make_field(field_r);
        check_status(planar2_field_report(f.get(), show_modulus ? 1 : 0, &rep));
    } else if (*cmd_check) {
        FieldPtr f = make_field(check_r);
        if (opt_a_enc->count() == 0 && opt_a_pow->count() == 0) {
            std::fprintf(stderr, "planar2: usage error: check needs --a-enc or --a-pow\n");
            return 2;
        }
        uint64_t a = check_a_enc;
        if (opt_a_pow->count() > 0) {
            check_status(planar2_field_pow(f.get(), planar2_field_generator(f.get()),
                                           static_cast<int64_t>(check_a_pow), &a));
        }
        check_status(planar2_check_monomial(f.get(), check_t, a, &rep));
    } else if (*cmd_verify) {
        if (*v_theorem1) {
            check_status(planar2_verify_theorem1(v_k, jobs, &rep));
        } else if (*v_fermat) {
            check_status(planar2_verify_fermat(v_Q, jobs, &rep));
        } else if (*v_prop_odd) {
            check_status(planar2_verify_prop_odd(v_r, jobs, &rep));
        } else if (*v_identities) {
            check_status(planar2_verify_identities(v_m, &rep));
        } else if (*v_minpoly) {
            check_status(planar2_verify_minpoly(v_Q, jobs, &rep));
        } else if (*v_root_d) {
            check_status(planar2_verify_root_d(v_m, &rep));
        } else if (*v_no_de) {
            check_status(planar2_verify_no_de(v_k, v_a_enc, jobs, &rep));
        } else if (*v_curve) {
            check_status(planar2_verify_curve(v_r, v_J, v_curve_a->count() > 0 ? 1 : 0, v_a_enc,
                                              jobs, &rep));
        } else if (*v_weil_gap) {
            check_status(planar2_verify_weil_gap(v_r, v_J, &rep));
        }
    } else if (*cmd_search) {
        const planar2_search_mode mode =
            s_mode == "all" ? PLANAR2_SEARCH_ALL_DEGREES : PLANAR2_SEARCH_QUADRATIC;
        if (s_progress.empty() && !s_out.empty()) s_progress = s_out + ".progress";
        if (s_resume && s_progress.empty()) {
            std::fprintf(stderr, "planar2: usage error: --resume needs --out or --progress\n");
            return 2;
        }
        check_status(planar2_search(s_r, mode, jobs, s_out.empty() ? nullptr : s_out.c_str(),
                                    s_format.c_str(),
                                    s_progress.empty() ? nullptr : s_progress.c_str(),
                                    s_resume ? 1 : 0, s_large ? 1 : 0, &rep));
        if (s_format == "csv") {
            ReportPtr holder(rep);
            char* csv = nullptr;
            check_status(planar2_report_to_csv(rep, &csv));
            std::fputs(csv, stdout);
            planar2_string_free(csv);
            return 0;
        }
    }

    ReportPtr holder(rep);
    return print_report(rep);
}
