#include "planar2.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "gf2r.hpp"
#include "planarity.hpp"
#include "report.hpp"
#include "search.hpp"
#include "theorems.hpp"

using namespace planar2;

struct planar2_field {
    Field field;
};

struct planar2_report {
    Report report;
    std::optional<SearchResult> search;  // kept for CSV serialization
};

namespace {

thread_local std::string g_last_error;

planar2_status set_error(planar2_status status, const char* what) {
    g_last_error = what ? what : "";
    return status;
}

planar2_status status_from_errc(Errc c) {
    switch (c) {
        case Errc::usage: return PLANAR2_ERR_USAGE;
        case Errc::domain: return PLANAR2_ERR_DOMAIN;
        case Errc::capability: return PLANAR2_ERR_CAPABILITY;
        case Errc::io: return PLANAR2_ERR_IO;
    }
    return PLANAR2_ERR_INTERNAL;
}

template <typename Fn>
planar2_status guarded(Fn&& fn) {
    try {
        fn();
        return PLANAR2_OK;
    } catch (const Error& e) {
        return set_error(status_from_errc(e.code()), e.what());
    } catch (const std::bad_alloc& e) {
        return set_error(PLANAR2_ERR_NOMEM, e.what());
    } catch (const std::exception& e) {
        return set_error(PLANAR2_ERR_INTERNAL, e.what());
    }
}

planar2_report* wrap_verifier(const char* command, VerifierReport rep) {
    auto* out = new planar2_report;
    out->report.command = command;
    out->report.field = rep.field;
    out->report.elapsed_ms = rep.elapsed_ms;
    out->report.exit_status = rep.pass ? 0 : 1;
    out->report.payload = verifier_report_json(rep);
    return out;
}

planar2_report* wrap_verdict(const char* command, const Field& f, const MonomialSpec* spec,
                             const Verdict& v) {
    auto* out = new planar2_report;
    out->report.command = command;
    out->report.field = f.desc();
    out->report.exit_status = v.planar ? 0 : 1;
    nlohmann::json payload{{"verdict", verdict_json(v)}};
    if (spec) payload["monomial"] = monomial_json(*spec);
    out->report.payload = payload;
    return out;
}

uint32_t search_cap(planar2_search_mode mode, bool large) {
    if (mode == PLANAR2_SEARCH_ALL_DEGREES) return large ? 14 : 12;
    return large ? 24 : 16;
}

}  // namespace

extern "C" {

const char* planar2_version(void) { return "1.0.0"; }

const char* planar2_status_name(planar2_status status) {
    switch (status) {
        case PLANAR2_OK: return "ok";
        case PLANAR2_ERR_USAGE: return "usage";
        case PLANAR2_ERR_DOMAIN: return "domain";
        case PLANAR2_ERR_CAPABILITY: return "capability";
        case PLANAR2_ERR_IO: return "io";
        case PLANAR2_ERR_NOMEM: return "nomem";
        case PLANAR2_ERR_INTERNAL: return "internal";
    }
    return "?";
}

const char* planar2_last_error(void) { return g_last_error.c_str(); }

planar2_status planar2_field_create(uint32_t r, planar2_field** out) {
    return planar2_field_create_ex(r, 0, uint64_t{1} << 26, out);
}

planar2_status planar2_field_create_ex(uint32_t r, uint64_t generator_enc, uint64_t log_table_cap,
                                       planar2_field** out) {
    if (!out) return set_error(PLANAR2_ERR_USAGE, "out must not be null");
    *out = nullptr;
    return guarded([&] {
        FieldOptions opt;
        opt.generator_enc = generator_enc;
        opt.log_table_cap = log_table_cap;
        *out = new planar2_field{Field(r, opt)};
    });
}

void planar2_field_destroy(planar2_field* f) { delete f; }

uint32_t planar2_field_degree(const planar2_field* f) { return f->field.degree(); }
uint64_t planar2_field_order(const planar2_field* f) { return f->field.order(); }
uint64_t planar2_field_modulus(const planar2_field* f) { return f->field.modulus(); }
uint64_t planar2_field_generator(const planar2_field* f) { return f->field.generator(); }
int planar2_field_has_log_table(const planar2_field* f) { return f->field.has_log_table() ? 1 : 0; }

planar2_status planar2_field_add(const planar2_field* f, uint64_t x, uint64_t y, uint64_t* out) {
    return guarded([&] { *out = f->field.add(x, y); });
}

planar2_status planar2_field_mul(const planar2_field* f, uint64_t x, uint64_t y, uint64_t* out) {
    return guarded([&] { *out = f->field.mul(x, y); });
}

planar2_status planar2_field_inv(const planar2_field* f, uint64_t x, uint64_t* out) {
    return guarded([&] { *out = f->field.inv(x); });
}

planar2_status planar2_field_pow(const planar2_field* f, uint64_t x, int64_t n, uint64_t* out) {
    return guarded([&] { *out = f->field.pow(x, n); });
}

planar2_status planar2_field_trace(const planar2_field* f, uint64_t x, uint64_t* out) {
    return guarded([&] { *out = f->field.trace(x); });
}

planar2_status planar2_field_partial_trace(const planar2_field* f, uint64_t x, uint32_t j,
                                           uint64_t* out) {
    return guarded([&] { *out = f->field.partial_trace(x, j); });
}

planar2_status planar2_field_is_kth_power(const planar2_field* f, uint64_t x, uint64_t k,
                                          int* out) {
    return guarded([&] { *out = f->field.is_kth_power(x, k) ? 1 : 0; });
}

planar2_status planar2_field_dlog(const planar2_field* f, uint64_t x, uint64_t* out) {
    return guarded([&] { *out = f->field.dlog(x); });
}

planar2_status planar2_field_exp(const planar2_field* f, uint64_t n, uint64_t* out) {
    return guarded([&] { *out = f->field.exp(n); });
}

planar2_status planar2_field_in_subfield(const planar2_field* f, uint64_t x, uint32_t m,
                                         int* out) {
    return guarded([&] { *out = f->field.in_subfield(x, m) ? 1 : 0; });
}

planar2_status planar2_field_report(const planar2_field* f, int show_modulus,
                                    planar2_report** out) {
    if (!out) return set_error(PLANAR2_ERR_USAGE, "out must not be null");
    *out = nullptr;
    return guarded([&] {
        auto* rep = new planar2_report;
        rep->report.command = "field";
        rep->report.field = f->field.desc();
        rep->report.exit_status = 0;
        nlohmann::json payload{{"q", f->field.order()},
                               {"log_table", f->field.has_log_table()}};
        if (show_modulus) {
            std::string poly;
            for (int b = 63; b >= 0; --b) {
                if (!((f->field.modulus() >> b) & 1)) continue;
                if (!poly.empty()) poly += '+';
                if (b == 0) {
                    poly += '1';
                } else if (b == 1) {
                    poly += 'x';
                } else {
                    poly += "x^" + std::to_string(b);
                }
            }
            payload["modulus_poly"] = poly;
        }
        rep->report.payload = payload;
        *out = rep;
    });
}

planar2_status planar2_check_table(const planar2_field* f, const uint64_t* table, uint64_t len,
                                   planar2_report** out) {
    if (!out) return set_error(PLANAR2_ERR_USAGE, "out must not be null");
    *out = nullptr;
    return guarded([&] {
        const Verdict v = check_table(f->field, {table, static_cast<size_t>(len)});
        *out = wrap_verdict("check-table", f->field, nullptr, v);
    });
}

planar2_status planar2_check_monomial(const planar2_field* f, uint64_t t, uint64_t a_enc,
                                      planar2_report** out) {
    if (!out) return set_error(PLANAR2_ERR_USAGE, "out must not be null");
    *out = nullptr;
    return guarded([&] {
        MonomialSpec spec;
        spec.r = f->field.degree();
        spec.t = t;
        spec.a_enc = a_enc;
        const Verdict v = check_monomial(f->field, spec);
        *out = wrap_verdict("check", f->field, &spec, v);
    });
}

planar2_status planar2_check_quadratic(const planar2_field* f, uint32_t i, uint32_t j,
                                       uint64_t a_enc, planar2_report** out) {
    if (!out) return set_error(PLANAR2_ERR_USAGE, "out must not be null");
    *out = nullptr;
    return guarded([&] {
        MonomialSpec spec;
        spec.r = f->field.degree();
        spec.t = (uint64_t{1} << i) + (uint64_t{1} << j);
        spec.a_enc = a_enc;
        spec.split = std::make_pair(i, j);
        const Verdict v = check_quadratic(f->field, i, j, a_enc);
        *out = wrap_verdict("check", f->field, &spec, v);
    });
}

planar2_status planar2_linearized_bijective(const planar2_field* f, uint32_t i, uint32_t j,
                                            uint64_t s_enc, int* bijective, uint64_t* kernel_enc) {
    return guarded([&] {
        const LinearCheck lc = linearized_bijective(f->field, i, j, s_enc);
        if (bijective) *bijective = lc.bijective ? 1 : 0;
        if (kernel_enc) *kernel_enc = lc.kernel_enc;
    });
}

planar2_status planar2_verify_fermat(uint32_t Q, uint32_t jobs, planar2_report** out) {
    if (!out) return set_error(PLANAR2_ERR_USAGE, "out must not be null");
    *out = nullptr;
    return guarded([&] {
        VerifyOptions opt;
        opt.jobs = jobs;
        *out = wrap_verifier("verify fermat", verify_fermat(Q, opt));
    });
}

planar2_status planar2_verify_theorem1(uint32_t k, uint32_t jobs, planar2_report** out) {
    if (!out) return set_error(PLANAR2_ERR_USAGE, "out must not be null");
    *out = nullptr;
    return guarded([&] {
        VerifyOptions opt;
        opt.jobs = jobs;
        *out = wrap_verifier("verify theorem1", verify_theorem1(k, opt));
    });
}

planar2_status planar2_verify_no_de(uint32_t k, uint64_t a_enc, uint32_t jobs,
                                    planar2_report** out) {
    if (!out) return set_error(PLANAR2_ERR_USAGE, "out must not be null");
    *out = nullptr;
    return guarded([&] {
        VerifyOptions opt;
        opt.jobs = jobs;
        *out = wrap_verifier("verify no-de", verify_no_de(k, a_enc, opt));
    });
}

planar2_status planar2_verify_prop_odd(uint32_t r, uint32_t jobs, planar2_report** out) {
    if (!out) return set_error(PLANAR2_ERR_USAGE, "out must not be null");
    *out = nullptr;
    return guarded([&] {
        VerifyOptions opt;
        opt.jobs = jobs;
        *out = wrap_verifier("verify prop-odd", verify_prop_odd(r, opt));
    });
}

planar2_status planar2_verify_identities(uint32_t m, planar2_report** out) {
    if (!out) return set_error(PLANAR2_ERR_USAGE, "out must not be null");
    *out = nullptr;
    return guarded([&] { *out = wrap_verifier("verify identities", verify_identities(m)); });
}

planar2_status planar2_verify_root_d(uint32_t m, planar2_report** out) {
    if (!out) return set_error(PLANAR2_ERR_USAGE, "out must not be null");
    *out = nullptr;
    return guarded([&] { *out = wrap_verifier("verify root-d", verify_root_d(m)); });
}

planar2_status planar2_verify_minpoly(uint32_t Q, uint32_t jobs, planar2_report** out) {
    if (!out) return set_error(PLANAR2_ERR_USAGE, "out must not be null");
    *out = nullptr;
    return guarded([&] {
        VerifyOptions opt;
        opt.jobs = jobs;
        *out = wrap_verifier("verify minpoly", verify_minpoly(Q, opt));
    });
}

planar2_status planar2_verify_curve(uint32_t r, uint32_t J, int has_a, uint64_t a_enc,
                                    uint32_t jobs, planar2_report** out) {
    if (!out) return set_error(PLANAR2_ERR_USAGE, "out must not be null");
    *out = nullptr;
    return guarded([&] {
        VerifyOptions opt;
        opt.jobs = jobs;
        std::optional<uint64_t> a;
        if (has_a) a = a_enc;
        *out = wrap_verifier("verify curve", verify_curve(r, J, a, opt));
    });
}

planar2_status planar2_verify_weil_gap(uint32_t r, uint32_t J, planar2_report** out) {
    if (!out) return set_error(PLANAR2_ERR_USAGE, "out must not be null");
    *out = nullptr;
    return guarded([&] { *out = wrap_verifier("verify weil-gap", verify_weil_gap(r, J)); });
}

planar2_status planar2_search(uint32_t r, planar2_search_mode mode, uint32_t jobs,
                              const char* out_path, const char* format, const char* progress_path,
                              int resume, int large, planar2_report** out) {
    if (!out) return set_error(PLANAR2_ERR_USAGE, "out must not be null");
    *out = nullptr;
    return guarded([&] {
        if (mode != PLANAR2_SEARCH_ALL_DEGREES && mode != PLANAR2_SEARCH_QUADRATIC) {
            throw_usage("unknown search mode");
        }
        const std::string fmt = format ? format : "json";
        if (fmt != "json" && fmt != "csv") throw_usage("format must be json or csv");
        if (r < 2 || r > search_cap(mode, large != 0)) {
            throw_usage("r out of range for this search mode (cap " +
                        std::to_string(search_cap(mode, large != 0)) + ")");
        }
        SearchOptions opt;
        opt.jobs = jobs;
        opt.resume = resume != 0;
        if (progress_path) opt.progress_path = progress_path;
        const SearchResult res = mode == PLANAR2_SEARCH_ALL_DEGREES ? search_all_degrees(r, opt)
                                                                    : search_quadratic(r, opt);
        if (out_path) {
            if (fmt == "csv") {
                const std::string body = search_result_csv(res);
                FILE* fp = std::fopen(out_path, "wb");
                if (!fp) throw_io("cannot open result file for writing: " + std::string(out_path));
                const size_t n = std::fwrite(body.data(), 1, body.size(), fp);
                std::fclose(fp);
                if (n != body.size()) throw_io("failed to write result file");
            } else {
                emit_result(res, out_path);
            }
        }
        auto* rep = new planar2_report;
        rep->report.command = "search";
        rep->report.field = res.field;
        rep->report.elapsed_ms = res.elapsed_ms;
        rep->report.exit_status = 0;
        rep->report.payload = search_result_json(res);
        rep->search = res;
        *out = rep;
    });
}

int planar2_report_passed(const planar2_report* rep) {
    return rep->report.exit_status == 0 ? 1 : 0;
}

planar2_status planar2_report_to_json(const planar2_report* rep, char** out) {
    if (!out) return set_error(PLANAR2_ERR_USAGE, "out must not be null");
    *out = nullptr;
    return guarded([&] {
        const std::string s = report_to_json(rep->report);
        *out = new char[s.size() + 1];
        std::memcpy(*out, s.c_str(), s.size() + 1);
    });
}

planar2_status planar2_report_to_csv(const planar2_report* rep, char** out) {
    if (!out) return set_error(PLANAR2_ERR_USAGE, "out must not be null");
    *out = nullptr;
    return guarded([&] {
        if (!rep->search) throw_usage("CSV output is only valid for search reports");
        const std::string s = search_result_csv(*rep->search);
        *out = new char[s.size() + 1];
        std::memcpy(*out, s.c_str(), s.size() + 1);
    });
}

void planar2_report_destroy(planar2_report* rep) { delete rep; }

void planar2_string_free(char* s) { delete[] s; }

}  // extern "C"
