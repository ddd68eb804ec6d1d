#include "search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "parallel.hpp"
#include "planarity.hpp"
#include "report.hpp"
#include "util.hpp"

namespace planar2 {

namespace {

using Clock = std::chrono::steady_clock;

constexpr uint64_t kExpandLimit = uint64_t{1} << 16;  // expand coefficients iff q-1 <= this

uint64_t quad_code(uint32_t i, uint32_t j) { return (uint64_t{i} << 8) | j; }

// Per-worker scratch for the occupancy checks.
struct Scratch {
    std::vector<uint64_t> powt;
    std::vector<uint64_t> stamp;
    std::vector<uint32_t> who;
    uint64_t epoch = 0;

    void prepare(uint64_t q) {
        if (powt.size() != q) {
            powt.assign(q, 0);
            stamp.assign(q, 0);
            who.assign(q, 0);
            epoch = 0;
        }
    }
};

bool shift_bijective_occupancy(const Field& f, Scratch& s, uint64_t shift) {
    const uint64_t q = f.order();
    const uint64_t epoch = ++s.epoch;
    for (uint64_t c = 0; c < q; ++c) {
        const uint64_t v = s.powt[c ^ 1] ^ s.powt[c] ^ f.mul(c, shift);
        if (s.stamp[v] == epoch) return false;
        s.stamp[v] = epoch;
        s.who[v] = static_cast<uint32_t>(c);
    }
    return true;
}

// Expands the planar a-cosets of one exponent into a Finding.
std::optional<Finding> make_finding(const Field& f, uint64_t t,
                                    std::optional<std::pair<uint32_t, uint32_t>> ij, uint64_t g,
                                    const std::vector<uint64_t>& planar_a_cosets) {
    if (planar_a_cosets.empty()) return std::nullopt;
    const uint64_t q = f.order();
    Finding out;
    out.t = t;
    out.ij = ij;
    out.g = g;
    out.coset_indices = planar_a_cosets;
    std::sort(out.coset_indices.begin(), out.coset_indices.end());
    out.pair_count = out.coset_indices.size() * ((q - 1) / g);
    if (q - 1 <= kExpandLimit) {
        out.coefficients.reserve(out.pair_count);
        for (uint64_t ma : out.coset_indices) {
            for (uint64_t n = ma; n < q - 1; n += g) out.coefficients.push_back(f.exp(n));
        }
        std::sort(out.coefficients.begin(), out.coefficients.end());
    }
    return out;
}

// Planar a-cosets from a gap image: shift-coset ms unhit means every a with
// dlog(a) = -ms (mod g) is planar.
std::vector<uint64_t> planar_cosets_from_gap(const GapImage& gap) {
    std::vector<uint64_t> out;
    for (uint64_t ms = 0; ms < gap.g; ++ms) {
        if (!gap.coset_hit[ms]) out.push_back((gap.g - ms) % gap.g);
    }
    return out;
}

std::optional<Finding> scan_quadratic_unit(const Field& f, uint32_t i, uint32_t j) {
    const GapImage gap = compute_gap_image(f, i, j);
    const uint64_t t = (uint64_t{1} << i) + (uint64_t{1} << j);
    return make_finding(f, t, std::make_pair(i, j), gap.g, planar_cosets_from_gap(gap));
}

std::optional<Finding> scan_exponent(const Field& f, uint64_t t, Scratch& scratch) {
    const uint64_t q = f.order();
    const int pc = std::popcount(t);

    if (pc == 2) {
        const uint32_t i = static_cast<uint32_t>(std::countr_zero(t));
        const uint32_t j = static_cast<uint32_t>(std::bit_width(t) - 1);
        return scan_quadratic_unit(f, i, j);
    }

    const uint64_t tm2 = t == 1 ? q - 2 : t - 2;
    const uint64_t g = std::gcd(tm2, q - 1);  // gcd(0, q-1) = q-1 covers t = 2
    std::vector<uint64_t> planar_a_cosets;

    if (pc == 1) {
        // (c+1)^t + c^t = 1 for t a power of 2, so each shifted map is
        // c -> 1 + s*c, bijective for every nonzero shift: all cosets planar
        planar_a_cosets.resize(g);
        std::iota(planar_a_cosets.begin(), planar_a_cosets.end(), 0);
        return make_finding(f, t, std::nullopt, g, planar_a_cosets);
    }

    scratch.prepare(q);
    for (uint64_t c = 0; c < q; ++c) scratch.powt[c] = f.pow(c, static_cast<int64_t>(t));
    for (uint64_t ms = 0; ms < g; ++ms) {
        bool all_ok = true;
        for (uint64_t n = ms; n < q - 1 && all_ok; n += g) {
            all_ok = shift_bijective_occupancy(f, scratch, f.exp(n));
        }
        if (all_ok) planar_a_cosets.push_back((g - ms) % g);
    }
    return make_finding(f, t, std::nullopt, g, planar_a_cosets);
}

void sort_findings(std::vector<Finding>& findings) {
    std::sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
        if (a.t != b.t) return a.t < b.t;
        const uint32_t ai = a.ij ? a.ij->first : 0, bi = b.ij ? b.ij->first : 0;
        return ai < bi;
    });
}

SearchResult run_search(uint32_t r, SearchMode mode, const SearchOptions& opt) {
    const auto t0 = Clock::now();
    if (r < 2 || r > 24) throw_usage("search supports 2 <= r <= 24");
    const Field f(r);
    if (!f.has_log_table()) throw_capability("search needs the discrete-log table");
    const uint64_t q = f.order();

    std::vector<uint64_t> units;
    if (mode == SearchMode::all_degrees) {
        for (uint64_t t = 2; t < q; ++t) units.push_back(t);
    } else {
        for (uint32_t i = 0; i + 1 < r; ++i) {
            for (uint32_t j = i + 1; j < r; ++j) units.push_back(quad_code(i, j));
        }
    }

    Progress prog;
    prog.r = r;
    prog.mode = mode;
    prog.modulus = f.modulus();
    if (opt.resume) {
        if (opt.progress_path.empty()) throw_usage("resume needs a progress path");
        if (std::filesystem::exists(opt.progress_path)) {
            Progress loaded = load_progress(opt.progress_path);
            if (loaded.r != r || loaded.mode != mode || loaded.modulus != f.modulus()) {
                throw_io("progress file belongs to a different search (r/mode/modulus mismatch)");
            }
            prog = std::move(loaded);
        }
    }

    const std::set<uint64_t> done(prog.completed.begin(), prog.completed.end());
    std::vector<uint64_t> pending;
    for (uint64_t u : units) {
        if (!done.count(u)) pending.push_back(u);
    }
    if (opt.max_units != 0 && pending.size() > opt.max_units) pending.resize(opt.max_units);

    std::atomic<size_t> next{0};
    std::mutex merge_mu;
    std::exception_ptr first_error;
    const unsigned jobs = resolve_jobs(opt.jobs);

    auto worker = [&] {
        Scratch scratch;
        for (;;) {
            const size_t idx = next.fetch_add(1);
            if (idx >= pending.size()) return;
            const uint64_t unit = pending[idx];
            try {
                std::optional<Finding> finding;
                if (mode == SearchMode::all_degrees) {
                    finding = scan_exponent(f, unit, scratch);
                } else {
                    finding = scan_quadratic_unit(f, static_cast<uint32_t>(unit >> 8),
                                                  static_cast<uint32_t>(unit & 0xff));
                }
                std::lock_guard<std::mutex> lock(merge_mu);
                prog.completed.push_back(unit);
                if (finding) prog.findings.push_back(std::move(*finding));
                if (!opt.progress_path.empty()) {
                    std::sort(prog.completed.begin(), prog.completed.end());
                    sort_findings(prog.findings);
                    save_progress(prog, opt.progress_path);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(merge_mu);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (unsigned i = 0; i < jobs; ++i) threads.emplace_back(worker);
        for (auto& th : threads) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    SearchResult res;
    res.r = r;
    res.mode = mode;
    res.field = f.desc();
    res.findings = std::move(prog.findings);
    sort_findings(res.findings);
    res.units_checked = prog.completed.size();
    for (const Finding& fd : res.findings) res.planar_pairs += fd.pair_count;
    res.elapsed_ms = static_cast<uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count());
    return res;
}

}  // namespace

SearchResult search_all_degrees(uint32_t r, const SearchOptions& opt) {
    return run_search(r, SearchMode::all_degrees, opt);
}

SearchResult search_quadratic(uint32_t r, const SearchOptions& opt) {
    return run_search(r, SearchMode::quadratic, opt);
}

void emit_result(const SearchResult& result, const std::string& path) {
    const std::string body = canonical_json(search_result_json(result, /*zero_elapsed=*/true));
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw_io("cannot open result file for writing: " + path);
    out << body;
    out.flush();
    if (!out) throw_io("failed to write result file: " + path);
}

namespace {

nlohmann::json progress_payload(const Progress& p) {
    nlohmann::json completed = nlohmann::json::array();
    for (uint64_t u : p.completed) {
        if (p.mode == SearchMode::quadratic) {
            completed.push_back({static_cast<uint32_t>(u >> 8), static_cast<uint32_t>(u & 0xff)});
        } else {
            completed.push_back(u);
        }
    }
    nlohmann::json findings = nlohmann::json::array();
    for (const Finding& f : p.findings) findings.push_back(finding_json(f));
    return {{"r", p.r},
            {"mode", search_mode_name(p.mode)},
            {"modulus", p.modulus},
            {"completed", completed},
            {"findings", findings}};
}

std::string hex16(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace

void save_progress(const Progress& progress, const std::string& path) {
    const nlohmann::json payload = progress_payload(progress);
    const nlohmann::json file{{"checksum", hex16(fnv1a64(payload.dump()))}, {"payload", payload}};
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw_io("cannot open progress file for writing: " + tmp);
        out << canonical_json(file);
        out.flush();
        if (!out) throw_io("failed to write progress file: " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw_io("failed to replace progress file: " + ec.message());
}

Progress load_progress(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_io("cannot open progress file: " + path);
    nlohmann::json file;
    try {
        in >> file;
    } catch (const std::exception& e) {
        throw_io("progress file is not valid JSON: " + std::string(e.what()));
    }
    try {
        const nlohmann::json& payload = file.at("payload");
        if (file.at("checksum").get<std::string>() != hex16(fnv1a64(payload.dump()))) {
            throw_io("progress file checksum mismatch (corrupt file)");
        }
        Progress p;
        p.r = payload.at("r").get<uint32_t>();
        const std::string mode = payload.at("mode").get<std::string>();
        if (mode == "all_degrees") {
            p.mode = SearchMode::all_degrees;
        } else if (mode == "quadratic") {
            p.mode = SearchMode::quadratic;
        } else {
            throw_io("progress file has unknown mode: " + mode);
        }
        p.modulus = payload.at("modulus").get<uint64_t>();
        for (const auto& u : payload.at("completed")) {
            if (p.mode == SearchMode::quadratic) {
                p.completed.push_back(quad_code(u.at(0).get<uint32_t>(), u.at(1).get<uint32_t>()));
            } else {
                p.completed.push_back(u.get<uint64_t>());
            }
        }
        for (const auto& jf : payload.at("findings")) {
            Finding f;
            f.t = jf.at("t").get<uint64_t>();
            if (jf.contains("i")) {
                f.ij = std::make_pair(jf.at("i").get<uint32_t>(), jf.at("j").get<uint32_t>());
            }
            f.g = jf.at("coset").at("g").get<uint64_t>();
            f.coset_indices = jf.at("coset").at("indices").get<std::vector<uint64_t>>();
            f.coefficients = jf.at("planar_coefficients").get<std::vector<uint64_t>>();
            f.pair_count = jf.at("pair_count").get<uint64_t>();
            p.findings.push_back(std::move(f));
        }
        return p;
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw_io("progress file has unexpected shape: " + std::string(e.what()));
    }
}

}  // namespace planar2
