// Golden matrix of CLI invocations: exit codes, report shapes, determinism,
// and the kill-and-resume flow. Drives the installed binary as a subprocess.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/types.h>
#include <sys/wait.h>

#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#ifndef PLANAR2_CLI_PATH
#define PLANAR2_CLI_PATH "./planar2"
#endif

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + std::string(PLANAR2_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("field inspection") {
    const RunResult res = run_cli("field --r 4 --show-modulus");
    CHECK(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j.at("command") == "field");
    CHECK(j.at("field").at("modulus_enc") == 19);
    CHECK(j.at("field").at("generator_enc") == 2);
    CHECK(j.at("payload").at("modulus_poly") == "x^4+x+1");
    CHECK(j.at("payload").at("q") == 16);
}

TEST_CASE("planar monomial exits 0, with coefficient given as a generator power") {
    const RunResult by_pow = run_cli("check --r 6 --t 20 --a-pow 3");
    CHECK(by_pow.exit_code == 0);
    const json j = json::parse(by_pow.out);
    CHECK(j.at("payload").at("verdict").at("planar") == true);
    CHECK(j.at("exit_status") == 0);

    const uint64_t a_enc = j.at("payload").at("monomial").at("a_enc");
    const RunResult by_enc = run_cli("check --r 6 --t 20 --a-enc " + std::to_string(a_enc));
    CHECK(by_enc.exit_code == 0);
    CHECK(json::parse(by_enc.out).at("payload") == j.at("payload"));
}

TEST_CASE("non-planar monomial exits 1 and includes a witness") {
    const RunResult res = run_cli("check --r 4 --t 10 --a-enc 1");
    CHECK(res.exit_code == 1);
    const json j = json::parse(res.out);
    CHECK(j.at("exit_status") == 1);
    CHECK(j.at("payload").at("verdict").at("planar") == false);
    CHECK_FALSE(j.at("payload").at("verdict").at("witness").is_null());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("check --r 4 --t 10").exit_code == 2);            // missing coefficient
    CHECK(run_cli("check --r 0 --t 5 --a-enc 1").exit_code == 2);   // bad degree
    CHECK(run_cli("check --r 4 --t 10 --a-enc 1 --a-pow 1").exit_code == 2);
    CHECK(run_cli("verify fermat --Q 5").exit_code == 2);           // not a power of 2
    CHECK(run_cli("verify curve --r 6 --J 5").exit_code == 2);      // J does not divide r
    CHECK(run_cli("verify weil-gap --r 7 --J 2").exit_code == 2);   // J > r/4
    CHECK(run_cli("frobnicate").exit_code == 2);                    // unknown subcommand
    CHECK(run_cli("search --r 4 --mode sideways").exit_code == 2);  // bad mode
    CHECK(run_cli("search --r 13 --mode all").exit_code == 2);      // beyond default cap
    CHECK(run_cli("check --r 4 --t 10 --a-enc 1", "PLANAR2_JOBS=abc").exit_code == 2);
}

TEST_CASE("verifier subcommands pass at desk sizes") {
    const RunResult fermat = run_cli("verify fermat --Q 4");
    CHECK(fermat.exit_code == 0);
    CHECK(json::parse(fermat.out).at("payload").at("cases_checked") == 72);

    CHECK(run_cli("verify theorem1 --k 1").exit_code == 0);
    CHECK(run_cli("verify prop-odd --r 4").exit_code == 0);
    CHECK(run_cli("verify identities --m 4").exit_code == 0);
    CHECK(run_cli("verify minpoly --Q 4").exit_code == 0);
    CHECK(run_cli("verify root-d --m 4").exit_code == 0);
    CHECK(run_cli("verify weil-gap --r 8 --J 2").exit_code == 0);
    CHECK(run_cli("verify curve --r 4 --J 2").exit_code == 0);
    CHECK(run_cli("verify no-de --k 1 --a-enc 8").exit_code == 0);
}

TEST_CASE("a verified counterexample exits 1") {
    const RunResult res = run_cli("verify no-de --k 1 --a-enc 1");
    CHECK(res.exit_code == 1);
    const json j = json::parse(res.out);
    CHECK(j.at("payload").at("pass") == false);
    CHECK(j.at("payload").at("counterexample").contains("d"));
}

TEST_CASE("quadratic search CSV has exactly the five degree-5 rows") {
    const RunResult res = run_cli("search --r 4 --mode quadratic --format csv");
    CHECK(res.exit_code == 0);
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(res.out);
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "r,t,i,j,a_enc,planar");
    for (size_t i = 1; i < lines.size(); ++i) CHECK(lines[i].substr(0, 8) == "4,5,0,2,");
}

TEST_CASE("search output files are byte-identical across jobs settings") {
    const std::string p1 = temp_path("planar2_cli_det1.json");
    const std::string p2 = temp_path("planar2_cli_det2.json");
    CHECK(run_cli("search --r 8 --mode all --out " + p1 + " --jobs 1").exit_code == 0);
    CHECK(run_cli("search --r 8 --mode all --out " + p2, "PLANAR2_JOBS=2").exit_code == 0);
    CHECK(slurp(p1) == slurp(p2));
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
    std::filesystem::remove(p1 + ".progress");
    std::filesystem::remove(p2 + ".progress");
}

TEST_CASE("kill and resume reproduces the clean result") {
    const std::string out = temp_path("planar2_cli_killed.json");
    const std::string progress = temp_path("planar2_cli_killed.progress");
    const std::string clean = temp_path("planar2_cli_clean.json");
    std::filesystem::remove(out);
    std::filesystem::remove(progress);

    const pid_t pid = fork();
    REQUIRE(pid >= 0);
    if (pid == 0) {
        execl(PLANAR2_CLI_PATH, PLANAR2_CLI_PATH, "search", "--r", "10", "--mode", "all", "--out",
              out.c_str(), "--progress", progress.c_str(), "--jobs", "1", (char*)nullptr);
        _exit(127);
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(60));
    kill(pid, SIGKILL);
    int status = 0;
    waitpid(pid, &status, 0);

    // resume from whatever the sidecar recorded (possibly nothing)
    const RunResult resumed = run_cli("search --r 10 --mode all --out " + out + " --progress " +
                                      progress + " --resume");
    CHECK(resumed.exit_code == 0);
    CHECK(run_cli("search --r 10 --mode all --out " + clean).exit_code == 0);
    CHECK(slurp(out) == slurp(clean));

    std::filesystem::remove(out);
    std::filesystem::remove(progress);
    std::filesystem::remove(clean);
    std::filesystem::remove(clean + ".progress");
}

TEST_CASE("a progress file from a different field is rejected") {
    const std::string progress = temp_path("planar2_cli_mismatch.progress");
    std::filesystem::remove(progress);
    CHECK(run_cli("search --r 4 --mode all --progress " + progress).exit_code == 0);
    CHECK(run_cli("search --r 6 --mode all --progress " + progress + " --resume").exit_code == 2);
    std::filesystem::remove(progress);
}

TEST_CASE("stdout reports parse and re-serialize to the same bytes") {
    const RunResult res = run_cli("verify prop-odd --r 6");
    CHECK(res.exit_code == 0);
    CHECK(json::parse(res.out).dump() + "\n" == res.out);
}
