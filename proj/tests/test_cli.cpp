// End-to-end checks of the command-line binary (path injected at build time).
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef SSTP_CLI_PATH
#error "SSTP_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    const std::string out_path = "/tmp/sstp_cli_test_out.txt";
    std::string cmd = std::string(SSTP_CLI_PATH) + " " + args + " > " + out_path +
                      " 2>/tmp/sstp_cli_test_err.txt";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out_path);
    return r;
}

const char* kInstancePath = "/tmp/sstp_cli_test_instance.sstp";
const char* kRootedPath = "/tmp/sstp_cli_test_rooted.sstp";

void make_instances() {
    static bool done = false;
    if (done) return;
    REQUIRE(run(std::string("gen --seed 3 --vertices 5 --scenarios 2 --out ") +
                kInstancePath)
                .exit_code == 0);
    REQUIRE(run(std::string("gen --seed 4 --vertices 5 --scenarios 2 --rooted --out ") +
                kRootedPath)
                .exit_code == 0);
    done = true;
}

}  // namespace

TEST_CASE("cli: usage errors exit with 2") {
    CHECK(run("").exit_code == 2);                       // missing subcommand
    CHECK(run("frobnicate").exit_code == 2);             // unknown subcommand
    CHECK(run("solve").exit_code == 2);                  // missing arguments
    CHECK(run("gen --vertices 1").exit_code == 2);       // out-of-range value
    make_instances();
    CHECK(run(std::string("solve ") + kInstancePath + " -f bogus").exit_code == 2);
    // rooted-only formulation on an unrooted instance is a usage error
    CHECK(run(std::string("solve ") + kInstancePath + " -f df").exit_code == 2);
}

TEST_CASE("cli: missing input files exit with 1") {
    CHECK(run("solve /nonexistent.sstp -f uc").exit_code == 1);
}

TEST_CASE("cli: gen is deterministic and help exits zero") {
    make_instances();
    RunResult a = run("gen --seed 3 --vertices 5 --scenarios 2");
    RunResult b = run("gen --seed 3 --vertices 5 --scenarios 2");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == slurp(kInstancePath));
    CHECK(run("--help").exit_code == 0);
    CHECK(run("solve --help").exit_code == 0);
}

TEST_CASE("cli: solve emits a parseable, byte-stable report") {
    make_instances();
    RunResult a = run(std::string("solve ") + kInstancePath + " -f uc");
    REQUIRE(a.exit_code == 0);
    RunResult b = run(std::string("solve ") + kInstancePath + " -f uc");
    CHECK(a.out == b.out);  // no volatile fields by default
    nlohmann::json j = nlohmann::json::parse(a.out);
    CHECK(j["schema"] == 1);
    CHECK(j["formulation"] == "uc");
    CHECK(j["bound_type"] == "ip");
    CHECK(j["status"] == "optimal");
    CHECK(j["objective"].is_number());
    CHECK(!j.contains("wall_time_s"));

    RunResult timed = run(std::string("solve ") + kInstancePath + " -f uc --timings");
    nlohmann::json jt = nlohmann::json::parse(timed.out);
    CHECK(jt.contains("wall_time_s"));
}

TEST_CASE("cli: relaxation bounds never exceed the integer optimum") {
    make_instances();
    nlohmann::json ip = nlohmann::json::parse(
        run(std::string("solve ") + kInstancePath + " -f sdc2").out);
    nlohmann::json lp = nlohmann::json::parse(
        run(std::string("relax ") + kInstancePath + " -f sdc2").out);
    nlohmann::json half = nlohmann::json::parse(
        run(std::string("relax ") + kInstancePath + " -f sdc2 --relax-first-stage")
            .out);
    CHECK(lp["bound_type"] == "lp_relaxation");
    CHECK(half["bound_type"] == "first_stage_relaxed");
    double vip = ip["objective"], vlp = lp["objective"], vhalf = half["objective"];
    CHECK(vlp <= vip + 1e-6);
    CHECK(vhalf <= vip + 1e-6);
    CHECK(vlp <= vhalf + 1e-6);
}

TEST_CASE("cli: objective rewriting switches to the star twin") {
    make_instances();
    nlohmann::json printed = nlohmann::json::parse(
        run(std::string("solve ") + kInstancePath + " -f sdc2 --objective printed").out);
    nlohmann::json rewritten = nlohmann::json::parse(
        run(std::string("solve ") + kInstancePath + " -f sdc2 --objective rewritten")
            .out);
    CHECK(printed["formulation"] == "sdc2");
    CHECK(rewritten["formulation"] == "sdc2star");
    CHECK(double(printed["objective"]) ==
          doctest::Approx(double(rewritten["objective"])));
}

TEST_CASE("cli: lp dumps and valid inequalities") {
    make_instances();
    const char* dump = "/tmp/sstp_cli_test_dump.lp";
    REQUIRE(run(std::string("relax ") + kRootedPath + " -f dc2 --dump-lp " + dump)
                .exit_code == 0);
    std::string text = slurp(dump);
    CHECK(text.find("Minimize") != std::string::npos);
    CHECK(text.find("Subject To") != std::string::npos);

    nlohmann::json plain = nlohmann::json::parse(
        run(std::string("relax ") + kRootedPath + " -f dc2").out);
    nlohmann::json strengthened = nlohmann::json::parse(
        run(std::string("relax ") + kRootedPath + " -f dc2 --with-valid-inequalities")
            .out);
    CHECK(double(strengthened["objective"]) >= double(plain["objective"]) - 1e-6);
}

TEST_CASE("cli: compare runs across formulations") {
    make_instances();
    RunResult tsv = run(std::string("compare ") + kInstancePath);
    CHECK(tsv.exit_code == 0);
    CHECK(tsv.out.find("formulation\tlp_bound") == 0);
    CHECK(tsv.out.find("\ndf\t") == std::string::npos);   // rooted-only ids skipped
    CHECK(tsv.out.find("\ndc1\t") == std::string::npos);
    CHECK(tsv.out.find("\nsdf\t") != std::string::npos);  // unrooted ids present

    RunResult rooted = run(std::string("compare ") + kRootedPath + " --format json");
    CHECK(rooted.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(rooted.out);
    CHECK(j["runs"].size() == 10);  // all ids apply on a rooted instance
    CHECK(j["flags"].empty());

    RunResult subset =
        run(std::string("compare ") + kInstancePath + " -f uc,uf --format json");
    nlohmann::json js = nlohmann::json::parse(subset.out);
    REQUIRE(js["runs"].size() == 2);
    CHECK(double(js["runs"][0]["lp_bound"]) ==
          doctest::Approx(double(js["runs"][1]["lp_bound"])));
}

TEST_CASE("cli: verify-paper passes and reports per-claim lines") {
    RunResult r = run("verify-paper");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
