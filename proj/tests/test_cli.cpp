#include "catch_amalgamated.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "meanineq/report.hpp"

using Catch::Approx;

namespace {

struct CmdResult {
    int code;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(MEANINEQ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    f << content;
}

std::string strip_volatile(const std::string& json_text) {
    // drop the timestamp and duration lines before byte comparison
    std::string out;
    std::istringstream in(json_text);
    std::string line;
    while (std::getline(in, line))
        if (line.find("\"timestamp\"") == std::string::npos &&
            line.find("\"duration_ms\"") == std::string::npos)
            out += line + "\n";
    return out;
}

} // namespace

TEST_CASE("mean command") {
    CHECK(run_cli("mean A 1 3").out == "2\n");
    CHECK(run_cli("mean gini:0:0 4 9").out == "6\n");
    CHECK(run_cli("mean lehmer:2 1 2").out == "1.66666666666667\n");
    CHECK(run_cli("mean power:2 1 7").out == "5\n");
    CHECK(run_cli("mean A 1 3").code == 0);
}

TEST_CASE("mean command error paths") {
    CHECK(run_cli("mean bogus 1 3").code == 2);
    CHECK(run_cli("mean A one 3").code == 2);
    CHECK(run_cli("mean A 1").code == 2);          // missing argument
    CHECK(run_cli("mean A -1 3").code == 1);       // domain error
    CHECK(run_cli("unknown-subcommand").code == 2);
}

TEST_CASE("audit command") {
    const CmdResult ok = run_cli("audit thm31-43 --samples 5000 --seed 42");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("result: pass") != std::string::npos);

    CHECK(run_cli("audit no-such-chain").code == 2);

    write_file("bad.chain", "name broken\nedge 1 D(A,G) <= 1/2 D(A,H)\n");
    const CmdResult bad = run_cli("audit bad.chain --samples 2000 --seed 7");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("[fail]") != std::string::npos);
    CHECK(bad.out.find("witness") != std::string::npos);
    std::remove("bad.chain");
}

TEST_CASE("audit json format contract") {
    const CmdResult r = run_cli("audit thm31-44 --samples 10 --seed 7 --format json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j.at("tool") == "meanineq");
    CHECK(j.at("command") == "audit thm31-44");
    CHECK(j.at("config").at("samples") == 10);
    CHECK(j.at("config").at("seed") == 7);
    REQUIRE(j.at("checks").is_array());
    CHECK(j.at("checks").size() >= 8);
    for (const auto& c : j.at("checks")) {
        CHECK(c.contains("name"));
        CHECK(c.contains("verdict"));
        CHECK(c.contains("max_violation"));
        CHECK(c.contains("witness"));
    }
}

TEST_CASE("range flag is honored") {
    const CmdResult r = run_cli("audit eq11 --samples 200 --seed 1 --range 0.5:2 --format json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j.at("config").at("range").at(0) == 0.5);
    CHECK(j.at("config").at("range").at(1) == 2.0);
    CHECK(run_cli("audit eq11 --range nope").code == 2);
    CHECK(run_cli("audit eq11 --range 5:1").code == 1);  // lo >= hi is a config domain error
}

TEST_CASE("report json round trip") {
    const CmdResult r = run_cli("audit eq11 --samples 50 --seed 3 --format json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    const auto doc = meanineq::ReportDocument::from_json(j);
    CHECK(doc.to_json().dump(2) + "\n" == r.out);
}

TEST_CASE("betas command") {
    const CmdResult r = run_cli("betas");
    CHECK(r.code == 0);
    int part_rows = 0;
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line))
        if (line.find("part ") != std::string::npos) ++part_rows;
    CHECK(part_rows == 41);
    CHECK(r.out.find("8/9, matches published value") != std::string::npos);
    CHECK(r.out.find("part 41") != std::string::npos);
    CHECK(r.out.find("1, matches published value") != std::string::npos);
    CHECK(r.out.find("misprint, oracle-confirmed 4/5") != std::string::npos);
    CHECK(r.out.find("misprint, oracle-confirmed 1") != std::string::npos);

    const CmdResult csv = run_cli("betas --format csv");
    CHECK(csv.out.find("name,verdict,max_violation,witness") == 0);
}

TEST_CASE("certify command") {
    const CmdResult h1 = run_cli("certify builtin:h1");
    CHECK(h1.code == 0);
    CHECK(h1.out.find("strictly-positive-on-positive-axis") != std::string::npos);
    CHECK(h1.out.find("value(1)=56") != std::string::npos);
    CHECK(h1.out.find("-5.3594918") != std::string::npos);
    CHECK(h1.out.find("-0.1865848") != std::string::npos);

    const CmdResult h3 = run_cli("certify builtin:h3");
    CHECK(h3.code == 0);
    CHECK(h3.out.find("value(1)=416") != std::string::npos);

    const CmdResult ind = run_cli("certify \"t^2 - 4\"");
    CHECK(ind.code == 1);
    CHECK(ind.out.find("indefinite") != std::string::npos);

    CHECK(run_cli("certify \"q + 1\"").code == 2);
    CHECK(run_cli("certify builtin:nope").code == 2);
}

TEST_CASE("divergence command") {
    write_file("P.csv", "0.5\n0.5\n");
    write_file("Q.csv", "0.25\n0.75\n");
    CHECK(run_cli("divergence psi P.csv Q.csv").out == "0.583333333333333\n");
    CHECK(run_cli("divergence psi P.csv P.csv").out == "0\n");
    CHECK(run_cli("divergence j Q.csv Q.csv").out == "0\n");

    const CmdResult chain = run_cli("divergence --chain P.csv Q.csv --format json");
    REQUIRE(chain.code == 0);
    const auto j = nlohmann::ordered_json::parse(chain.out);
    int comparisons = 0;
    for (const auto& c : j.at("checks")) {
        CHECK(c.at("verdict") == "pass");
        if (std::string(c.at("name")).find("<=") != std::string::npos) ++comparisons;
    }
    CHECK(comparisons == 17);

    write_file("Z.csv", "0\n1\n");
    CHECK(run_cli("divergence psi Z.csv Q.csv").code == 1);
    CHECK(run_cli("divergence psi Z.csv Q.csv --smooth").code == 0);

    write_file("U.csv", "2\n6\n");
    CHECK(run_cli("divergence psi U.csv Q.csv").code == 1);
    CHECK(run_cli("divergence psi U.csv Q.csv --normalize").code == 0);

    write_file("R3.csv", "0.2\n0.3\n0.5\n");
    CHECK(run_cli("divergence psi P.csv R3.csv").code == 1);   // length mismatch
    CHECK(run_cli("divergence psi missing.csv Q.csv").code == 2);
    CHECK(run_cli("divergence psi P.csv").code == 2);          // too few arguments
    for (const char* f : {"P.csv", "Q.csv", "Z.csv", "U.csv", "R3.csv"}) std::remove(f);
}

TEST_CASE("json reports are byte-identical for identical config") {
    const std::string args = "audit thm31-44 --samples 500 --seed 9 --format json";
    const CmdResult r1 = run_cli(args);
    const CmdResult r2 = run_cli(args);
    REQUIRE(r1.code == 0);
    REQUIRE(r2.code == 0);
    CHECK(strip_volatile(r1.out) == strip_volatile(r2.out));
}

TEST_CASE("output file flag") {
    const std::string path = "report_out.json";
    const CmdResult r = run_cli("audit eq12 --samples 100 --seed 1 --format json --output " + path);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    nlohmann::ordered_json j;
    f >> j;
    CHECK(j.at("command") == "audit eq12");
    std::remove(path.c_str());
}
