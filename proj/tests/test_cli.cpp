// Golden runs against the installed CLI binary: output shapes, exit codes,
// and byte-stable JSON under --no-meta.
#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CORKAL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string first_line(const std::string& s) {
    const auto nl = s.find('\n');
    return nl == std::string::npos ? s : s.substr(0, nl);
}

}  // namespace

TEST_CASE("alex golden runs") {
    auto r = run_cli("alex --family 0,1");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "t^-1 - 1 + t");

    r = run_cli("alex --family 1,1");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "t^-2 - 3*t^-1 + 5 - 3*t + t^2");

    r = run_cli("alex --twist 0");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "1");

    r = run_cli("--json-only alex --cf [2,-2]");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"determinant\":\"3\"") != std::string::npos);
    CHECK(r.out.find("\"normalized\":\"t^-1 - 1 + t\"") != std::string::npos);

    r = run_cli("--json-only alex --family 0,1");
    CHECK(r.out.find(R"("coefficients":{"-1":"1","0":"-1","1":"1"})") != std::string::npos);
}

TEST_CASE("alex exit codes") {
    CHECK(run_cli("alex --family banana").exit_code == 2);
    CHECK(run_cli("alex --family -2,1").exit_code == 3);
    CHECK(run_cli("alex").exit_code == 2);
    CHECK(run_cli("alex --family 0,1 --twist 2").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("classify golden runs") {
    auto r = run_cli("--json-only classify --family 3,0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"class\":\"torus T(2,5)\"") != std::string::npos);

    r = run_cli("--json-only classify --family -1,-1");
    CHECK(r.out.find("\"class\":\"unknot\"") != std::string::npos);
    CHECK(r.out.find("\"fraction\":\"1/0\"") != std::string::npos);

    r = run_cli("--json-only classify --family 0,1");
    CHECK(r.out.find("left trefoil") != std::string::npos);
}

TEST_CASE("equiv golden runs") {
    auto r = run_cli("equiv 5/2 5/3");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "equivalent");
    r = run_cli("equiv 3/1 3/2");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "distinct");
    CHECK(run_cli("equiv 4/1 3/1").exit_code == 2);
}

TEST_CASE("product and recover round trip through the text format") {
    auto prod = run_cli("--json-only product --k 2 --tuple 2,3");
    REQUIRE(prod.exit_code == 0);
    // extract the "product" field from the single-line JSON
    const std::string needle = "\"product\":\"";
    const auto at = prod.out.find(needle);
    REQUIRE(at != std::string::npos);
    const auto end = prod.out.find('"', at + needle.size());
    const std::string poly = prod.out.substr(at + needle.size(), end - at - needle.size());

    auto rec = run_cli("recover --k 2 --bound 5 --poly '" + poly + "'");
    CHECK(rec.exit_code == 0);
    CHECK(first_line(rec.out) == "(2,3)");
}

TEST_CASE("recover outcomes") {
    auto r = run_cli("recover --k 1 --bound 3 --poly 1");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "(0)");

    r = run_cli("recover --k 1 --bound 3 --poly 't+1'");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "NoSolution");

    CHECK(run_cli("recover --k 1 --bound 3 --poly 't+'").exit_code == 2);
}

TEST_CASE("verify suites succeed") {
    auto r = run_cli("verify --suite lemma --no-meta");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"cases\":55") != std::string::npos);
    CHECK(r.out.find("\"failures\":[]") != std::string::npos);

    r = run_cli("verify --suite claim --k 2 --bound 3 --no-meta");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"cases\":49") != std::string::npos);

    r = run_cli("verify --suite homology --no-meta");
    CHECK(r.exit_code == 0);

    CHECK(run_cli("verify --suite claim --k 3 --bound 50").exit_code == 4);
    CHECK(run_cli("verify --suite banana").exit_code == 2);
}

TEST_CASE("verify output is byte-identical across runs with --no-meta") {
    const auto a = run_cli("--json-only --no-meta verify --suite all");
    const auto b = run_cli("--json-only --no-meta verify --suite all");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    // and across thread counts
    const auto c = run_cli("--json-only --no-meta --jobs 1 verify --suite claim");
    const auto d = run_cli("--json-only --no-meta --jobs 4 verify --suite claim");
    CHECK(c.out == d.out);
}

TEST_CASE("homology golden runs") {
    auto r = run_cli(std::string("homology --file ") + CORKAL_DATA_DIR + "/s4_handle_witness.json");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "betti (1,0,0,0,1)");
    CHECK(r.out.find("\"sphere4\":true") != std::string::npos);
    CHECK(r.out.find("\"euler\":2") != std::string::npos);

    r = run_cli(std::string("homology --file ") + CORKAL_DATA_DIR + "/double_s3xs1_s2xs2.json");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "betti (1,2,4,2,1)");
    CHECK(r.out.find("\"sphere4\":false") != std::string::npos);

    CHECK(run_cli("homology --file /does/not/exist").exit_code == 2);
}

TEST_CASE("snf golden runs") {
    auto r = run_cli("snf --matrix [[2,4],[6,8]]");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "diagonal (2,4)");
    CHECK(r.out.find("\"factorization_ok\":true") != std::string::npos);

    r = run_cli("--json-only snf --full --matrix [[1,0],[0,1]]");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"u\":") != std::string::npos);

    CHECK(run_cli("snf --matrix [[1,2],[3]]").exit_code == 2);
    CHECK(run_cli("snf").exit_code == 2);
}
