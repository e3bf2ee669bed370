// End-to-end checks of the installed command surface: spawns the real
// binary (path in CMI_CLI) and checks exit codes and output fragments.
// Exit contract: 0 holds, 1 refuted, 2 input error, 3 budget exceeded.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int code = -1;
    std::string out; // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("CMI_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "CMI_CLI must point at the cli binary");
    std::string cmd = "\"" + std::string(bin) + "\" " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

std::string write_temp(const char* name, const std::string& content) {
    auto path = temp_path(name);
    FILE* f = std::fopen(path.c_str(), "wb");
    REQUIRE(f != nullptr);
    std::fwrite(content.data(), 1, content.size(), f);
    std::fclose(f);
    return path;
}

} // namespace

TEST_CASE("cli usage and input errors exit 2") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("no-such-command").code == 2);
    CHECK(run_cli("betti").code == 2);                            // missing input
    CHECK(run_cli("betti --ideal \"x1^\"").code == 2);            // parse error
    CHECK(run_cli("betti --corpus nonesuch").code == 2);          // unknown fixture
    CHECK(run_cli("betti --ideal \"x1\" --ideal \"x2\"").code == 2);
    CHECK(run_cli("dual --ideal \"x1^2\"").code == 2);            // dual wants squarefree
    CHECK(run_cli("--format yaml corpus").code == 2);

    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("certify --help").code == 0);
}

TEST_CASE("cli corpus") {
    auto list = run_cli("corpus");
    CHECK(list.code == 0);
    CHECK(contains(list.out, "hachimori_d1"));
    CHECK(contains(list.out, "dunce_hat_dual"));
    CHECK(contains(list.out, "ziegler_ideal"));

    auto dunce = run_cli("corpus dunce_hat");
    CHECK(dunce.code == 0);
    CHECK(contains(dunce.out, "vertices: 1..8"));
    CHECK(contains(dunce.out, "constructible: false"));

    auto entry = run_cli("--format structured corpus ziegler_i2");
    CHECK(entry.code == 0);
    CHECK(contains(entry.out, "\"ideal\""));
    CHECK(contains(entry.out, "\"gens\""));
}

TEST_CASE("cli elementwise commands") {
    // the facet list may follow the header on one line
    auto dual = run_cli("dual --complex \"vertices: 0..2 {0,1}\"");
    CHECK(dual.code == 0);
    CHECK(contains(dual.out, "x2"));

    auto sr = run_cli("sr --complex \"vertices: 0..2 {0,1},{1,2}\"");
    CHECK(sr.code == 0);
    CHECK(contains(sr.out, "x0*x2"));

    auto colon = run_cli("colon --ideal \"x1*x2, x1*x3\" --by \"x2*x3\"");
    CHECK(colon.code == 0);
    CHECK(contains(colon.out, "x1"));

    auto polarized = run_cli("polarize --ideal \"x1^2\"");
    CHECK(polarized.code == 0);
    CHECK(contains(polarized.out, "x1*x1_2"));

    auto meet = run_cli("intersect --corpus ziegler_i1 --corpus ziegler_i2");
    CHECK(meet.code == 0);
    CHECK(contains(meet.out, "x1^2*x2^2*x3*x6*x7"));

    // file inputs carry their own vars header
    auto a = write_temp("cmi_cli_sum_a.txt", "vars: x1..x3\nx1*x2\n");
    auto b = write_temp("cmi_cli_sum_b.txt", "vars: x1..x3\nx2*x3\n");
    auto sum = run_cli("sum --ideal " + a + " --ideal " + b);
    CHECK(sum.code == 0);
    CHECK(contains(sum.out, "x1*x2, x2*x3"));
    std::filesystem::remove(a);
    std::filesystem::remove(b);

    auto complement = run_cli("complement --complex \"vertices: 0..2 {0,1},{1,2}\"");
    CHECK(complement.code == 0);
    CHECK(contains(complement.out, "{0}, {2}"));
}

TEST_CASE("cli betti and linear-resolution") {
    auto grid = run_cli("betti --ideal \"x1*x2, x1*x3, x2*x3\"");
    CHECK(grid.code == 0);
    CHECK(contains(grid.out, "characteristic 0"));

    auto structured = run_cli("betti --ideal \"x1*x2, x1*x3, x2*x3\" --format structured");
    CHECK(structured.code == 0);
    CHECK(contains(structured.out, "\"entries\""));
    CHECK(contains(structured.out, "\"value\": 3"));
    CHECK(contains(structured.out, "\"value\": 2"));

    CHECK(run_cli("betti --corpus dunce_hat_dual --char 2").code == 0);
    CHECK(run_cli("betti --ideal \"x1\" --char 6").code == 2); // 6 is not a field

    CHECK(run_cli("linear-resolution --corpus dunce_hat_dual").code == 0);
    CHECK(run_cli("linear-resolution --ideal \"x1*x2, x3*x4\"").code == 1);
    CHECK(run_cli("linear-resolution --ideal \"x1, x2*x3\"").code == 2);
}

TEST_CASE("cli order checks and searches") {
    // a list of the wrong monomials is not a permutation of the generators
    std::string wrong_order = "x1^2*x2^2*x3*x6*x7, x1^2*x2^2*x4*x5*x8, x1^2*x2*x4*x5*x7*x8, "
                              "x1^2*x2*x5*x6*x7*x8, x1*x2^2*x3*x6*x7*x8, x1*x2^2*x5*x6*x7*x8";
    CHECK(run_cli("check-lq --corpus ziegler_i2 --order \"" + wrong_order + "\"").code == 2);

    auto lq = run_cli("find-lq --corpus ziegler_i2");
    CHECK(lq.code == 0);
    CHECK(contains(lq.out, "linear quotients"));

    CHECK(run_cli("find-lq --ideal \"x1*x2, x3*x4\"").code == 1);
    CHECK(run_cli("find-lq --corpus hachimori_dual --budget 3").code == 3);

    auto shell = run_cli("check-shelling --corpus hachimori_d2 --order "
                         "\"{0,1,4},{1,2,4},{2,4,5},{1,2,5},{0,1,5},{0,5,6},{0,1,6},{1,2,6}\"");
    CHECK(shell.code == 0);
    CHECK(contains(shell.out, "valid"));

    CHECK(run_cli("check-lq --ideal \"x1*x2, x3*x4\" --order \"x1*x2, x3*x4\"").code == 1);

    auto bad_shell = run_cli("check-shelling --complex \"vertices: 0..3 {0,1},{2,3}\" "
                             "--order \"{0,1},{2,3}\"");
    CHECK(bad_shell.code == 1);

    auto found = run_cli("find-shelling --corpus hachimori_d1");
    CHECK(found.code == 0);
    CHECK(contains(found.out, "shellable"));
    CHECK(run_cli("find-shelling --complex \"vertices: 0..3 {0,1},{2,3}\"").code == 1);
    CHECK(run_cli("find-shelling --corpus hachimori --budget 10").code == 3);
}

TEST_CASE("cli certify and verify-cert") {
    auto cert_file = temp_path("cmi_cli_test_cert.json");

    auto ok = run_cli("certify --ideal \"x1*x2, x2*x3\" --out " + cert_file);
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "constructible"));

    auto verify = run_cli("verify-cert --ideal \"x1*x2, x2*x3\" --cert " + cert_file);
    CHECK(verify.code == 0);
    CHECK(contains(verify.out, "verifies"));

    // same tree against a different ideal in the same ring: refuted
    auto mismatch = run_cli("verify-cert --ideal \"x1*x3, x2*x3\" --cert " + cert_file);
    CHECK(mismatch.code == 1);
    CHECK(contains(mismatch.out, "rejected"));

    CHECK(run_cli("certify --ideal \"x1*x2, x3*x4\"").code == 1);
    CHECK(run_cli("certify --corpus dunce_hat_dual --budget 100").code == 3);

    // hinted search accepts the stored bipartition
    auto hinted = run_cli("certify --corpus ziegler_ideal --stored-hint --format structured");
    CHECK(hinted.code == 0);
    CHECK(contains(hinted.out, "\"verdict\": \"constructible\""));
    CHECK(run_cli("certify --ideal \"x1*x2, x2*x3\" --stored-hint").code == 2);

    // complexes certify through the same command
    auto complex_cert = run_cli("certify --complex \"vertices: 0..2 {0,1},{1,2}\"");
    CHECK(complex_cert.code == 0);
    CHECK(run_cli("certify --complex \"vertices: 0..3 {0,1},{2,3}\"").code == 1);

    std::filesystem::remove(cert_file);
}

TEST_CASE("cli structured ideal round trip") {
    auto out_file = temp_path("cmi_cli_test_dual.json");
    auto emit = run_cli("--format structured dual --corpus hachimori_d1 --out " + out_file);
    CHECK(emit.code == 0);

    // structured output feeds back in as an input file
    auto reload = run_cli("find-lq --ideal " + out_file);
    CHECK(reload.code == 0);
    CHECK(contains(reload.out, "linear quotients"));
    std::filesystem::remove(out_file);
}
