#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(BEANBOUND_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("extremal prints the exact coefficient lists") {
    auto r = run_cli("extremal --k 1 --order 5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "1, 1/4, -1/24, -5/192, 17/1920"));

    r = run_cli("--format csv extremal --k 3 --order 7");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "4,1/8"));
    CHECK(contains(r.out, "7,-1/56"));

    r = run_cli("extremal --k 5");
    CHECK(r.exit_code != 0);
    r = run_cli("extremal --k 1 --order 100");
    CHECK(r.exit_code != 0);
}

TEST_CASE("lemma evaluators through the CLI") {
    auto r = run_cli("lemma Y --A 1 --B 2 --C 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "4"));
    CHECK(contains(r.out, "i-first"));

    r = run_cli("lemma D --B 17/24 --D 41/96");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "true"));

    r = run_cli("lemma E --gamma 8857/36864 --lambda 25/36 --alpha 37/64 --beta 1363/1728");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "-22111611107/495338913792"));

    r = run_cli("lemma C --v 23/32");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "2"));

    r = run_cli("lemma F --B1 1/16 --B2 -23/768 --B3 1/24 --format json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "minus-second"));

    r = run_cli("lemma Q --A 1");
    CHECK(r.exit_code == 1);
}

TEST_CASE("verify: exit codes and determinism") {
    auto r = run_cli("verify --seed 7 --samples 2000 --refine 1");
    CHECK(r.exit_code == 0);

    r = run_cli("verify --samples 0");
    CHECK(r.exit_code == 1);

    // not violated but not attained either: exit 3
    r = run_cli("verify --samples 50 --refine 0 --no-witnesses --functional gamma3");
    CHECK(r.exit_code == 3);
    CHECK(contains(r.out, "inconclusive"));

    auto a = run_cli("--format json verify --seed 11 --samples 3000 --functional hankel_log");
    auto b = run_cli("--format json verify --seed 11 --samples 3000 --functional hankel_log");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "\"attained\":0.0069444444444")); // ~ 1/144
    CHECK(contains(a.out, "\"verdict\":\"confirmed\""));

    auto csv = run_cli("--format csv verify --seed 3 --samples 1000 --functional gamma2");
    CHECK(contains(csv.out, "theorem_id,bound,attained,gap,verdict"));
    CHECK(contains(csv.out, "gamma2,"));
}

TEST_CASE("plot psi and psi1 emit the exact polynomial rows") {
    auto r = run_cli("plot psi --resolution 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "t,value"));
    CHECK(contains(r.out, "0,256"));
    CHECK(contains(r.out, "0.5,205.5625"));
    CHECK(contains(r.out, "1,73"));

    r = run_cli("plot psi1 --resolution 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "0,256"));
    CHECK(contains(r.out, "1,13"));

    r = run_cli("plot psi --resolution 1");
    CHECK(r.exit_code == 1);
}

TEST_CASE("plot bean runs its self-checks and emits the curve") {
    auto r = run_cli("plot bean --resolution 8");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "theta,re,im"));
    // theta = 0 row: w = sqrt(1 + tanh 1) = 1.3272506...
    CHECK(contains(r.out, "0,1.3272506"));

    const std::string svg = "/tmp/beanbound_test_bean.svg";
    std::remove(svg.c_str());
    r = run_cli("plot bean --resolution 64 --svg " + svg);
    CHECK(r.exit_code == 0);
    FILE* f = fopen(svg.c_str(), "r");
    REQUIRE(f != nullptr);
    char head[64] = {0};
    const size_t got = fread(head, 1, 60, f);
    fclose(f);
    CHECK(got > 4);
    CHECK(std::string(head).rfind("<svg", 0) == 0);
    std::remove(svg.c_str());
}

TEST_CASE("coeffs and functionals commands") {
    auto r = run_cli("coeffs --tau1 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "c1,2,"));
    CHECK(contains(r.out, "a2,0.25,"));

    r = run_cli("--format json functionals --k 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"functional\":\"gamma2\""));
    CHECK(contains(r.out, "\"exact\":\"1/12\""));
    CHECK(contains(r.out, "\"functional\":\"hankel_log\""));
    CHECK(contains(r.out, "\"exact\":\"1/144\""));

    // gamma4 unavailable without c4
    r = run_cli("functionals --tau1 0.5 --tau2 0.1,0.2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "gamma4 = unavailable"));
    r = run_cli("functionals --tau1 0.5 --tau2 0.1,0.2 --tau4 0.3,0.1");
    CHECK(r.exit_code == 0);
    CHECK(!contains(r.out, "unavailable"));

    r = run_cli("functionals");
    CHECK(r.exit_code == 1);
}
