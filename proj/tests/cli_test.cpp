#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

// Runs the binary under test through the shell, capturing stdout only.
RunResult run(const std::string& args, const std::string& env = "") {
    const char* cli = std::getenv("MAHONIA_CLI");
    REQUIRE(cli != nullptr);
    std::string cmd = env + (env.empty() ? "" : " ") + cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("dist prints exact polynomials") {
    auto r = run("dist --family snk --n 3 --k 2 --signed");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "{\"vars\":[\"q\",\"z\"],\"terms\":[{\"e\":[0,1],\"c\":1},{\"e\":[1,1],\"c\":-1},"
          "{\"e\":[2,0],\"c\":1}]}\n");

    r = run("dist --family fmaj-ck --r 2 --p 1 --n 2 --k 1");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "{\"vars\":[\"q\"],\"terms\":[{\"e\":[0],\"c\":1},{\"e\":[1],\"c\":1},"
          "{\"e\":[2],\"c\":1},{\"e\":[3],\"c\":1}]}\n");
}

TEST_CASE("dist variable renaming and csv") {
    auto r = run("dist --family snk --n 3 --k 2 --signed --vars x,y");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"vars\":[\"x\",\"y\"]") != std::string::npos);

    r = run("dist --family snk --n 3 --k 2 --signed --vars x");
    CHECK(r.status == 2);

    r = run("dist --family fmaj-ck --r 2 --p 1 --n 2 --k 1 --format csv");
    CHECK(r.status == 0);
    CHECK(r.out == "q,c\n0,1\n1,1\n2,1\n3,1\n");
}

TEST_CASE("dist reads forests from stdin") {
    auto r = run("dist --family forest",
                 "printf '{\"n\":3,\"parent\":{\"1\":0,\"2\":1,\"3\":1}}' |");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "{\"vars\":[\"q\"],\"terms\":[{\"e\":[0],\"c\":2},{\"e\":[1],\"c\":2},"
          "{\"e\":[2],\"c\":2}]}\n");

    r = run("dist --family forest", "printf 'not json' |");
    CHECK(r.status == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("dist --family snk --n 3 --k 9").status == 2);
    CHECK(run("dist --family bogus --n 2 --k 1").status == 2);
    CHECK(run("verify --identity bogus").status == 2);
    CHECK(run("scan --conjecture bogus").status == 2);
    CHECK(run("dist").status == 2);
    CHECK(run("").status == 2);
    CHECK(run("--help").status == 0);
}

TEST_CASE("budget control exits 3") {
    CHECK(run("dist --family snk --n 6 --k 1 --budget 10").status == 3);
    CHECK(run("dist --family snk --n 6 --k 1", "MAHONIA_BUDGET=10").status == 3);
    CHECK(run("dist --family snk --n 6 --k 1 --budget 1000000", "MAHONIA_BUDGET=10").status ==
          0);
    CHECK(run("verify --identity cormain --n-max 6 --budget 10").status == 3);
    CHECK(run("dist --family snk --n 3 --k 1", "MAHONIA_BUDGET=junk").status == 2);
}

TEST_CASE("verify streams reports and exit codes") {
    auto r = run("verify --identity cormain --n-max 4");
    CHECK(r.status == 0);
    CHECK(count_lines(r.out) == 10);
    CHECK(r.out.find("\"id\":\"cormain\"") != std::string::npos);
    CHECK(r.out.find("\"equal\":true") != std::string::npos);
    CHECK(r.out.find("\"equal\":false") == std::string::npos);

    r = run("verify --identity snk-rnk --n-max 5");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"equal\":false,\"expected\":false") != std::string::npos);

    r = run("verify --identity grpn --r 2,3 --n-max 3");
    CHECK(r.status == 0);
    CHECK(count_lines(r.out) == 4 * 6);  // p in {1,2} resp {1,3}, six (n,k) pairs each
}

TEST_CASE("scan tables") {
    auto r = run("scan --conjecture problem1 --n-max 1");
    CHECK(r.status == 0);
    CHECK(count_lines(r.out) == 1);
    CHECK(r.out.find("\"equal\":true") != std::string::npos);

    r = run("scan --conjecture problem1 --n-max 4");
    CHECK(r.status == 0);
    CHECK(count_lines(r.out) == 10);

    r = run("scan --conjecture problem2 --r 2 --n-max 2");
    CHECK(r.status == 0);
    CHECK(count_lines(r.out) == 3);
    CHECK(r.out.find("\"conjecture\":\"problem2\"") != std::string::npos);
}

TEST_CASE("output is byte stable across job counts") {
    auto a = run("verify --identity grpn --r 2 --n-max 3 --jobs 1");
    auto b = run("verify --identity grpn --r 2 --n-max 3 --jobs 4");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    auto c = run("dist --family rake --n 6 --k 2 --jobs 1");
    auto d = run("dist --family rake --n 6 --k 2 --jobs 3");
    CHECK(c.status == 0);
    CHECK(c.out == d.out);
}
