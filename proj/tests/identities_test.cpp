#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "mahonia/identities.hpp"

using namespace mahonia;

namespace {

const std::vector<std::string> kQZ{"q", "z"};

// poly in (q, z) from (q_exp, z_exp, coeff) triples
IntPolynomial qz(std::vector<std::tuple<int, int, long long>> terms) {
    IntPolynomial p(kQZ);
    for (auto [eq, ez, c] : terms) p.add_term({eq, ez}, c);
    return p;
}

std::vector<IdentityReport> collect(const std::string& id, const VerifyOptions& opt,
                                    bool expect_ok = true) {
    std::vector<IdentityReport> reports;
    bool ok = verify_identity(id, opt, [&](const IdentityReport& r) { reports.push_back(r); });
    CHECK(ok == expect_ok);
    return reports;
}

}  // namespace

TEST_CASE("signed quotient recursion matches hand values") {
    CHECK(s_recur(3, 2) == qz({{0, 1, 1}, {1, 1, -1}, {2, 0, 1}}));
    CHECK(s_recur(4, 3) == qz({{0, 1, 1}, {1, 1, -1}, {2, 1, 1}, {3, 0, -1}}));
    CHECK(s_recur(2, 2) == IntPolynomial::constant(kQZ, 1));
    CHECK(s_recur(5, 5) == IntPolynomial::constant(kQZ, 1));
    CHECK(s_recur(3, 0) == s_recur(3, 1));
    CHECK_THROWS_AS(s_recur(3, 4), OutOfRange);

    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(s_recur(n, k) == s_brute(n, k));
        }
}

TEST_CASE("signed quotient closed form") {
    CHECK(s_closed(3, 2) == qz({{0, 1, 1}, {1, 1, -1}, {2, 0, 1}}));
    CHECK(s_closed(4, 3) == s_recur(4, 3));
    CHECK(s_closed(4, 1) == s_brute(4, 1));
    CHECK(s_closed(4, 2) == s_brute(4, 2));
    CHECK(s_closed(5, 2) == s_brute(5, 2));
    CHECK(s_closed(6, 4) == s_brute(6, 4));
    CHECK(s_closed(5, 0) == s_closed(5, 1));
    CHECK_THROWS_AS(s_closed(4, 4), OutOfRange);
}

TEST_CASE("single variable product forms") {
    IntPolynomial one_minus_q3(std::vector<std::string>{"q"});
    one_minus_q3.add_term({0}, 1);
    one_minus_q3.add_term({3}, -1);
    CHECK(s_corollary(3, 2) == bracket(3, -1));
    CHECK(s_corollary(3, 1) == one_minus_q3);
    CHECK(s_corollary(4, 4) == IntPolynomial::constant({"q"}, 1));
    CHECK(s_corollary(5, 0) == s_corollary(5, 1));
    CHECK(s_corollary(5, 0) == gessel_simion_rhs(5));
    CHECK(gessel_simion_rhs(1) == IntPolynomial::constant({"q"}, 1));

    CHECK(gessel_simion_rhs(3) == one_minus_q3);
    CHECK(gessel_simion_rhs(4) == bracket(2, -1) * bracket(3) * bracket(4, -1));
}

TEST_CASE("rake closed forms and recursion") {
    CHECK(r_recur(4, 1) == r_closed_odd(4, 1));
    CHECK(r_closed_even_n(4, 2) == bracket(3) * bracket(4, -1));
    CHECK(r_closed_odd(3, 1) == r_brute(3, 1));
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k < n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(r_recur(n, k) == r_brute(n, k));
        }
    CHECK_THROWS_AS(r_closed_odd(4, 2), OutOfRange);
    CHECK_THROWS_AS(r_closed_even_n(5, 2), OutOfRange);
    CHECK_THROWS_AS(r_recur(3, 3), OutOfRange);
}

TEST_CASE("wreath right hand sides") {
    CHECK(grn_rhs(2, 2, 1) == bracket(4));
    CHECK(grpn_rhs(2, 2, 2, 1) == bracket(2) * bracket(2));
    CHECK(grpn_rhs(6, 3, 3, 0) == dual_fmaj_rhs(6, 3, 3));
    for (int r : {1, 2, 3})
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k < n; ++k) {
                CAPTURE(r);
                CAPTURE(n);
                CAPTURE(k);
                CHECK(grpn_rhs(r, 1, n, k) == grn_rhs(r, n, k));
            }
    CHECK(dual_fmaj_rhs(2, 1, 2) == bracket(2) * bracket(4));
    CHECK_THROWS_AS(grpn_rhs(4, 3, 3, 1), OutOfRange);
    CHECK_THROWS_AS(grn_rhs(2, 3, 3), OutOfRange);
}

TEST_CASE("pi right hand side") {
    IntPolynomial expect(std::vector<std::string>{"q"});
    expect.add_term({1}, 1);
    CHECK(pi_rhs(1, 2, 1) == expect);

    expect = IntPolynomial(std::vector<std::string>{"q"});
    expect.add_term({1}, 1);
    expect.add_term({2}, 1);
    expect.add_term({3}, 1);
    CHECK(pi_rhs(2, 2, 1) == expect);

    expect = IntPolynomial(std::vector<std::string>{"q"});
    expect.add_term({2}, 1);
    expect.add_term({3}, 1);
    expect.add_term({4}, 2);
    expect.add_term({5}, 1);
    CHECK(pi_rhs(1, 4, 2) == expect);

    CHECK(pi_rhs(3, 4, 0) == IntPolynomial::constant({"q"}, 1));
    CHECK_THROWS_AS(pi_rhs(2, 3, 2), OutOfRange);
}

TEST_CASE("verify runs the permutation identities") {
    VerifyOptions opt;
    opt.n_max = 5;
    auto cormain = collect("cormain", opt);
    CHECK(cormain.size() == 15);
    for (const auto& r : cormain) {
        CHECK(r.id == "cormain");
        CHECK(r.equal);
        CHECK(r.expected);
    }
    CHECK(collect("main", opt).size() == 10);
    CHECK(collect("recur", opt).size() == 10);
    CHECK(collect("gessel-simion", opt).size() == 5);
    CHECK(collect("rake-recur", opt).size() == 10);
    CHECK(collect("rake-odd", opt).size() == 6);

    opt.n_max = 4;
    CHECK(collect("rake-even", opt).size() == 6);
}

TEST_CASE("verify reports the rake agreement pattern") {
    VerifyOptions opt;
    opt.n_max = 5;
    auto reports = collect("snk-rnk", opt);
    CHECK(reports.size() == 15);
    for (const auto& r : reports) {
        int n = r.params["n"];
        int k = r.params["k"];
        CHECK(r.equal == r.expected);
        CHECK(r.expected == (n % 2 == 0 || k % 2 == 1 || k == 0 || k == n - 1));
        if (n == 5 && k == 2) CHECK_FALSE(r.equal);
        if (n == 3 && k == 2) CHECK(r.equal);  // k = n-1: both sides are [n]_{-q}
    }
}

TEST_CASE("verify runs the forest identities") {
    VerifyOptions opt;
    opt.n_max = 5;
    auto shapes = collect("bw-forest", opt);
    CHECK(shapes.size() == 1 + 2 + 4 + 9 + 20);
    opt.samples = 10;
    auto sampled = collect("bw-extension", opt);
    CHECK(sampled.size() == 10);
    for (const auto& r : sampled) CHECK(r.equal);
}

TEST_CASE("verify runs the wreath identities") {
    VerifyOptions opt;
    opt.n_max = 3;
    opt.r_values = {1, 2, 3};
    CHECK(collect("fmaj-dual", opt).size() == 3 + 6 + 6);

    opt.r_values = {2};
    auto grpn = collect("grpn", opt);
    CHECK(grpn.size() == 2 * (1 + 2 + 3));  // p in {1, 2}, k < n <= 3
    CHECK(collect("grn-transversal", opt).size() == 12);
    CHECK(collect("bij", opt).size() == 2);

    opt.samples = 3;
    opt.degree = 8;
    CHECK(collect("fg", opt).size() == 6);

    opt.r_values = {4};
    opt.p_values = {2};
    opt.n_max = 2;
    CHECK(collect("colori", opt).size() == 2);

    opt = VerifyOptions{};
    opt.n_max = 4;
    opt.r_values = {1, 2};
    opt.k_max = 2;
    for (const auto& r : collect("pi", opt)) CHECK(r.equal);
}

TEST_CASE("verify rejects unknown identifiers and tiny budgets") {
    VerifyOptions opt;
    opt.n_max = 3;
    CHECK_THROWS_AS(verify_identity("nope", opt, [](const IdentityReport&) {}),
                    std::invalid_argument);
    opt.budget = 1;
    CHECK_THROWS_AS(verify_identity("cormain", opt, [](const IdentityReport&) {}),
                    BudgetExceeded);
}

TEST_CASE("verify output is independent of the job count") {
    VerifyOptions seq, par;
    seq.n_max = 3;
    par.n_max = 3;
    par.jobs = 4;
    seq.r_values = par.r_values = {2};
    std::string a, b;
    verify_identity("grpn", seq, [&](const IdentityReport& r) { a += report_to_json(r).dump(); a += '\n'; });
    verify_identity("grpn", par, [&](const IdentityReport& r) { b += report_to_json(r).dump(); b += '\n'; });
    CHECK(a == b);
}

TEST_CASE("report serialization") {
    VerifyOptions opt;
    opt.n_max = 1;
    auto reports = collect("cormain", opt);
    REQUIRE(reports.size() == 1);
    auto j = report_to_json(reports[0]);
    CHECK(j.dump() ==
          R"({"id":"cormain","params":{"n":1,"k":1},"lhs":{"vars":["q"],"terms":[{"e":[0],"c":1}]},"rhs":{"vars":["q"],"terms":[{"e":[0],"c":1}]},"equal":true,"expected":true})");
}

TEST_CASE("identity catalogue") {
    const auto& ids = identity_ids();
    CHECK(ids.size() == 17);
    CHECK(ids.front() == "cormain");
    CHECK(std::find(ids.begin(), ids.end(), "grn-transversal") != ids.end());
    VerifyOptions opt;
    opt.n_max = 2;
    opt.r_values = {2};
    opt.samples = 2;
    opt.degree = 6;
    for (const auto& id : ids) {
        CAPTURE(id);
        bool ok = verify_identity(id, opt, [](const IdentityReport&) {});
        CHECK(ok);
    }
}

TEST_CASE("first open problem scan") {
    VerifyOptions opt;
    opt.n_max = 4;
    std::vector<nlohmann::ordered_json> rows;
    bool ok = scan_problem1(opt, [&](const nlohmann::ordered_json& row) { rows.push_back(row); });
    CHECK(ok);
    CHECK(rows.size() == 1 + 2 + 3 + 4);
    for (const auto& row : rows) {
        CHECK(row["conjecture"] == "problem1");
        int n = row["n"];
        int k = row["k"];
        CHECK(row["equal"] == row["expected"]);
        CHECK(row["expected"] == (n % 2 == 0 || k % 2 == 1));
        if (n == 3 && k == 2) CHECK(row["equal"] == false);
    }
}

TEST_CASE("second open problem scan") {
    VerifyOptions opt;
    opt.n_max = 2;
    opt.r_values = {2};
    std::vector<nlohmann::ordered_json> rows;
    scan_problem2(opt, [&](const nlohmann::ordered_json& row) { rows.push_back(row); });
    REQUIRE(rows.size() == 3);
    CHECK(rows[0]["conjecture"] == "problem2");
    CHECK(rows[0]["r"] == 2);
    CHECK(rows[0]["n"] == 1);
    CHECK(rows[0]["k"] == 0);
    CHECK(rows[0]["dist"] == poly_to_json(bracket(2)));
}
