#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "mahonia/forest.hpp"
#include "mahonia/identities.hpp"
#include "mahonia/permstat.hpp"
#include "mahonia/qpoly.hpp"
#include "mahonia/wreath.hpp"

namespace {

constexpr long long kDefaultBudget = 5'000'000;

long long env_budget() {
    const char* s = std::getenv("MAHONIA_BUDGET");
    if (!s || !*s) return kDefaultBudget;
    try {
        long long v = std::stoll(s);
        if (v <= 0) throw std::invalid_argument("MAHONIA_BUDGET must be positive");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad MAHONIA_BUDGET value: ") + s);
    }
}

mahonia::IntPolynomial renamed(const mahonia::IntPolynomial& p,
                               const std::vector<std::string>& names) {
    if (names.empty()) return p;
    if (names.size() != p.vars().size())
        throw std::invalid_argument("--vars expects " + std::to_string(p.vars().size()) +
                                    " name(s) for this family");
    mahonia::IntPolynomial out(names);
    for (const auto& [e, c] : p.terms()) out.add_term(e, c);
    return out;
}

void print_poly(const mahonia::IntPolynomial& p, const std::string& format,
                const std::vector<std::string>& names) {
    auto q = renamed(p, names);
    if (format == "csv")
        std::cout << mahonia::poly_to_csv(q);
    else
        std::cout << mahonia::poly_to_json(q).dump() << '\n';
}

struct DistArgs {
    std::string family;
    int n = 0;
    int k = -1;
    int r = 1;
    int p = 1;
    bool is_signed = false;
    int jobs = 1;
    std::string format = "json";
    std::vector<std::string> vars;
    long long budget = 0;
};

void check_budget(const mahonia::Int& size, long long budget, const std::string& what) {
    if (size > mahonia::Int(budget))
        throw mahonia::BudgetExceeded(what + " needs " + size.str() + " steps, budget " +
                                      std::to_string(budget));
}

mahonia::Int int_factorial(int n) {
    mahonia::Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

mahonia::Int int_pow(int b, int e) {
    mahonia::Int v = 1;
    for (int i = 0; i < e; ++i) v *= b;
    return v;
}

int cmd_dist(const DistArgs& a) {
    using namespace mahonia;
    IntPolynomial out;
    if (a.family == "snk") {
        if (a.n < 1 || a.k < 0 || a.k > a.n)
            throw std::invalid_argument("snk: need 1 <= n and 0 <= k <= n");
        check_budget(int_factorial(a.n) / int_factorial(a.k), a.budget, "snk");
        out = quotient_distribution(a.n, a.k, a.is_signed, a.jobs);
    } else if (a.family == "snk-prime") {
        if (a.n < 1 || a.k < 0 || a.k > a.n)
            throw std::invalid_argument("snk-prime: need 1 <= n and 0 <= k <= n");
        check_budget(int_factorial(a.n), a.budget, "snk-prime");
        out = prime_quotient_distribution(a.n, a.k, a.jobs);
    } else if (a.family == "rake") {
        if (a.n < 1 || a.k < 0 || a.k >= a.n)
            throw std::invalid_argument("rake: need 0 <= k < n");
        check_budget(int_factorial(a.n) / int_factorial(a.k), a.budget, "rake");
        out = rake_distribution(a.n, a.k, a.jobs);
    } else if (a.family == "forest") {
        nlohmann::json spec;
        try {
            std::cin >> spec;
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("forest: bad JSON on stdin: ") + e.what());
        }
        ForestPoset f = forest_from_json(spec);
        check_budget(int_factorial(f.size()), a.budget, "forest");
        out = label_maj_distribution(f);
    } else if (a.family == "fmaj-ck") {
        if (a.r < 1 || a.p < 1 || a.r % a.p != 0 || a.n < 1 || a.k < 0 || a.k >= a.n)
            throw std::invalid_argument("fmaj-ck: need p | r and 0 <= k < n");
        check_budget(int_pow(a.r, a.n) * int_factorial(a.n), a.budget, "fmaj-ck");
        out = a.is_signed ? signed_fmaj_inverse_distribution(a.r, a.p, a.n, a.k, a.jobs)
                          : fmaj_inverse_distribution(a.r, a.p, a.n, a.k, a.jobs);
    } else if (a.family == "pi") {
        if (a.r < 1 || a.k < 0 || a.n < 2 * a.k)
            throw std::invalid_argument("pi: need 1 <= r and 0 <= 2k <= n");
        check_budget(int_factorial(a.n) / int_factorial(a.n - a.k) * int_pow(a.r, a.k),
                     a.budget, "pi");
        out = pi_distribution(a.r, a.n, a.k, a.jobs);
    } else {
        throw std::invalid_argument("unknown family: " + a.family);
    }
    print_poly(out, a.format, a.vars);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact mahonian distribution toolkit"};
    app.require_subcommand(1);

    DistArgs d;
    mahonia::VerifyOptions v;
    std::string identity, conjecture;
    long long budget_flag = 0;

    auto* dist = app.add_subcommand("dist", "Print one distribution polynomial");
    dist->add_option("--family", d.family, "snk|snk-prime|rake|forest|fmaj-ck|pi")
        ->required();
    dist->add_option("--n", d.n, "number of letters (ignored for --family forest)");
    dist->add_option("--k", d.k, "family parameter k");
    dist->add_option("--r", d.r, "number of colors");
    dist->add_option("--p", d.p, "divisor of r selecting the dual quotient");
    dist->add_flag("--signed", d.is_signed, "weight by the sign character");
    dist->add_option("--format", d.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    dist->add_option("--vars", d.vars, "rename output variables")->delimiter(',');
    dist->add_option("--jobs", d.jobs, "worker threads")->check(CLI::PositiveNumber);
    dist->add_option("--budget", budget_flag, "enumeration budget");

    auto* verify = app.add_subcommand("verify", "Check one identity on a parameter grid");
    verify->add_option("--identity", identity, "identity id, see README")->required();
    verify->add_option("--n-max", v.n_max, "largest n in the grid");
    verify->add_option("--k-max", v.k_max, "largest k in the grid (default: all valid k)");
    verify->add_option("--r", v.r_values, "color counts")->delimiter(',');
    verify->add_option("--p", v.p_values, "divisors of r (default: all)")->delimiter(',');
    verify->add_option("--samples", v.samples, "sample count for randomized identities");
    verify->add_option("--seed", v.seed, "RNG seed for randomized identities");
    verify->add_option("--degree", v.degree, "series truncation degree");
    verify->add_option("--jobs", v.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--budget", budget_flag, "enumeration budget");

    auto* scan = app.add_subcommand("scan", "Tabulate an open-problem observation");
    scan->add_option("--conjecture", conjecture, "problem1|problem2")->required();
    scan->add_option("--n-max", v.n_max, "largest n in the grid");
    scan->add_option("--k-max", v.k_max, "largest k in the grid");
    scan->add_option("--r", v.r_values, "color counts")->delimiter(',');
    scan->add_option("--jobs", v.jobs, "worker threads")->check(CLI::PositiveNumber);
    scan->add_option("--budget", budget_flag, "enumeration budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        long long budget = budget_flag > 0 ? budget_flag : env_budget();
        if (dist->parsed()) {
            d.budget = budget;
            return cmd_dist(d);
        }
        v.budget = budget;
        if (verify->parsed()) {
            bool ok = verify_identity(identity, v, [](const mahonia::IdentityReport& rep) {
                std::cout << mahonia::report_to_json(rep).dump() << '\n';
            });
            return ok ? 0 : 1;
        }
        auto sink = [](const nlohmann::ordered_json& row) { std::cout << row.dump() << '\n'; };
        if (conjecture == "problem1") {
            mahonia::scan_problem1(v, sink);
        } else if (conjecture == "problem2") {
            mahonia::scan_problem2(v, sink);
        } else {
            throw std::invalid_argument("unknown conjecture: " + conjecture);
        }
        return 0;
    } catch (const mahonia::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const mahonia::OutOfRange& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
