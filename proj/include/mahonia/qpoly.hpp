#pragma once

// Sparse exact-integer polynomials in a small ordered set of named variables,
// plus the q-bracket helpers used throughout the library.  Coefficients are
// arbitrary-precision so no distribution can silently overflow.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace mahonia {

using Int = boost::multiprecision::cpp_int;
using Exponents = std::vector<int>;

struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownVariable : std::runtime_error {
    explicit UnknownVariable(const std::string& what) : std::runtime_error(what) {}
};

class IntPolynomial {
public:
    // Zero polynomial with no variables (a bare integer constant once terms are added).
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static IntPolynomial constant(Int c);
    static IntPolynomial constant(std::vector<std::string> vars, Int c);
    // Invariant: e.size() == vars.size(), all exponents >= 0.
    static IntPolynomial monomial(std::vector<std::string> vars, Exponents e, Int c);
    static IntPolynomial variable(const std::string& name);

    const std::vector<std::string>& vars() const { return vars_; }
    // Terms keyed by exponent tuple, ascending lexicographic order, no zero coefficients.
    const std::map<Exponents, Int>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool has_var(const std::string& name) const;
    int var_index(const std::string& name) const;  // throws UnknownVariable
    Int coeff(const Exponents& e) const;
    int degree_in(const std::string& name) const;  // -1 for the zero polynomial

    // Same polynomial viewed in a variable list that contains vars() as a subset.
    IntPolynomial extended(const std::vector<std::string>& vars) const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);
    IntPolynomial operator-() const;

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }

    // Equality of the underlying polynomials; variable lists are merged first,
    // so a constant compares equal regardless of which variables it mentions.
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

    void add_term(const Exponents& e, const Int& c);

    std::string str() const;

private:
    std::vector<std::string> vars_;
    std::map<Exponents, Int> terms_;
};

// [n]_q or [n]_{-q}: sum_{i<n} (sign*q)^i.  sign must be +1 or -1.
IntPolynomial bracket(int n, int sign = +1, const std::string& var = "q");

// Geometric bracket sum_{i<n} x^i for an arbitrary polynomial x, e.g. [n]_{q^m} or [n]_{-qt}.
IntPolynomial bracket_of(int n, const IntPolynomial& x);

// Product of brackets given as (n, sign) pairs; empty product is 1.
IntPolynomial bracket_product(const std::vector<std::pair<int, int>>& factors,
                              const std::string& var = "q");

IntPolynomial power(IntPolynomial base, int e);

// Exact polynomial division: throws NotDivisible unless den divides num with
// integer coefficients and zero remainder.
IntPolynomial exact_div(const IntPolynomial& num, const IntPolynomial& den);

// p with var negated: flips the sign of every term with odd exponent in var.
IntPolynomial substitute_negated(const IntPolynomial& p, const std::string& var);

// p with var set to 1; the result lives in the remaining variables.
IntPolynomial eval_at_one(const IntPolynomial& p, const std::string& var);

// Wire format: {"vars":["q","z"],"terms":[{"e":[i,j],"c":n},...]}, terms in
// ascending lexicographic exponent order.  Coefficients outside int64 range are
// serialized as decimal strings.
nlohmann::ordered_json poly_to_json(const IntPolynomial& p);
IntPolynomial poly_from_json(const nlohmann::json& j);

// CSV: header names the variables then "c"; one row per term, same order as JSON.
std::string poly_to_csv(const IntPolynomial& p);

std::vector<std::string> union_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

}  // namespace mahonia
