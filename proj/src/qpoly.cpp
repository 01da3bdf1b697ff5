#include "mahonia/qpoly.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

namespace mahonia {

IntPolynomial IntPolynomial::constant(Int c) {
    IntPolynomial p;
    p.add_term({}, c);
    return p;
}

IntPolynomial IntPolynomial::constant(std::vector<std::string> vars, Int c) {
    IntPolynomial p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

IntPolynomial IntPolynomial::monomial(std::vector<std::string> vars, Exponents e, Int c) {
    IntPolynomial p(std::move(vars));
    if (e.size() != p.vars_.size()) throw std::invalid_argument("monomial: exponent arity mismatch");
    for (int x : e)
        if (x < 0) throw std::invalid_argument("monomial: negative exponent");
    p.add_term(e, c);
    return p;
}

IntPolynomial IntPolynomial::variable(const std::string& name) {
    return monomial({name}, {1}, 1);
}

bool IntPolynomial::has_var(const std::string& name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

int IntPolynomial::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw UnknownVariable("unknown variable: " + name);
    return static_cast<int>(it - vars_.begin());
}

Int IntPolynomial::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

int IntPolynomial::degree_in(const std::string& name) const {
    if (is_zero()) return -1;
    int idx = var_index(name);
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

void IntPolynomial::add_term(const Exponents& e, const Int& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("add_term: exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::vector<std::string> union_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& name : b)
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    return out;
}

IntPolynomial IntPolynomial::extended(const std::vector<std::string>& vars) const {
    std::vector<int> where(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        if (it == vars.end()) throw UnknownVariable("extended: missing variable " + vars_[i]);
        where[i] = static_cast<int>(it - vars.begin());
    }
    IntPolynomial out(vars);
    for (const auto& [e, c] : terms_) {
        Exponents ne(vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
        out.add_term(ne, c);
    }
    return out;
}

namespace {

// Brings both operands into the merged variable list before any arithmetic.
void align(const IntPolynomial& a, const IntPolynomial& b, IntPolynomial& ax, IntPolynomial& bx) {
    if (a.vars() == b.vars()) {
        ax = a;
        bx = b;
        return;
    }
    auto u = union_vars(a.vars(), b.vars());
    ax = a.extended(u);
    bx = b.extended(u);
}

}  // namespace

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (vars_ == rhs.vars_) {
        for (const auto& [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }
    IntPolynomial ax, bx;
    align(*this, rhs, ax, bx);
    for (const auto& [e, c] : bx.terms_) ax.add_term(e, c);
    return *this = std::move(ax);
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    return *this += -rhs;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
    IntPolynomial ax, bx;
    align(*this, rhs, ax, bx);
    IntPolynomial out(ax.vars_);
    for (const auto& [ea, ca] : ax.terms_) {
        for (const auto& [eb, cb] : bx.terms_) {
            Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return *this = std::move(out);
}

bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    IntPolynomial ax, bx;
    align(a, b, ax, bx);
    return ax.terms_ == bx.terms_;
}

IntPolynomial bracket(int n, int sign, const std::string& var) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("bracket: sign must be +-1");
    IntPolynomial p({var});
    Int c = 1;
    for (int i = 0; i < n; ++i) {
        p.add_term({i}, c);
        c *= sign;
    }
    return p;
}

IntPolynomial bracket_of(int n, const IntPolynomial& x) {
    IntPolynomial sum = IntPolynomial::constant(x.vars(), 0);
    IntPolynomial pw = IntPolynomial::constant(x.vars(), 1);
    for (int i = 0; i < n; ++i) {
        sum += pw;
        pw *= x;
    }
    return sum;
}

IntPolynomial bracket_product(const std::vector<std::pair<int, int>>& factors,
                              const std::string& var) {
    IntPolynomial out = IntPolynomial::constant({var}, 1);
    for (const auto& [n, sign] : factors) out *= bracket(n, sign, var);
    return out;
}

IntPolynomial power(IntPolynomial base, int e) {
    if (e < 0) throw std::invalid_argument("power: negative exponent");
    IntPolynomial out = IntPolynomial::constant(base.vars(), 1);
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

IntPolynomial exact_div(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero()) throw NotDivisible("exact_div: zero divisor");
    IntPolynomial rem, dx;
    align(num, den, rem, dx);
    IntPolynomial quot(rem.vars());
    const auto& dlead = *dx.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        Exponents e(rlead.first.size());
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = rlead.first[i] - dlead.first[i];
            if (e[i] < 0) throw NotDivisible("exact_div: nonzero remainder");
        }
        if (rlead.second % dlead.second != 0) throw NotDivisible("exact_div: nonzero remainder");
        IntPolynomial t = IntPolynomial::monomial(rem.vars(), e, rlead.second / dlead.second);
        quot += t;
        rem -= t * dx;
    }
    return quot;
}

IntPolynomial substitute_negated(const IntPolynomial& p, const std::string& var) {
    int idx = p.var_index(var);
    IntPolynomial out(p.vars());
    for (const auto& [e, c] : p.terms()) out.add_term(e, e[idx] % 2 == 0 ? c : -c);
    return out;
}

IntPolynomial eval_at_one(const IntPolynomial& p, const std::string& var) {
    int idx = p.var_index(var);
    std::vector<std::string> rest = p.vars();
    rest.erase(rest.begin() + idx);
    IntPolynomial out(rest);
    for (const auto& [e, c] : p.terms()) {
        Exponents ne = e;
        ne.erase(ne.begin() + idx);
        out.add_term(ne, c);
    }
    return out;
}

namespace {

nlohmann::ordered_json coeff_to_json(const Int& c) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (c >= lo && c <= hi) return c.convert_to<std::int64_t>();
    return c.str();
}

Int coeff_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<std::int64_t>());
}

}  // namespace

nlohmann::ordered_json poly_to_json(const IntPolynomial& p) {
    nlohmann::ordered_json out;
    out["vars"] = p.vars();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::ordered_json t;
        t["e"] = e;
        t["c"] = coeff_to_json(c);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

IntPolynomial poly_from_json(const nlohmann::json& j) {
    IntPolynomial p(j.at("vars").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms")) {
        p.add_term(t.at("e").get<Exponents>(), coeff_from_json(t.at("c")));
    }
    return p;
}

std::string poly_to_csv(const IntPolynomial& p) {
    std::ostringstream os;
    for (const auto& v : p.vars()) os << v << ',';
    os << "c\n";
    for (const auto& [e, c] : p.terms()) {
        for (int x : e) os << x << ',';
        os << c << '\n';
    }
    return os.str();
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unitm = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (a != 1 || unitm) os << a;
        bool printed = a != 1 || unitm;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << '*';
            os << vars_[i];
            if (e[i] > 1) os << '^' << e[i];
            printed = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
    return os << p.str();
}

}  // namespace mahonia
