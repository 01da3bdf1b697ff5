#include "mahonia/wreath.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "mahonia/block_sum.hpp"

namespace mahonia {

namespace {

void check_same_modulus(const ColoredPermutation& a, const ColoredPermutation& b) {
    if (a.modulus() != b.modulus())
        throw ModulusMismatch("color moduli differ: " + std::to_string(a.modulus()) +
                              " vs " + std::to_string(b.modulus()));
}

int checked_shift(int r, int p) {
    if (p < 1 || r < 1 || r % p != 0)
        throw std::invalid_argument("p must be a positive divisor of r");
    return r / p;
}

// Least weakly decreasing lift of the colors, scanning right to left.
std::vector<int> minimal_lift(int r, const std::vector<int>& colors) {
    int n = static_cast<int>(colors.size());
    std::vector<int> k(n);
    for (int i = n - 1; i >= 0; --i) {
        int floor_next = i + 1 < n ? k[i + 1] : 0;
        int diff = floor_next - colors[i];
        k[i] = colors[i] + (diff <= 0 ? 0 : (diff + r - 1) / r * r);
    }
    return k;
}

bool entrywise_leq(const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Words with a fixed first letter, ascending lexicographic order.
template <class Fn>
void for_each_word_first(int n, int first, Fn&& fn) {
    std::vector<int> word(n);
    word[0] = first;
    int pos = 1;
    for (int v = 1; v <= n; ++v)
        if (v != first) word[pos++] = v;
    do {
        fn(word);
    } while (std::next_permutation(word.begin() + 1, word.end()));
}

template <class Fn>
void for_each_color_vector(int r, int n, Fn&& fn) {
    std::vector<int> c(n, 0);
    for (;;) {
        fn(c);
        int i = n - 1;
        while (i >= 0 && ++c[i] == r) c[i--] = 0;
        if (i < 0) return;
    }
}

template <class Fn>
void for_each_group_block(int r, int n, int first, Fn&& fn) {
    for_each_word_first(n, first, [&](const std::vector<int>& word) {
        Permutation sigma(word);
        for_each_color_vector(r, n, [&](const std::vector<int>& colors) {
            fn(ColoredPermutation(r, sigma, colors));
        });
    });
}

std::vector<int> json_int_vector(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw std::invalid_argument(std::string("missing array field: ") + key);
    return j[key].get<std::vector<int>>();
}

}  // namespace

ColoredPermutation::ColoredPermutation(int r, Permutation word, std::vector<int> colors)
    : r_(r), word_(std::move(word)), colors_(std::move(colors)) {
    if (r_ < 1) throw std::invalid_argument("color modulus must be positive");
    if (static_cast<int>(colors_.size()) != word_.size())
        throw std::invalid_argument("colors and word lengths differ");
    for (int z : colors_)
        if (z < 0 || z >= r_) throw std::invalid_argument("color out of range");
}

ColoredPermutation ColoredPermutation::identity(int r, int n) {
    return ColoredPermutation(r, Permutation::identity(n), std::vector<int>(n, 0));
}

ColoredPermutation ColoredPermutation::inverse() const {
    Permutation tau = word_.inverse();
    std::vector<int> w(colors_.size());
    for (int i = 1; i <= size(); ++i) w[i - 1] = (r_ - colors_[tau(i) - 1]) % r_;
    return ColoredPermutation(r_, std::move(tau), std::move(w));
}

ColoredPermutation operator*(const ColoredPermutation& a, const ColoredPermutation& b) {
    check_same_modulus(a, b);
    int n = a.size();
    std::vector<int> word(n), colors(n);
    for (int i = 1; i <= n; ++i) {
        int j = b.word_(i);
        word[i - 1] = a.word_(j);
        colors[i - 1] = (a.colors_[j - 1] + b.colors_[i - 1]) % a.r_;
    }
    return ColoredPermutation(a.r_, Permutation(std::move(word)), std::move(colors));
}

bool operator<(const ColoredPermutation& a, const ColoredPermutation& b) {
    if (a.r_ != b.r_) return a.r_ < b.r_;
    if (!(a.word_ == b.word_)) return a.word_ < b.word_;
    return a.colors_ < b.colors_;
}

nlohmann::ordered_json colored_to_json(const ColoredPermutation& g) {
    nlohmann::ordered_json j;
    j["r"] = g.modulus();
    j["word"] = g.word().word();
    j["colors"] = g.colors();
    return j;
}

ColoredPermutation colored_from_json(const nlohmann::json& j) {
    if (!j.contains("r") || !j["r"].is_number_integer())
        throw std::invalid_argument("missing integer field: r");
    return ColoredPermutation(j["r"].get<int>(), Permutation(json_int_vector(j, "word")),
                              json_int_vector(j, "colors"));
}

long long group_order(int r, int n) {
    long long order = factorial(n);
    for (int i = 0; i < n; ++i) order *= r;
    return order;
}

long long dual_group_order(int r, int p, int n) {
    checked_shift(r, p);
    return group_order(r, n) / p;
}

void for_each_group_element(int r, int n,
                            const std::function<void(const ColoredPermutation&)>& fn) {
    for (int first = 1; first <= n; ++first) for_each_group_block(r, n, first, fn);
}

void for_each_grpn_element(int r, int p, int n,
                           const std::function<void(const ColoredPermutation&)>& fn) {
    checked_shift(r, p);
    for_each_group_element(r, n, [&](const ColoredPermutation& g) {
        int sum = std::accumulate(g.colors().begin(), g.colors().end(), 0);
        if (sum % p == 0) fn(g);
    });
}

DualElement::DualElement(const ColoredPermutation& g, int p) : p_(p) {
    int r = g.modulus();
    int m = checked_shift(r, p);
    int n = g.size();
    std::vector<std::vector<int>> colors(p), lifts(p);
    for (int j = 0; j < p; ++j) {
        colors[j].resize(n);
        for (int i = 0; i < n; ++i) colors[j][i] = (g.colors()[i] + j * m) % r;
        lifts[j] = minimal_lift(r, colors[j]);
    }
    int best = -1;
    for (int j = 0; j < p; ++j) {
        bool least = true;
        for (int l = 0; l < p && least; ++l) least = entrywise_leq(lifts[j], lifts[l]);
        if (least) {
            best = j;
            break;
        }
    }
    if (best < 0)
        throw NoEntrywiseMinimum("no entrywise-least k-vector among the " +
                                 std::to_string(p) + " shifts of " +
                                 colored_to_json(g).dump());
    rep_ = ColoredPermutation(r, g.word(), std::move(colors[best]));
    kvec_ = std::move(lifts[best]);
}

std::vector<int> DualElement::hdes() const {
    std::vector<int> out;
    for (int i = 1; i < size(); ++i)
        if (rep_.color(i) == rep_.color(i + 1) && rep_.word()(i) > rep_.word()(i + 1))
            out.push_back(i);
    return out;
}

std::vector<int> DualElement::h_vec() const {
    std::vector<int> h(size(), 0);
    for (int i : hdes())
        for (int j = 0; j < i; ++j) ++h[j];
    return h;
}

std::vector<int> DualElement::lambda_vec() const {
    std::vector<int> lambda = h_vec();
    for (int i = 0; i < size(); ++i) lambda[i] = modulus() * lambda[i] + kvec_[i];
    return lambda;
}

long long DualElement::fmaj() const {
    auto lambda = lambda_vec();
    return std::accumulate(lambda.begin(), lambda.end(), 0LL);
}

nlohmann::ordered_json dual_to_json(const DualElement& g) {
    auto j = colored_to_json(g.rep());
    j["p"] = g.quotient_index();
    return j;
}

DualElement dual_from_json(const nlohmann::json& j) {
    if (!j.contains("p") || !j["p"].is_number_integer())
        throw std::invalid_argument("missing integer field: p");
    return DualElement(colored_from_json(j), j["p"].get<int>());
}

void for_each_dual_element(int r, int p, int n,
                           const std::function<void(const DualElement&)>& fn) {
    for_each_group_element(r, n, [&](const ColoredPermutation& g) {
        DualElement d(g, p);
        if (d.rep() == g) fn(d);
    });
}

bool in_window_set(const ColoredPermutation& g, int p, int k) {
    int m = checked_shift(g.modulus(), p);
    if (k < 0 || k >= g.size()) throw std::invalid_argument("window size out of range");
    if (k == 0) return true;
    for (int i = 1; i < k; ++i) {
        if (g.word()(i) > g.word()(i + 1)) return false;
        if (g.color(i) != g.color(i + 1)) return false;
    }
    return g.color(1) % m == 0;
}

void for_each_window_element(int r, int p, int n, int k,
                             const std::function<void(const DualElement&)>& fn) {
    for_each_dual_element(r, p, n, [&](const DualElement& d) {
        if (in_window_set(d.rep(), p, k)) fn(d);
    });
}

namespace {

// Shared shape of the three wreath distributions: a block per first word
// letter keeps any jobs count byte-identical.
template <class Weight>
IntPolynomial dual_sum(int r, int p, int n, int jobs, Weight&& weight) {
    auto block = [&](int b) {
        IntPolynomial part({"q"});
        for_each_group_block(r, n, b + 1, [&](const ColoredPermutation& g) {
            DualElement d(g, p);
            if (d.rep() == g) weight(part, d);
        });
        return part;
    };
    return IntPolynomial({"q"}) + detail::block_sum(n, jobs, block);
}

}  // namespace

IntPolynomial fmaj_distribution(int r, int p, int n, int jobs) {
    return dual_sum(r, p, n, jobs, [](IntPolynomial& part, const DualElement& d) {
        part.add_term({static_cast<int>(d.fmaj())}, 1);
    });
}

IntPolynomial fmaj_inverse_distribution(int r, int p, int n, int k, int jobs) {
    return dual_sum(r, p, n, jobs, [&](IntPolynomial& part, const DualElement& d) {
        if (in_window_set(d.rep(), p, k))
            part.add_term({static_cast<int>(d.inverse().fmaj())}, 1);
    });
}

IntPolynomial signed_fmaj_inverse_distribution(int r, int p, int n, int k, int jobs) {
    return dual_sum(r, p, n, jobs, [&](IntPolynomial& part, const DualElement& d) {
        if (in_window_set(d.rep(), p, k)) {
            Int sign = d.rep().word().inversions() % 2 == 0 ? 1 : -1;
            part.add_term({static_cast<int>(d.inverse().fmaj())}, sign);
        }
    });
}

int homogeneous_lis(const ColoredPermutation& g, int z) {
    std::vector<int> values;
    for (int i = 1; i <= g.size(); ++i)
        if (g.color(i) == z) values.push_back(g.word()(i));
    int best = 0;
    std::vector<int> len(values.size(), 1);
    for (size_t i = 0; i < values.size(); ++i) {
        for (size_t j = 0; j < i; ++j)
            if (values[j] < values[i]) len[i] = std::max(len[i], len[j] + 1);
        best = std::max(best, len[i]);
    }
    return best;
}

bool in_pi_set(const ColoredPermutation& g, int k) {
    int n = g.size();
    if (k < 0 || k > n) throw std::invalid_argument("pi parameter out of range");
    for (int i = 1; i <= n - k; ++i) {
        if (g.color(i) != 0) return false;
        if (i > 1 && g.word()(i - 1) > g.word()(i)) return false;
    }
    return homogeneous_lis(g, 0) == n - k;
}

namespace {

// Elements with the zero-colored increasing prefix built directly: choose the
// prefix value set, permute the rest, color the rest.  min(prefix) = first.
template <class Fn>
void for_each_pi_block(int r, int n, int k, int first, Fn&& fn) {
    std::vector<int> prefix{first};
    std::vector<bool> used(n + 1, false);
    used[first] = true;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(prefix.size()) == n - k) {
            std::vector<int> word(prefix), suffix;
            for (int v = 1; v <= n; ++v)
                if (!used[v]) suffix.push_back(v);
            word.resize(n);
            do {
                std::copy(suffix.begin(), suffix.end(), word.begin() + (n - k));
                Permutation sigma(word);
                for_each_color_vector(r, k, [&](const std::vector<int>& tail) {
                    std::vector<int> colors(n, 0);
                    std::copy(tail.begin(), tail.end(), colors.begin() + (n - k));
                    ColoredPermutation g(r, sigma, colors);
                    if (homogeneous_lis(g, 0) == n - k) fn(g);
                });
            } while (std::next_permutation(suffix.begin(), suffix.end()));
            return;
        }
        for (int v = prefix.back() + 1; v <= n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            prefix.push_back(v);
            rec();
            prefix.pop_back();
            used[v] = false;
        }
    };
    rec();
}

}  // namespace

void for_each_pi_element(int r, int n, int k,
                         const std::function<void(const ColoredPermutation&)>& fn) {
    if (k < 0 || k > n) throw std::invalid_argument("pi parameter out of range");
    if (n == 0) return;
    if (k == n) {
        // Empty prefix: every zero-colored letter would extend it.
        for_each_group_element(r, n, [&](const ColoredPermutation& g) {
            if (homogeneous_lis(g, 0) == 0) fn(g);
        });
        return;
    }
    for (int first = 1; first <= k + 1; ++first) for_each_pi_block(r, n, k, first, fn);
}

IntPolynomial pi_distribution(int r, int n, int k, int jobs) {
    if (k < 0 || k > n) throw std::invalid_argument("pi parameter out of range");
    if (n == 0) return IntPolynomial::constant({"q"}, 1);
    // min(prefix) <= k+1: larger first letters leave too few values above it.
    int blocks = std::min(k + 1, n);
    auto add = [](IntPolynomial& part, const ColoredPermutation& g) {
        part.add_term({static_cast<int>(DualElement(g.inverse(), 1).fmaj())}, 1);
    };
    auto block = [&](int b) {
        IntPolynomial part({"q"});
        if (k == n) {
            for_each_group_block(r, n, b + 1, [&](const ColoredPermutation& g) {
                if (homogeneous_lis(g, 0) == 0) add(part, g);
            });
        } else {
            for_each_pi_block(r, n, k, b + 1,
                              [&](const ColoredPermutation& g) { add(part, g); });
        }
        return part;
    };
    return IntPolynomial({"q"}) + detail::block_sum(k == n ? n : blocks, jobs, block);
}

bool in_nn_rp(int r, int p, const std::vector<int>& f) {
    int m = checked_shift(r, p);
    if (f.empty()) return true;
    int c = f[0] % r;
    if (c % m != 0) return false;
    for (int v : f) {
        if (v < 0) return false;
        if (v % r != c) return false;
    }
    return true;
}

bool in_cal_a(int r, int p, int k, const std::vector<int>& f) {
    if (k < 0 || k > static_cast<int>(f.size()))
        throw std::invalid_argument("window size out of range");
    for (int i = 0; i + 1 < k; ++i)
        if (f[i] < f[i + 1]) return false;
    return in_nn_rp(r, p, std::vector<int>(f.begin(), f.begin() + k));
}

std::vector<int> encode_compatible(const DualElement& g, const std::vector<int>& lambda,
                                   int h) {
    int n = g.size();
    int r = g.modulus();
    int m = r / g.quotient_index();
    if (static_cast<int>(lambda.size()) != n)
        throw std::invalid_argument("partition length must match the group rank");
    for (int i = 0; i + 1 < n; ++i)
        if (lambda[i] < lambda[i + 1]) throw std::invalid_argument("not a partition");
    if (n > 0 && lambda[n - 1] < 0) throw std::invalid_argument("not a partition");
    if (h < 0 || h >= g.quotient_index()) throw std::invalid_argument("h out of range");
    auto nu = g.lambda_vec();
    Permutation tau = g.rep().word().inverse();
    std::vector<int> f(n);
    for (int i = 1; i <= n; ++i) {
        int j = tau(i);
        f[i - 1] = nu[j - 1] + r * lambda[j - 1] + h * m;
    }
    return f;
}

DecodedVector decode_compatible(int r, int p, const std::vector<int>& f) {
    int m = checked_shift(r, p);
    int n = static_cast<int>(f.size());
    for (int v : f)
        if (v < 0) throw std::invalid_argument("compatible vectors are non-negative");
    // Positions sorted by f descending, ties by ascending position: ties in f
    // force an ascending window in the word.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return f[a - 1] > f[b - 1]; });
    std::vector<int> colors(n);
    for (int j = 0; j < n; ++j) colors[j] = f[order[j] - 1] % r;
    DualElement g(ColoredPermutation(r, Permutation(order), colors), p);

    auto nu = g.lambda_vec();
    DecodedVector out;
    out.lambda.resize(n);
    int rem = -1;
    for (int j = 0; j < n; ++j) {
        int d = f[order[j] - 1] - nu[j];
        if (d < 0 || (rem >= 0 && d % r != rem))
            throw std::logic_error("decode failed: residual not a shifted partition");
        rem = d % r;
        out.lambda[j] = (d - rem) / r;
        if (j > 0 && out.lambda[j] > out.lambda[j - 1])
            throw std::logic_error("decode failed: residual not weakly decreasing");
    }
    if (n > 0 && rem % m != 0)
        throw std::logic_error("decode failed: residue class not a shift multiple");
    out.h = n == 0 ? 0 : rem / m;
    out.g = std::move(g);
    if (encode_compatible(out.g, out.lambda, out.h) != f)
        throw std::logic_error("decode failed: re-encoding mismatch");
    return out;
}

namespace {

IntPolynomial truncate_q(const IntPolynomial& p, int max_degree) {
    IntPolynomial out({"q"});
    for (const auto& [e, c] : p.terms())
        if (e[0] <= max_degree) out.add_term(e, c);
    return out;
}

}  // namespace

IntPolynomial compatible_series(const DualElement& g, int max_degree) {
    int n = g.size();
    int r = g.modulus();
    int m = r / g.quotient_index();
    IntPolynomial series({"q"});
    std::vector<int> lambda(n, 0);
    for (int h = 0; h < g.quotient_index(); ++h) {
        long long base = g.fmaj() + static_cast<long long>(n) * h * m;
        if (base > max_degree) continue;
        int units = static_cast<int>((max_degree - base) / r);
        std::function<void(int, int, int)> rec = [&](int i, int cap, int left) {
            if (i == n) {
                auto f = encode_compatible(g, lambda, h);
                long long total = std::accumulate(f.begin(), f.end(), 0LL);
                if (total <= max_degree)
                    series.add_term({static_cast<int>(total)}, 1);
                return;
            }
            for (int v = 0; v <= std::min(cap, left); ++v) {
                lambda[i] = v;
                rec(i + 1, v, left - v);
            }
            lambda[i] = 0;
        };
        rec(0, units, units);
    }
    return series;
}

IntPolynomial compatible_series_closed(const DualElement& g, int max_degree) {
    int n = g.size();
    int r = g.modulus();
    long long base = g.fmaj();
    if (base > max_degree) return IntPolynomial({"q"});
    IntPolynomial series =
        IntPolynomial::monomial({"q"}, {static_cast<int>(base)}, 1);
    std::vector<int> steps;
    for (int i = 1; i < n; ++i) steps.push_back(r * i);
    if (n > 0) steps.push_back(r * n / g.quotient_index());
    for (int step : steps) {
        IntPolynomial geom({"q"});
        for (int j = 0; j * step <= max_degree; ++j) geom.add_term({j * step}, 1);
        series = truncate_q(series * geom, max_degree);
    }
    return series;
}

bool colori_check(const DualElement& g) {
    auto nu = g.lambda_vec();
    auto nu_inv = g.inverse().lambda_vec();
    std::vector<int> v(g.size());
    for (int i = 1; i <= g.size(); ++i)
        v[i - 1] = nu[i - 1] + nu_inv[g.rep().word()(i) - 1];
    return in_nn_rp(g.modulus(), g.quotient_index(), v);
}

}  // namespace mahonia
