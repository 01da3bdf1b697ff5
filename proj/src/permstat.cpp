#include "mahonia/permstat.hpp"

#include <algorithm>

#include "mahonia/block_sum.hpp"

namespace mahonia {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<char> seen(word_.size() + 1, 0);
    for (int v : word_) {
        if (v < 1 || v > static_cast<int>(word_.size()) || seen[v])
            throw std::invalid_argument("Permutation: not a bijection on 1..n");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> w(word_.size());
    for (int i = 0; i < size(); ++i) w[word_[i] - 1] = i + 1;
    return Permutation(std::move(w));
}

long long Permutation::inversions() const {
    long long inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (word_[i] > word_[j]) ++inv;
    return inv;
}

long long Permutation::major_index() const {
    long long maj = 0;
    for (int i = 0; i + 1 < size(); ++i)
        if (word_[i] > word_[i + 1]) maj += i + 1;
    return maj;
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

long long quotient_size(int n, int k) {
    if (k == 0) k = 1;
    return factorial(n) / factorial(k);
}

namespace {

int normalize_k(int n, int k) {
    if (n < 1) throw std::invalid_argument("quotient: n must be positive");
    if (k < 0 || k > n) throw std::invalid_argument("quotient: k out of range");
    return k == 0 ? 1 : k;
}

// Words where the values in [block_lo, block_hi] appear in increasing order.
// A block value is placeable only when it is the smallest unused block value,
// so trying candidates in numeric order yields ascending lexicographic words.
struct QuotientGen {
    int n, block_lo, block_hi;
    const std::function<void(const Permutation&)>& fn;
    std::vector<int> word;
    std::vector<char> used;

    void run(int first = 0) {
        word.clear();
        used.assign(n + 1, 0);
        if (first != 0) {
            if (!placeable(first)) return;
            word.push_back(first);
            used[first] = 1;
        }
        rec();
    }

    bool placeable(int v) const {
        if (used[v]) return false;
        if (v < block_lo || v > block_hi) return true;
        for (int u = block_lo; u < v; ++u)
            if (!used[u]) return false;
        return true;
    }

    void rec() {
        if (static_cast<int>(word.size()) == n) {
            fn(Permutation(word));
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (!placeable(v)) continue;
            word.push_back(v);
            used[v] = 1;
            rec();
            used[v] = 0;
            word.pop_back();
        }
    }
};

void for_each_block_quotient(int n, int block_lo, int block_hi,
                             const std::function<void(const Permutation&)>& fn, int first = 0) {
    QuotientGen gen{n, block_lo, block_hi, fn, {}, {}};
    gen.run(first);
}

}  // namespace

void for_each_quotient(int n, int k, const std::function<void(const Permutation&)>& fn) {
    k = normalize_k(n, k);
    for_each_block_quotient(n, n - k + 1, n, fn);
}

void for_each_prime_quotient(int n, int k, const std::function<void(const Permutation&)>& fn) {
    k = normalize_k(n, k);
    for_each_block_quotient(n, 1, k, fn);
}

std::vector<Permutation> quotient_elements(int n, int k) {
    std::vector<Permutation> out;
    for_each_quotient(n, k, [&](const Permutation& w) { out.push_back(w); });
    return out;
}

std::vector<Permutation> prime_quotient_elements(int n, int k) {
    std::vector<Permutation> out;
    for_each_prime_quotient(n, k, [&](const Permutation& w) { out.push_back(w); });
    return out;
}

int last_entry_stat(const Permutation& w, int k) {
    int n = w.size();
    k = normalize_k(n, k);
    int last = w(n);
    if (last <= n - k) return last - 1;
    if (last == n) return n - k;
    throw NotInQuotient("last_entry_stat: word is outside the quotient");
}

IntPolynomial quotient_distribution(int n, int k, bool signed_sum, int jobs) {
    int kk = normalize_k(n, k);
    auto block = [&](int b) {
        IntPolynomial part({"q", "z"});
        for_each_block_quotient(
            n, n - kk + 1, n,
            [&](const Permutation& w) {
                Int sign = !signed_sum || w.inversions() % 2 == 0 ? 1 : -1;
                part.add_term({static_cast<int>(w.major_index()), last_entry_stat(w, kk)}, sign);
            },
            b + 1);
        return part;
    };
    return IntPolynomial({"q", "z"}) + detail::block_sum(n, jobs, block);
}

IntPolynomial prime_quotient_distribution(int n, int k, int jobs) {
    int kk = normalize_k(n, k);
    auto block = [&](int b) {
        IntPolynomial part({"q"});
        for_each_block_quotient(
            n, 1, kk,
            [&](const Permutation& w) {
                Int sign = w.inversions() % 2 == 0 ? 1 : -1;
                part.add_term({static_cast<int>(w.major_index())}, sign);
            },
            b + 1);
        return part;
    };
    return IntPolynomial({"q"}) + detail::block_sum(n, jobs, block);
}

}  // namespace mahonia
