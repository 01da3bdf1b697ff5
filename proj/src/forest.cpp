#include "mahonia/forest.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "mahonia/block_sum.hpp"

namespace mahonia {

ForestPoset::ForestPoset(int n, std::vector<int> parent) : n_(n), parent_(std::move(parent)) {
    if (n < 1) throw std::invalid_argument("ForestPoset: n must be positive");
    if (static_cast<int>(parent_.size()) != n)
        throw std::invalid_argument("ForestPoset: parent vector size mismatch");
    for (int v = 1; v <= n; ++v) {
        int p = parent_[v - 1];
        if (p < 0 || p > n || p == v) throw std::invalid_argument("ForestPoset: bad parent entry");
        int steps = 0;
        for (int a = v; a != 0; a = parent_[a - 1])
            if (++steps > n) throw std::invalid_argument("ForestPoset: parent map has a cycle");
    }
    hooks_.assign(n, 1);
    // children precede parents once sorted by depth, so accumulate bottom-up
    std::vector<int> depth(n + 1, 0), order(n);
    for (int v = 1; v <= n; ++v)
        for (int a = parent_[v - 1]; a != 0; a = parent_[a - 1]) ++depth[v];
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return depth[a] > depth[b]; });
    for (int v : order)
        if (parent_[v - 1] != 0) hooks_[parent_[v - 1] - 1] += hooks_[v - 1];
}

bool ForestPoset::less(int a, int b) const {
    for (int x = parent(a); x != 0; x = parent(x))
        if (x == b) return true;
    return false;
}

Labelling::Labelling(ForestPoset forest, std::vector<int> labels)
    : forest_(std::move(forest)), labels_(std::move(labels)) {
    int n = forest_.size();
    if (static_cast<int>(labels_.size()) != n)
        throw std::invalid_argument("Labelling: label vector size mismatch");
    pos_.assign(n, 0);
    for (int v = 1; v <= n; ++v) {
        int lab = labels_[v - 1];
        if (lab < 1 || lab > n || pos_[lab - 1] != 0)
            throw std::invalid_argument("Labelling: labels must form a bijection on 1..n");
        pos_[lab - 1] = v;
    }
}

long long Labelling::inversions() const {
    long long inv = 0;
    int n = size();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (forest_.less(a, b) && label(a) > label(b)) ++inv;
    return inv;
}

std::vector<int> Labelling::descent_vertices() const {
    std::vector<int> out;
    for (int v = 1; v <= size(); ++v) {
        int p = forest_.parent(v);
        if (p != 0 && label(v) > label(p)) out.push_back(v);
    }
    return out;
}

long long Labelling::major_index() const {
    long long maj = 0;
    for (int v : descent_vertices()) maj += forest_.hook_lengths()[v - 1];
    return maj;
}

Labelling natural_labelling(const ForestPoset& f) {
    std::vector<int> labels(f.size());
    std::iota(labels.begin(), labels.end(), 1);
    return Labelling(f, std::move(labels));
}

IntPolynomial label_maj_distribution(const ForestPoset& f) {
    std::vector<int> labels(f.size());
    std::iota(labels.begin(), labels.end(), 1);
    IntPolynomial dist({"q"});
    do {
        Labelling w(f, labels);
        dist.add_term({static_cast<int>(w.major_index())}, 1);
    } while (std::next_permutation(labels.begin(), labels.end()));
    return dist;
}

IntPolynomial hook_product_formula(const ForestPoset& f) {
    Int count = factorial(f.size());
    IntPolynomial prod = IntPolynomial::constant({"q"}, 1);
    for (int h : f.hook_lengths()) {
        count /= h;
        prod *= bracket(h);
    }
    return IntPolynomial::constant(count) * prod;
}

std::vector<Permutation> linear_extensions(const Labelling& w) {
    int n = w.size();
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    std::vector<Permutation> out;
    do {
        std::vector<int> slot(n + 1);
        for (int i = 0; i < n; ++i) slot[word[i]] = i;
        bool ok = true;
        for (int v = 1; v <= n && ok; ++v) {
            int p = w.forest().parent(v);
            if (p != 0 && slot[w.label(v)] > slot[w.label(p)]) ok = false;
        }
        if (ok) out.emplace_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

IntPolynomial extension_maj_distribution(const Labelling& w) {
    IntPolynomial dist({"q"});
    for (const auto& sigma : linear_extensions(w))
        dist.add_term({static_cast<int>(sigma.major_index())}, 1);
    return dist;
}

IntPolynomial extension_formula(const Labelling& w) {
    IntPolynomial num = IntPolynomial::monomial({"q"}, {static_cast<int>(w.major_index())}, 1);
    for (int i = 1; i <= w.size(); ++i) num *= bracket(i);
    IntPolynomial den = IntPolynomial::constant({"q"}, 1);
    for (int h : w.forest().hook_lengths()) den *= bracket(h);
    return exact_div(num, den);
}

ForestPoset rake_poset(int n, int k) {
    if (k < 0 || k >= n) throw std::invalid_argument("rake_poset: need 0 <= k < n");
    std::vector<int> parent(n, 0);
    for (int v = 1; v <= k; ++v) parent[v - 1] = k + 1;
    for (int v = k + 1; v < n; ++v) parent[v - 1] = v + 1;
    return ForestPoset(n, std::move(parent));
}

ForestPoset quotient_poset(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("quotient_poset: need 0 <= k <= n");
    std::vector<int> parent(n, 0);
    for (int v = n - k + 1; v < n; ++v) parent[v - 1] = v + 1;
    return ForestPoset(n, std::move(parent));
}

namespace {

void check_rake(const ForestPoset& f, int k) {
    if (!(f == rake_poset(f.size(), k)))
        throw std::invalid_argument("expected the rake shape R_{n,k}");
}

// Teeth subsets in ascending lexicographic order, handle words likewise.
void rake_classes_for_subset(int n, int k, const ForestPoset& shape, std::vector<int>& teeth,
                             const std::function<void(const Labelling&)>& fn) {
    std::vector<char> used(n + 1, 0);
    for (int v : teeth) used[v] = 1;
    std::vector<int> handle;
    for (int v = 1; v <= n; ++v)
        if (!used[v]) handle.push_back(v);
    std::vector<int> labels(n);
    do {
        std::copy(teeth.begin(), teeth.end(), labels.begin());
        std::copy(handle.begin(), handle.end(), labels.begin() + k);
        fn(Labelling(shape, labels));
    } while (std::next_permutation(handle.begin(), handle.end()));
}

long long binomial(int n, int k) {
    long long b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

// Lexicographic rank unrank for k-subsets of 1..n.
std::vector<int> unrank_subset(int n, int k, long long rank) {
    std::vector<int> out;
    int next = 1;
    for (int left = k; left > 0; --left) {
        for (int v = next;; ++v) {
            long long with_v = binomial(n - v, left - 1);
            if (rank < with_v) {
                out.push_back(v);
                next = v + 1;
                break;
            }
            rank -= with_v;
        }
    }
    return out;
}

}  // namespace

void for_each_rake_class(int n, int k, const std::function<void(const Labelling&)>& fn) {
    ForestPoset shape = rake_poset(n, k);
    long long subsets = binomial(n, k);
    for (long long r = 0; r < subsets; ++r) {
        auto teeth = unrank_subset(n, k, r);
        rake_classes_for_subset(n, k, shape, teeth, fn);
    }
}

std::vector<Labelling> rake_class_representatives(int n, int k) {
    std::vector<Labelling> out;
    for_each_rake_class(n, k, [&](const Labelling& w) { out.push_back(w); });
    return out;
}

int top_gap_stat(const Labelling& w) {
    return w.size() - w.label(w.size());
}

IntPolynomial rake_distribution(int n, int k, int jobs) {
    ForestPoset shape = rake_poset(n, k);
    long long subsets = binomial(n, k);
    auto block = [&](int b) {
        IntPolynomial part({"q", "t"});
        auto teeth = unrank_subset(n, k, b);
        rake_classes_for_subset(n, k, shape, teeth, [&](const Labelling& w) {
            Int sign = w.inversions() % 2 == 0 ? 1 : -1;
            part.add_term({static_cast<int>(w.major_index()), top_gap_stat(w)}, sign);
        });
        return part;
    };
    return IntPolynomial({"q", "t"}) + detail::block_sum(static_cast<int>(subsets), jobs, block);
}

namespace {

// First label pair on comparable non-adjacent vertices, or 0 if none.
int swap_pair(const Labelling& w) {
    int n = w.size();
    if (n % 2 != 0) throw std::invalid_argument("label pairs need n even");
    for (int i = 1; 2 * i <= n; ++i) {
        int u = w.vertex_of(2 * i - 1), v = w.vertex_of(2 * i);
        if (w.forest().comparable(u, v) && !w.forest().adjacent(u, v)) return i;
    }
    return 0;
}

}  // namespace

Labelling pair_swap_involution(const Labelling& w) {
    int i = swap_pair(w);
    if (i == 0) return w;
    auto labels = w.labels();
    std::swap(labels[w.vertex_of(2 * i - 1) - 1], labels[w.vertex_of(2 * i) - 1]);
    return Labelling(w.forest(), std::move(labels));
}

bool is_pair_swap_fixed(const Labelling& w) {
    return swap_pair(w) == 0;
}

HalvedLabelling halve_fixed_point(const Labelling& w, int k) {
    int n = w.size();
    check_rake(w.forest(), k);
    if (n % 2 != 0) throw std::invalid_argument("halve_fixed_point: n must be even");
    for (int v = 2; v <= k; ++v)
        if (w.label(v) <= w.label(v - 1))
            throw std::invalid_argument("halve_fixed_point: expected a class representative");

    std::vector<int> teeth_pairs, adjacent_pairs;
    for (int i = 1; 2 * i <= n; ++i) {
        int u = w.vertex_of(2 * i - 1), v = w.vertex_of(2 * i);
        if (w.forest().adjacent(u, v))
            adjacent_pairs.push_back(i);
        else if (!w.forest().comparable(u, v))
            teeth_pairs.push_back(i);
        else
            throw NotFixedPoint("halve_fixed_point: a label pair spans a long chain");
    }
    int half_k = k / 2;
    int d = (n + 1 - k) / 2;
    if (static_cast<int>(teeth_pairs.size()) != half_k ||
        static_cast<int>(adjacent_pairs.size()) != d)
        throw NotFixedPoint("halve_fixed_point: unexpected pair split");

    // Adjacent pairs enter the handle in the vertex order of their even labels.
    std::sort(adjacent_pairs.begin(), adjacent_pairs.end(),
              [&](int a, int b) { return w.vertex_of(2 * a) < w.vertex_of(2 * b); });
    std::vector<int> bits;
    for (int i : adjacent_pairs) bits.push_back(w.vertex_of(2 * i) < w.vertex_of(2 * i - 1) ? 1 : 0);

    std::vector<int> labels(n / 2);
    for (int j = 0; j < half_k; ++j) labels[j] = teeth_pairs[j];
    for (int j = 0; j < d; ++j) labels[half_k + j] = adjacent_pairs[j];
    return HalvedLabelling{Labelling(rake_poset(n / 2, half_k), std::move(labels)),
                           std::move(bits)};
}

namespace {

std::string shape_key(int n, const std::vector<int>& parent) {
    std::vector<std::vector<int>> children(n + 1);
    for (int v = 1; v <= n; ++v) children[parent[v - 1]].push_back(v);
    std::function<std::string(int)> canon = [&](int v) {
        std::vector<std::string> sub;
        for (int c : children[v]) sub.push_back(canon(c));
        std::sort(sub.begin(), sub.end());
        std::string out = "(";
        for (const auto& s : sub) out += s;
        return out + ")";
    };
    std::vector<std::string> roots;
    for (int r : children[0]) roots.push_back(canon(r));
    std::sort(roots.begin(), roots.end());
    std::string out;
    for (const auto& s : roots) out += s;
    return out;
}

}  // namespace

std::vector<ForestPoset> forest_shapes(int n) {
    // Parent maps with parent > child already reach every isomorphism class.
    std::vector<ForestPoset> out;
    std::map<std::string, bool> seen;
    std::vector<int> parent(n, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            auto key = shape_key(n, parent);
            if (!seen.emplace(key, true).second) return;
            out.emplace_back(n, parent);
            return;
        }
        parent[v - 1] = 0;
        rec(v + 1);
        for (int p = v + 1; p <= n; ++p) {
            parent[v - 1] = p;
            rec(v + 1);
        }
        parent[v - 1] = 0;
    };
    rec(1);
    return out;
}

ForestPoset forest_from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    std::vector<int> parent(std::max(n, 0), 0);
    if (j.contains("parent")) {
        for (const auto& [key, val] : j.at("parent").items()) {
            int v = std::stoi(key);
            if (v < 1 || v > n) throw std::invalid_argument("forest_from_json: vertex out of range");
            parent[v - 1] = val.get<int>();
        }
    }
    return ForestPoset(n, std::move(parent));
}

nlohmann::ordered_json forest_to_json(const ForestPoset& f) {
    nlohmann::ordered_json j;
    j["n"] = f.size();
    nlohmann::ordered_json parent = nlohmann::ordered_json::object();
    for (int v = 1; v <= f.size(); ++v)
        if (f.parent(v) != 0) parent[std::to_string(v)] = f.parent(v);
    j["parent"] = std::move(parent);
    return j;
}

}  // namespace mahonia
