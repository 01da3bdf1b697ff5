#pragma once

// Forest posets (every vertex covered by at most one parent), labellings with
// the poset inv/maj statistics, hook-length product identities, and the rake
// shapes whose labelling classes carry the signed distributions.

#include <functional>
#include <stdexcept>
#include <vector>

#include "mahonia/permstat.hpp"
#include "mahonia/qpoly.hpp"

namespace mahonia {

struct NotFixedPoint : std::runtime_error {
    explicit NotFixedPoint(const std::string& what) : std::runtime_error(what) {}
};

// Vertices are 1..n; parent(v) = 0 marks a root.  x < y iff y is a strict
// ancestor of x, so hook(v) = size of the subtree hanging below v.
class ForestPoset {
public:
    ForestPoset() = default;
    ForestPoset(int n, std::vector<int> parent);  // parent.size() == n, entries 0..n, acyclic

    int size() const { return n_; }
    int parent(int v) const { return parent_[v - 1]; }
    const std::vector<int>& parents() const { return parent_; }
    bool less(int a, int b) const;  // a < b in the poset
    bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
    bool adjacent(int a, int b) const { return parent(a) == b || parent(b) == a; }
    const std::vector<int>& hook_lengths() const { return hooks_; }  // hooks_[v-1]

    friend bool operator==(const ForestPoset& a, const ForestPoset& b) {
        return a.parent_ == b.parent_;
    }

private:
    int n_ = 0;
    std::vector<int> parent_;
    std::vector<int> hooks_;
};

class Labelling {
public:
    Labelling() = default;
    Labelling(ForestPoset forest, std::vector<int> labels);  // labels is a bijection on 1..n

    const ForestPoset& forest() const { return forest_; }
    int size() const { return forest_.size(); }
    int label(int v) const { return labels_[v - 1]; }
    const std::vector<int>& labels() const { return labels_; }
    int vertex_of(int lab) const { return pos_[lab - 1]; }

    // Pairs x < y in the poset carrying the larger label below.
    long long inversions() const;
    // Sum of hook lengths of vertices labelled above their parent's label.
    long long major_index() const;
    std::vector<int> descent_vertices() const;

    friend bool operator==(const Labelling& a, const Labelling& b) {
        return a.forest_ == b.forest_ && a.labels_ == b.labels_;
    }

private:
    ForestPoset forest_;
    std::vector<int> labels_;
    std::vector<int> pos_;  // pos_[lab-1] = vertex carrying lab
};

Labelling natural_labelling(const ForestPoset& f);

// Sum of q^maj over all n! labellings of f.
IntPolynomial label_maj_distribution(const ForestPoset& f);
// Hook-length product form of the same distribution: (n!/prod h_x) prod [h_x]_q.
IntPolynomial hook_product_formula(const ForestPoset& f);

// Linear extensions of a labelling: words sigma with sigma^{-1}(w(x)) increasing
// up every chain; ascending lexicographic order.
std::vector<Permutation> linear_extensions(const Labelling& w);
IntPolynomial extension_maj_distribution(const Labelling& w);
// q^{maj(w)} [n]_q! / prod [h_x]_q, the closed form of the previous sum.
IntPolynomial extension_formula(const Labelling& w);

// Rake: teeth x_1..x_k all covered by x_{k+1}, then a chain up to x_n (0 <= k < n).
ForestPoset rake_poset(int n, int k);
// n-k isolated vertices x_1..x_{n-k} plus the chain x_{n-k+1} < ... < x_n.
ForestPoset quotient_poset(int n, int k);

// Representatives of rake labellings modulo tooth relabelling: teeth labels
// strictly increasing along x_1..x_k.  Stream order: teeth label set ascending,
// then handle words ascending.
void for_each_rake_class(int n, int k, const std::function<void(const Labelling&)>& fn);
std::vector<Labelling> rake_class_representatives(int n, int k);

// n - w(x_n), the gap of the top label of a rake labelling.
int top_gap_stat(const Labelling& w);

// Sum over class representatives of (-1)^inv q^maj t^gap.
IntPolynomial rake_distribution(int n, int k, int jobs = 1);

// Swaps labels 2i-1 and 2i at the first pair lying on comparable non-adjacent
// vertices; identity if every pair is adjacent or incomparable.  Requires n even.
Labelling pair_swap_involution(const Labelling& w);
bool is_pair_swap_fixed(const Labelling& w);

// Halving of an involution fixed point over rake classes.  Pairs lying inside
// the teeth become the teeth labels of a labelling of R_{n/2, floor(k/2)};
// pairs on adjacent vertices become its handle labels in vertex order, with one
// orientation bit each (bit = 1 when the even label sits below the odd one).
struct HalvedLabelling {
    Labelling half;
    std::vector<int> bits;
};
HalvedLabelling halve_fixed_point(const Labelling& w, int k);

// All forest shapes on n vertices, one per isomorphism class.
std::vector<ForestPoset> forest_shapes(int n);

// {"n":7,"parent":{"1":5,...}}; vertices without an entry are roots.
ForestPoset forest_from_json(const nlohmann::json& j);
nlohmann::ordered_json forest_to_json(const ForestPoset& f);

}  // namespace mahonia
