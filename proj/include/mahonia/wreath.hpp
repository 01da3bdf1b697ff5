#pragma once

// Colored permutations, the wreath products G(r,n) and their subgroups
// G(r,p,n), the quotient groups G(r,p,n)* with the flag-major statistics,
// the coset window sets C_k, compatible vectors, and the Pi sets.

#include <functional>
#include <stdexcept>
#include <vector>

#include "mahonia/permstat.hpp"
#include "mahonia/qpoly.hpp"

namespace mahonia {

struct ModulusMismatch : std::runtime_error {
    explicit ModulusMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NoEntrywiseMinimum : std::runtime_error {
    explicit NoEntrywiseMinimum(const std::string& what) : std::runtime_error(what) {}
};

// g = [sigma_1^{z_1},...,sigma_n^{z_n}]: a permutation word with a color in
// Z_r attached to each position.  g(i^0) = sigma_i^{z_i}, and colors add on
// composition.
class ColoredPermutation {
public:
    ColoredPermutation() = default;
    ColoredPermutation(int r, Permutation word, std::vector<int> colors);
    static ColoredPermutation identity(int r, int n);

    int modulus() const { return r_; }
    int size() const { return word_.size(); }
    const Permutation& word() const { return word_; }
    const std::vector<int>& colors() const { return colors_; }
    int color(int i) const { return colors_[i - 1]; }  // 1-indexed

    ColoredPermutation inverse() const;
    // (a b)(i) = a(b(i)); both factors must share the modulus.
    friend ColoredPermutation operator*(const ColoredPermutation& a,
                                        const ColoredPermutation& b);

    friend bool operator==(const ColoredPermutation& a, const ColoredPermutation& b) {
        return a.r_ == b.r_ && a.word_ == b.word_ && a.colors_ == b.colors_;
    }
    friend bool operator<(const ColoredPermutation& a, const ColoredPermutation& b);

private:
    int r_ = 1;
    Permutation word_;
    std::vector<int> colors_;
};

// {"r":6,"word":[2,7,...],"colors":[2,3,...]}
nlohmann::ordered_json colored_to_json(const ColoredPermutation& g);
ColoredPermutation colored_from_json(const nlohmann::json& j);

long long group_order(int r, int n);               // r^n n!
long long dual_group_order(int r, int p, int n);   // r^n n! / p

// Streams are ordered by word (lex ascending) then colors (lex ascending).
void for_each_group_element(int r, int n,
                            const std::function<void(const ColoredPermutation&)>& fn);
// G(r,p,n): the subgroup with color sum divisible by p.
void for_each_grpn_element(int r, int p, int n,
                           const std::function<void(const ColoredPermutation&)>& fn);

// An element of G(r,p,n)* = G(r,n)/C_p: the orbit of a colored permutation
// under uniform color shifts by multiples of r/p, held by its canonical
// representative.  The k-vector is the entrywise-least weakly decreasing
// lift of the colors across all p shifts; the representative realizes it.
class DualElement {
public:
    DualElement() = default;
    DualElement(const ColoredPermutation& g, int p);  // requires p | modulus

    int modulus() const { return rep_.modulus(); }
    int quotient_index() const { return p_; }
    int size() const { return rep_.size(); }
    const ColoredPermutation& rep() const { return rep_; }
    const std::vector<int>& k_vec() const { return kvec_; }

    // {i < n: z_i = z_{i+1} and sigma_i > sigma_{i+1}}; invariant under shifts.
    std::vector<int> hdes() const;
    std::vector<int> h_vec() const;       // h_i = #{j >= i in hdes}
    std::vector<int> lambda_vec() const;  // lambda_i = r h_i + k_i
    long long fmaj() const;               // sum of lambda

    DualElement inverse() const { return DualElement(rep_.inverse(), p_); }

    friend bool operator==(const DualElement& a, const DualElement& b) {
        return a.p_ == b.p_ && a.rep_ == b.rep_;
    }
    friend bool operator<(const DualElement& a, const DualElement& b) {
        return a.rep_ < b.rep_;
    }

private:
    int p_ = 1;
    ColoredPermutation rep_;
    std::vector<int> kvec_;
};

nlohmann::ordered_json dual_to_json(const DualElement& g);
DualElement dual_from_json(const nlohmann::json& j);

// One canonical representative per orbit, in representative order.
void for_each_dual_element(int r, int p, int n,
                           const std::function<void(const DualElement&)>& fn);

// C_k: orbits admitting a representative whose first k letters carry color 0
// and increase.  Tested on any representative: equal prefix colors divisible
// by r/p, increasing prefix word.
bool in_window_set(const ColoredPermutation& g, int p, int k);
void for_each_window_element(int r, int p, int n, int k,
                             const std::function<void(const DualElement&)>& fn);

IntPolynomial fmaj_distribution(int r, int p, int n, int jobs = 1);
// Sum over C_k of q^{fmaj(g^{-1})}.
IntPolynomial fmaj_inverse_distribution(int r, int p, int n, int k, int jobs = 1);
// Sum over C_k of (-1)^{inv of the underlying word} q^{fmaj(g^{-1})}.
IntPolynomial signed_fmaj_inverse_distribution(int r, int p, int n, int k, int jobs = 1);

// Longest increasing word subsequence supported on positions of color z.
int homogeneous_lis(const ColoredPermutation& g, int z);
// Zero colors on the first n-k positions, increasing word prefix there, and
// no longer zero-colored increasing subsequence anywhere.
bool in_pi_set(const ColoredPermutation& g, int k);
void for_each_pi_element(int r, int n, int k,
                         const std::function<void(const ColoredPermutation&)>& fn);
IntPolynomial pi_distribution(int r, int n, int k, int jobs = 1);

// f_1 = ... = f_n = h r/p (mod r) for a single h in {0,...,p-1}.
bool in_nn_rp(int r, int p, const std::vector<int>& f);
// First k entries weakly decreasing and in the residue class set above.
bool in_cal_a(int r, int p, int k, const std::vector<int>& f);

// f_i = lambda_{tau(i)}(g) + r lambda_{tau(i)} + h r/p with tau the inverse
// word of the representative; lambda must be a partition, 0 <= h < p.
std::vector<int> encode_compatible(const DualElement& g, const std::vector<int>& lambda,
                                   int h);
struct DecodedVector {
    DualElement g;
    std::vector<int> lambda;
    int h = 0;
};
// Unique preimage of f under encode_compatible; validated by re-encoding.
DecodedVector decode_compatible(int r, int p, const std::vector<int>& f);

// Sum of q^{|f|} over g-compatible f with |f| <= max_degree, once by walking
// the (lambda, h) fibers and once from the closed product form.
IntPolynomial compatible_series(const DualElement& g, int max_degree);
IntPolynomial compatible_series_closed(const DualElement& g, int max_degree);

// The vector (lambda_i(g) + lambda_{sigma_i}(g^{-1}))_i stays in one residue
// class h r/p; must hold for every dual element.
bool colori_check(const DualElement& g);

}  // namespace mahonia
