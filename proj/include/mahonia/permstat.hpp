#pragma once

// Permutations in one-line notation with the inv/maj statistics, plus
// enumeration of the two one-sided quotients of S_n used by the closed forms:
//   S_{n,k}:  positions of the top k values increase left to right
//   S'_{n,k}: positions of the bottom k values increase left to right
// Enumeration is by direct construction in ascending lexicographic word order,
// never by filtering S_n.

#include <functional>
#include <stdexcept>
#include <vector>

#include "mahonia/qpoly.hpp"

namespace mahonia {

struct NotInQuotient : std::runtime_error {
    explicit NotInQuotient(const std::string& what) : std::runtime_error(what) {}
};

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);  // must be a bijection on 1..n
    static Permutation identity(int n);

    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[i - 1]; }  // 1-indexed
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;
    long long inversions() const;
    long long major_index() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.word_ == b.word_;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.word_ < b.word_;
    }

private:
    std::vector<int> word_;
};

// k = 0 is an alias for k = 1 in both quotients; 0 <= k <= n is required.
void for_each_quotient(int n, int k, const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> quotient_elements(int n, int k);

void for_each_prime_quotient(int n, int k, const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> prime_quotient_elements(int n, int k);

long long factorial(int n);
long long quotient_size(int n, int k);  // n!/k!

// Last-entry statistic on S_{n,k}: w(n)-1 when w(n) <= n-k, and n-k when
// w(n) = n.  Any other last value cannot occur inside the quotient.
int last_entry_stat(const Permutation& w, int k);

// Sum over S_{n,k} of (-1)^inv q^maj z^stat; the sign is dropped when
// signed_sum is false.  jobs > 1 splits the enumeration by first letter and
// combines blocks in a fixed order, so results are identical at any degree.
IntPolynomial quotient_distribution(int n, int k, bool signed_sum = true, int jobs = 1);

// Sum over S'_{n,k} of (-1)^inv q^maj.
IntPolynomial prime_quotient_distribution(int n, int k, int jobs = 1);

}  // namespace mahonia
