#pragma once

#include <thread>
#include <vector>

#include "mahonia/qpoly.hpp"

namespace mahonia::detail {

// Evaluates per_block(0..blocks-1) with up to jobs worker threads and sums the
// results in block order.  Coefficients are exact integers, so the outcome is
// byte-identical for every jobs value.
template <class Fn>
IntPolynomial block_sum(int blocks, int jobs, Fn&& per_block) {
    std::vector<IntPolynomial> parts(blocks);
    if (jobs <= 1) {
        for (int b = 0; b < blocks; ++b) parts[b] = per_block(b);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs && w < blocks; ++w) {
            pool.emplace_back([&, w] {
                for (int b = w; b < blocks; b += jobs) parts[b] = per_block(b);
            });
        }
        for (auto& th : pool) th.join();
    }
    IntPolynomial sum;
    for (auto& p : parts) sum += p;
    return sum;
}

}  // namespace mahonia::detail
