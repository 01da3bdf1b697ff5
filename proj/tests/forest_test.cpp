#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mahonia/forest.hpp"

using namespace mahonia;

namespace {

IntPolynomial q_factorial(int n) {
    IntPolynomial f = IntPolynomial::constant({"q"}, 1);
    for (int i = 1; i <= n; ++i) f *= bracket(i);
    return f;
}

ForestPoset antichain(int n) {
    return ForestPoset(n, std::vector<int>(n, 0));
}

std::vector<int> random_word(std::mt19937& rng, int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng);
    return w;
}

}  // namespace

TEST_CASE("forest construction and hooks") {
    // chain 1 < 2 < 3
    ForestPoset chain(3, {2, 3, 0});
    CHECK(chain.hook_lengths() == std::vector<int>{1, 2, 3});
    CHECK(chain.less(1, 3));
    CHECK(!chain.less(3, 1));
    CHECK(chain.adjacent(2, 3));
    CHECK(!chain.adjacent(1, 3));

    CHECK(antichain(4).hook_lengths() == std::vector<int>{1, 1, 1, 1});

    CHECK(rake_poset(7, 4).hook_lengths() == std::vector<int>{1, 1, 1, 1, 5, 6, 7});
    CHECK(rake_poset(3, 1) == ForestPoset(3, {2, 3, 0}));
    CHECK(rake_poset(4, 0) == ForestPoset(4, {2, 3, 4, 0}));

    // T_{7,4}: three isolated vertices and a four-chain
    CHECK(quotient_poset(7, 4) == ForestPoset(7, {0, 0, 0, 5, 6, 7, 0}));
    CHECK(quotient_poset(3, 0) == antichain(3));

    CHECK_THROWS_AS(ForestPoset(2, {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(ForestPoset(1, {1}), std::invalid_argument);
    CHECK_THROWS_AS(rake_poset(3, 3), std::invalid_argument);
}

TEST_CASE("labelling statistics on a chain match word statistics") {
    ForestPoset chain(3, {2, 3, 0});
    Labelling w(chain, {2, 3, 1});
    CHECK(w.inversions() == 2);
    CHECK(w.major_index() == 2);  // descent at the vertex with hook 2

    Labelling v(chain, {3, 1, 2});
    CHECK(v.inversions() == 2);
    CHECK(v.major_index() == 1);

    CHECK(natural_labelling(chain).major_index() == 0);
    CHECK(natural_labelling(chain).inversions() == 0);

    // bottom-to-top reading of a labelled chain is a word with the same inv/maj
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + trial % 6;
        auto labels = random_word(rng, n);
        Labelling u(rake_poset(n, 1), labels);
        Permutation word(labels);
        CHECK(u.inversions() == word.inversions());
        CHECK(u.major_index() == word.major_index());
    }
}

TEST_CASE("label maj distribution equals the hook product") {
    ForestPoset chain3(3, {2, 3, 0});
    CHECK(label_maj_distribution(chain3) == q_factorial(3));
    CHECK(hook_product_formula(chain3) == q_factorial(3));

    CHECK(label_maj_distribution(antichain(4)) == IntPolynomial::constant({"q"}, 24));

    // 24 [5]_q [6]_q [7]_q for the rake R_{7,4}
    auto rhs = IntPolynomial::constant(24) * bracket(5) * bracket(6) * bracket(7);
    CHECK(hook_product_formula(rake_poset(7, 4)) == rhs);

    for (int n = 1; n <= 6; ++n)
        for (const auto& shape : forest_shapes(n))
            CHECK(label_maj_distribution(shape) == hook_product_formula(shape));
}

TEST_CASE("forest shape counts per isomorphism class") {
    // unlabelled rooted forests: 1, 2, 4, 9, 20, 48, 115
    CHECK(forest_shapes(1).size() == 1);
    CHECK(forest_shapes(2).size() == 2);
    CHECK(forest_shapes(3).size() == 4);
    CHECK(forest_shapes(4).size() == 9);
    CHECK(forest_shapes(5).size() == 20);
    CHECK(forest_shapes(6).size() == 48);
    CHECK(forest_shapes(7).size() == 115);
}

TEST_CASE("linear extensions") {
    // natural labelling of T_{n,k} extends to exactly the quotient S_{n,k}
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            auto ext = linear_extensions(natural_labelling(quotient_poset(n, k)));
            CHECK(ext == quotient_elements(n, k));
        }

    CHECK(linear_extensions(natural_labelling(antichain(3))).size() == 6);
    auto chain_ext = linear_extensions(natural_labelling(ForestPoset(3, {2, 3, 0})));
    REQUIRE(chain_ext.size() == 1);
    CHECK(chain_ext[0] == Permutation::identity(3));

    // maj over extensions equals the shifted hook quotient
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + trial % 7;
        auto shapes = forest_shapes(n);
        const auto& shape = shapes[rng() % shapes.size()];
        Labelling w(shape, random_word(rng, n));
        CHECK(extension_maj_distribution(w) == extension_formula(w));
    }
}

TEST_CASE("rake classes") {
    auto reps32 = rake_class_representatives(3, 2);
    REQUIRE(reps32.size() == 3);
    CHECK(reps32[0].labels() == std::vector<int>{1, 2, 3});
    CHECK(reps32[1].labels() == std::vector<int>{1, 3, 2});
    CHECK(reps32[2].labels() == std::vector<int>{2, 3, 1});

    CHECK(rake_class_representatives(3, 1).size() == 6);
    CHECK(rake_class_representatives(7, 4).size() == 210);

    // tooth labels ascend in every representative
    for (const auto& w : rake_class_representatives(6, 3)) {
        CHECK(w.label(1) < w.label(2));
        CHECK(w.label(2) < w.label(3));
    }

    CHECK(top_gap_stat(reps32[2]) == 2);
    CHECK(top_gap_stat(reps32[0]) == 0);
}

TEST_CASE("tooth relabelling preserves inv and maj") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + trial % 4;
        int k = 2 + trial % (n - 2);
        auto labels = random_word(rng, n);
        Labelling w(rake_poset(n, k), labels);
        auto shuffled = labels;
        std::shuffle(shuffled.begin(), shuffled.begin() + k, rng);
        Labelling v(rake_poset(n, k), shuffled);
        CHECK(w.inversions() == v.inversions());
        CHECK(w.major_index() == v.major_index());
    }
}

TEST_CASE("rake distribution frozen values") {
    // chain: sum over S_3 of eps^inv q^maj t^(3 - last)
    auto r31 = rake_distribution(3, 1);
    IntPolynomial expected({"q", "t"});
    expected.add_term({0, 0}, 1);
    expected.add_term({1, 0}, -1);
    expected.add_term({1, 1}, 1);
    expected.add_term({2, 1}, -1);
    expected.add_term({2, 2}, 1);
    expected.add_term({3, 2}, -1);
    CHECK(r31 == expected);
    // which factors as [2]_{-q} [3]_{qt}
    auto qt = IntPolynomial::monomial({"q", "t"}, {1, 1}, 1);
    CHECK(r31 == bracket(2, -1) * bracket_of(3, qt));

    CHECK(eval_at_one(r31, "t") == bracket_product({{2, -1}, {3, +1}}));

    // R_{2,1}: 1 - qt
    IntPolynomial r21({"q", "t"});
    r21.add_term({0, 0}, 1);
    r21.add_term({1, 1}, -1);
    CHECK(rake_distribution(2, 1) == r21);

    CHECK(rake_distribution(5, 2, 4) == rake_distribution(5, 2, 1));
    CHECK(rake_distribution(6, 3, 3) == rake_distribution(6, 3));
}

TEST_CASE("pair swap involution") {
    for (int n = 2; n <= 8; n += 2)
        for (int k = 0; k < n; ++k) {
            long long fixed = 0;
            for (const auto& w : rake_class_representatives(n, k)) {
                auto u = pair_swap_involution(w);
                CHECK(pair_swap_involution(u) == w);
                if (u == w) {
                    ++fixed;
                    CHECK(is_pair_swap_fixed(w));
                } else {
                    CHECK(u.major_index() == w.major_index());
                    CHECK((u.inversions() + w.inversions()) % 2 == 1);
                    // swapped labellings stay canonical representatives
                    for (int v = 2; v <= k; ++v) CHECK(u.label(v - 1) < u.label(v));
                }
            }
            // fixed points pair off with halved classes and orientation bits
            int d = (n + 1 - k) / 2;
            long long expected = (factorial(n / 2) / factorial(k / 2)) << d;
            CHECK(fixed == expected);
        }
}

TEST_CASE("halving a fixed point") {
    // R_{4,2}: the four fixed points
    auto reps = rake_class_representatives(4, 2);
    long long seen = 0;
    std::set<std::pair<std::vector<int>, std::vector<int>>> images;
    for (const auto& w : reps) {
        if (!is_pair_swap_fixed(w)) {
            CHECK_THROWS_AS(halve_fixed_point(w, 2), NotFixedPoint);
            continue;
        }
        ++seen;
        auto hv = halve_fixed_point(w, 2);
        CHECK(hv.half.size() == 2);
        CHECK(hv.bits.size() == 1);
        images.emplace(hv.half.labels(), hv.bits);
    }
    CHECK(seen == 4);
    CHECK(images.size() == 4);  // injective
}

TEST_CASE("halving preserves the statistics dictionary") {
    for (int n = 2; n <= 8; n += 2)
        for (int k = 0; k < n; ++k) {
            int d = (n + 1 - k) / 2;
            std::set<std::pair<std::vector<int>, std::vector<int>>> images;
            for (const auto& w : rake_class_representatives(n, k)) {
                if (!is_pair_swap_fixed(w)) continue;
                auto hv = halve_fixed_point(w, k);
                REQUIRE(static_cast<int>(hv.bits.size()) == d);
                images.emplace(hv.half.labels(), hv.bits);

                long long bitsum = 0, weighted = 0;
                for (int i = 0; i < d; ++i) {
                    bitsum += hv.bits[i];
                    weighted += (k % 2 == 0 ? k + 2 * i + 1 : (i == 0 ? 1 : k + 2 * i))
                                * hv.bits[i];
                }
                CHECK(w.inversions() % 2 == bitsum % 2);
                CHECK(w.major_index() == 2 * hv.half.major_index() + weighted);
            }
            long long expected = (factorial(n / 2) / factorial(k / 2)) << d;
            CHECK(static_cast<long long>(images.size()) == expected);
        }
}

TEST_CASE("forest json round trip") {
    auto f = forest_from_json(nlohmann::json::parse(
        R"({"n":7,"parent":{"1":5,"2":5,"3":5,"4":5,"5":6,"6":7}})"));
    CHECK(f == rake_poset(7, 4));
    CHECK(forest_from_json(forest_to_json(f)) == f);

    auto a = forest_from_json(nlohmann::json::parse(R"({"n":3})"));
    CHECK(a == antichain(3));
    CHECK_THROWS_AS(forest_from_json(nlohmann::json::parse(R"({"n":2,"parent":{"5":1}})")),
                    std::invalid_argument);
}
