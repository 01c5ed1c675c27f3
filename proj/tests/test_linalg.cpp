#include "doctest.h"

#include <algorithm>
#include <random>

#include "neighsum/grid.hpp"
#include "neighsum/linalg.hpp"

using namespace neighsum;

namespace {

// Standard 5x5 solutions, vectorized by column stacking.
std::vector<Int> vec_k1() {
    IntGrid g({5, 5}, {Int(1), 0, -1, 0, 1, 1, 0, -1, 0, 1, 0, 0, 0, 0, 0,
                       -1, 0, 1, 0, -1, -1, 0, 1, 0, -1});
    return vectorize(g);
}

std::vector<Int> vec_k2() {
    IntGrid g({5, 5}, {Int(1), 1, 0, -1, -1, 0, 0, 0, 0, 0, -1, -1, 0, 1, 1,
                       0, 0, 0, 0, 0, 1, 1, 0, -1, -1});
    return vectorize(g);
}

}  // namespace

TEST_CASE("kernel of small operators") {
    CHECK(kernel_basis(build_operator(BoardSpec::square(2))).dimension() == 0);
    CHECK(kernel_basis(build_operator(BoardSpec::square(3))).dimension() == 0);

    SparseIntMatrix identity = SparseIntMatrix::from_triplets(
        4, {{0, 0, Int(1)}, {1, 1, Int(1)}, {2, 2, Int(1)}, {3, 3, Int(1)}});
    CHECK(kernel_basis(identity).dimension() == 0);

    KernelBasis k5 = kernel_basis(build_operator(BoardSpec::square(5)));
    CHECK(k5.dimension() == 2);
    SparseIntMatrix t5 = build_operator(BoardSpec::square(5));
    for (const auto& v : k5.vectors) {
        std::vector<Int> image = neighsum::apply(t5, v);
        CHECK(std::all_of(image.begin(), image.end(), [](const Int& x) { return x == 0; }));
    }
}

TEST_CASE("basis canonical form") {
    KernelBasis k5 = kernel_basis(build_operator(BoardSpec::square(5)));
    std::int64_t last_pivot = -1;
    for (const auto& v : k5.vectors) {
        std::size_t lead = 0;
        while (lead < v.size() && v[lead] == 0) ++lead;
        REQUIRE(lead < v.size());
        CHECK(v[lead] > 0);
        CHECK(static_cast<std::int64_t>(lead) > last_pivot);
        last_pivot = static_cast<std::int64_t>(lead);
        Int g(0);
        for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        CHECK(g == 1);
    }
}

TEST_CASE("kernel determinism under triplet permutation") {
    SparseIntMatrix t5 = build_operator(BoardSpec::square(5));
    std::vector<Triplet> shuffled = t5.entries();
    std::mt19937 rng(99);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    SparseIntMatrix permuted = SparseIntMatrix::from_triplets(t5.size(), std::move(shuffled));
    CHECK(permuted == t5);
    CHECK(kernel_basis(permuted) == kernel_basis(t5));
}

TEST_CASE("rank plus nullity") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        std::int64_t n = 6 + static_cast<std::int64_t>(rng() % 6);
        std::vector<Triplet> t;
        for (std::int64_t i = 0; i < n * 2; ++i)
            t.push_back({static_cast<std::int64_t>(rng() % n),
                         static_cast<std::int64_t>(rng() % n),
                         Int(static_cast<long>(rng() % 9) - 4)});
        SparseIntMatrix m = SparseIntMatrix::from_triplets(n, std::move(t));
        KernelBasis k = kernel_basis(m);
        CHECK(rank(m) + k.dimension() == n);
        for (const auto& v : k.vectors) {
            std::vector<Int> image = neighsum::apply(m, v);
            CHECK(std::all_of(image.begin(), image.end(),
                              [](const Int& x) { return x == 0; }));
        }
    }
}

TEST_CASE("apply") {
    SparseIntMatrix t5 = build_operator(BoardSpec::square(5));
    std::vector<Int> zero(25, Int(0));
    CHECK(neighsum::apply(t5, zero) == zero);
    std::vector<Int> image = neighsum::apply(t5, vec_k1());
    CHECK(std::all_of(image.begin(), image.end(), [](const Int& x) { return x == 0; }));
    std::vector<Int> ones(25, Int(1));
    std::vector<Int> not_zero = neighsum::apply(t5, ones);
    CHECK(std::any_of(not_zero.begin(), not_zero.end(), [](const Int& x) { return x != 0; }));
    CHECK_THROWS_AS(neighsum::apply(t5, std::vector<Int>(24, Int(0))), std::invalid_argument);
}

TEST_CASE("in_span") {
    KernelBasis k5 = kernel_basis(build_operator(BoardSpec::square(5)));
    CHECK(in_span(k5, std::vector<Int>(25, Int(0))));

    std::vector<Int> combo = vec_k1();
    std::vector<Int> k2 = vec_k2();
    for (std::size_t i = 0; i < combo.size(); ++i) combo[i] = 3 * combo[i] + 2 * k2[i];
    CHECK(in_span(k5, combo));

    std::vector<Int> unit(25, Int(0));
    unit[0] = 1;
    CHECK(!in_span(k5, unit));
    CHECK_THROWS_AS(in_span(k5, std::vector<Int>(24, Int(0))), std::invalid_argument);
}

TEST_CASE("canonical_span equals kernel span") {
    KernelBasis k5 = kernel_basis(build_operator(BoardSpec::square(5)));
    KernelBasis from_boards = canonical_span(25, {vec_k1(), vec_k2()});
    CHECK(from_boards == k5);

    // Dependent and scaled generators canonicalize identically.
    std::vector<Int> sum = vec_k1();
    std::vector<Int> k2 = vec_k2();
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += k2[i];
    std::vector<Int> scaled = vec_k1();
    for (Int& x : scaled) x *= -7;
    CHECK(canonical_span(25, {sum, scaled, vec_k2()}) == k5);
}
