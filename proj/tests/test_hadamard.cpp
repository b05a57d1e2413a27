#include "fracspec/hadamard.hpp"

#include <doctest.h>

using namespace fracspec;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Int>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<Int>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});
    CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST_CASE("root of unity sums") {
    CHECK(root_of_unity_sum_is_zero(3, {0, 1, 2}));
    CHECK(root_of_unity_sum_is_zero(6, {0, 2, 4})); // cube roots through 6th roots
    CHECK(root_of_unity_sum_is_zero(6, {0, 3}));
    CHECK(root_of_unity_sum_is_zero(4, {1, 3}));
    CHECK_FALSE(root_of_unity_sum_is_zero(6, {0, 2}));
    CHECK_FALSE(root_of_unity_sum_is_zero(6, {0, 1, 3}));
    CHECK_FALSE(root_of_unity_sum_is_zero(5, {0, 1, 2, 3}));
    CHECK(root_of_unity_sum_is_zero(5, {0, 1, 2, 3, 4}));
    // negative exponents reduce mod R
    CHECK(root_of_unity_sum_is_zero(4, {-1, 1}));
}

TEST_CASE("incongruent residues") {
    CHECK(incongruent_mod({0, 1}, 4));
    CHECK_FALSE(incongruent_mod({0, 4}, 4));
    CHECK(incongruent_mod({0, 2}, 4));
}

TEST_CASE("hadamard verdicts") {
    CHECK(is_hadamard(HadamardTriple(4, {0, 2}, {0, 1})).unitary);
    CHECK(is_hadamard(HadamardTriple(2, {0, 1}, {0, 1})).unitary);
    CHECK(is_hadamard(HadamardTriple(4, {0, 1, 2, 3}, {0, 1, 2, 3})).unitary); // DFT(4)

    HadamardReport bad = is_hadamard(HadamardTriple(4, {0, 1}, {0, 1}));
    CHECK_FALSE(bad.unitary);
    CHECK(bad.exact);
    CHECK(bad.max_deviation > 0.1);

    HadamardReport mismatch = is_hadamard(HadamardTriple(4, {0, 2}, {0, 1, 2}));
    CHECK_FALSE(mismatch.unitary);
    CHECK(mismatch.reason == "cardinality mismatch: #B != #L");

    CHECK_THROWS_AS(is_hadamard(HadamardTriple(4, {0, 2}, {0, 1}), 0.0),
                    std::invalid_argument);
}

TEST_CASE("hadamard invariances") {
    // Translating B adds a common phase per row: unitarity unchanged.
    for (Int shift : {-3, 1, 7}) {
        HadamardTriple base(4, {0, 2}, {0, 1});
        HadamardTriple moved(4, {0 + shift, 2 + shift}, {0, 1});
        CHECK(is_hadamard(base).unitary == is_hadamard(moved).unitary);
    }
    HadamardTriple bad_base(6, {0, 2}, {0, 3});
    HadamardTriple bad_moved(6, {5, 7}, {0, 3});
    CHECK(is_hadamard(bad_base).unitary == is_hadamard(bad_moved).unitary);

    // Swapping B and L conjugate-transposes the matrix.
    for (auto [R, B, L] : {std::tuple<Int, DigitSet, DigitSet>{4, {0, 2}, {0, 1}},
                           {2, {0, 1}, {0, 1}},
                           {4, {0, 1}, {0, 2}},
                           {6, {0, 2, 4}, {0, 1, 2}}}) {
        CHECK(is_hadamard(HadamardTriple(R, B, L)).unitary ==
              is_hadamard(HadamardTriple(R, L, B)).unitary);
    }
}

TEST_CASE("hadamard exactness on subtle cases") {
    // (6, {0,2}, {0,6}): inner product 1 + e(12/6) = 2, plainly not unitary;
    // (6, {0,3}, {0,1}): 1 + e(3/6) = 0, unitary. Both must be exact.
    CHECK_FALSE(is_hadamard(HadamardTriple(6, {0, 2}, {0, 6})).unitary);
    CHECK(is_hadamard(HadamardTriple(6, {0, 3}, {0, 1})).unitary);
    // Scaled DFT inside a larger modulus: (6, {0, 2, 4}, {0, 1, 2}); also
    // {0, 1, 5} works (all column differences hit {0, 2, 4} mod 6) while
    // {0, 1, 3} fails on the difference 3.
    CHECK(is_hadamard(HadamardTriple(6, {0, 2, 4}, {0, 1, 2})).unitary);
    CHECK(is_hadamard(HadamardTriple(6, {0, 2, 4}, {0, 1, 5})).unitary);
    CHECK_FALSE(is_hadamard(HadamardTriple(6, {0, 2, 4}, {0, 1, 3})).unitary);
}
