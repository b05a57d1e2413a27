#pragma once

#include "fracspec/types.hpp"

#include <span>

namespace fracspec {

// Finite stage of the lacunary spectrum Gamma(L): all digit expansions
// sum_{k=0}^{degree} R^k l_k with l_k in L.  Requires 0 in L and pairwise
// incongruent digits mod R, which make the expansions distinct and the
// stages nested.
struct SpectrumSpec {
    Int scale = 0;    // R
    DigitSet digits;  // L, nonnegative, 0 included
    int degree = 0;   // highest power of R used

    SpectrumSpec(Int R, std::vector<Int> L, int degree,
                 std::size_t max_terms = std::size_t(1) << 24);

    std::size_t term_count() const; // #L^(degree+1)
    Int max_element() const;        // max(L) * (R^(degree+1)-1)/(R-1)
};

// The sorted elements of the stage; size is exactly term_count().
std::vector<Int> gamma_set(const SpectrumSpec& spec);

// Verifies the self-affine step Gamma_{degree+1} = R * Gamma_degree + L
// by direct enumeration of both sides.
bool check_self_affine(const SpectrumSpec& spec);

// a (+) b with a uniqueness flag: `unique` is true when all |a|*|b| sums
// are distinct (values are reported sorted, duplicates kept only once).
struct SumSet {
    std::vector<Int> values;
    bool unique = false;
};
SumSet direct_sum(const std::vector<Int>& a, const std::vector<Int>& b);

// All pairwise differences x - y for x, y in g, restricted to |diff| <=
// bound (bound < 0 means no restriction); sorted, duplicate-free.
std::vector<Int> difference_set(const std::vector<Int>& g, Int bound = -1);

} // namespace fracspec
