#pragma once

#include "fracspec/hadamard.hpp"
#include "fracspec/types.hpp"

#include <utility>

namespace fracspec {

// Raised when a decomposition or recursion hypothesis fails; `hypothesis`
// names the specific condition that did not hold.
struct hypothesis_error : std::invalid_argument {
    std::string hypothesis;
    hypothesis_error(std::string hyp, const std::string& msg)
        : std::invalid_argument(msg), hypothesis(std::move(hyp)) {}
};

// True iff every residue 0..R-1 is hit exactly once by a + a' with a in A,
// a' in A' (so A (+) A' = {0,...,R-1} with unique representation).
bool is_complementing(const DigitSet& A, const DigitSet& Ap, Int R);

// Structure theorem for complementing pairs with 0 in both sets: either one
// side is {0}, or there is a divisor d >= 2 of R such that the side
// containing the digit 1 splits off a full run {0,...,d-1} and the pair
// descends to a complementing pair for R/d.  `d` is chosen as the smallest
// positive integer missing from the side containing 1 (equivalently, the
// length of its maximal initial run).
struct Decomposition {
    enum class Kind { trivial_left, trivial_right, split } kind;
    bool one_in_first = false; // split case: digit 1 lies in A (else in A')
    Int d = 0;                 // split divisor, d | R, 2 <= d < R... (= run length)
    DigitSet C;                // descended set paired with A's role
    DigitSet C_prime;          // descended set paired with A''s role
};
Decomposition decompose(const DigitSet& A, const DigitSet& Ap, Int R);

// Everything checked about a dual-spectrum construction; all() is the
// overall certificate.
struct DualCertificate {
    bool direct_sum = false;       // L (+) L' tiles {0,...,R-1} uniquely
    bool hadamard_left = false;    // (R, A, L) unitary, exact arithmetic
    bool hadamard_right = false;   // (R, A', L') unitary, exact arithmetic
    bool gcd_bound_left = false;   // gcd(A) * max(L)   < R
    bool gcd_bound_right = false;  // gcd(A') * max(L') < R
    bool gcd_divides_scale = false;// gcd(A) | R and gcd(A') | R
    Int gcd_left = 0, gcd_right = 0;
    bool all() const {
        return direct_sum && hadamard_left && hadamard_right &&
               gcd_bound_left && gcd_bound_right && gcd_divides_scale;
    }
};

struct DualSets {
    DigitSet L;        // spectrum digits paired with A
    DigitSet L_prime;  // spectrum digits paired with A'
    DualCertificate certificate;
};

// Builds the dual spectrum digit sets for a complementing pair by recursion
// on the decomposition above, then verifies the full certificate.  Both A
// and A' must contain 0; the pair must be complementing for R.
DualSets dual_spectra_sets(const DigitSet& A, const DigitSet& Ap, Int R);

// All complementing pairs (A, A') for R with 0 in both sets, enumerated by
// the same divisor recursion that drives dual_spectra_sets (every pair
// arises from a split, so the recursion is exhaustive); sorted and
// duplicate-free, ordered pairs (the swap of a pair is listed too).
std::vector<std::pair<DigitSet, DigitSet>> enumerate_complementing_pairs(Int R);

} // namespace fracspec
