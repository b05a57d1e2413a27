#pragma once

#include "fracspec/types.hpp"

namespace fracspec {

// Candidate Hadamard triple (R, B, L): the claim is that the matrix
// H = N^{-1/2} ( e(b*l/R) ), rows indexed by B, columns by L, is unitary.
struct HadamardTriple {
    Int scale = 0;   // R >= 2
    DigitSet base;   // B
    DigitSet spec;   // L

    HadamardTriple(Int R, std::vector<Int> B, std::vector<Int> L);
};

struct HadamardReport {
    bool unitary = false;
    bool exact = false;          // verdict established by integer arithmetic
    double max_deviation = 0.0;  // max |(H* H - I)_{jk}| over all entries
    std::string reason;          // nonempty only on structural failure
};

// Coefficients (ascending, exact) of the n-th cyclotomic polynomial,
// computed by dividing x^n - 1 by the cyclotomic factors of the proper
// divisors of n.
std::vector<Int> cyclotomic_polynomial(Int n);

// Decides whether sum_j omega^{e_j} = 0 for omega = e(1/R), given the
// multiset of exponents mod R.  Exact: the sum vanishes iff the counting
// polynomial is divisible by the R-th cyclotomic polynomial.
bool root_of_unity_sum_is_zero(Int R, const std::vector<Int>& exponents);

// Unitarity check.  Integer digit data always yields an exact verdict (each
// off-diagonal inner product is a root-of-unity sum); max_deviation is the
// measured numeric deviation of H* H from the identity and must also respect
// tol for a true verdict.  #B != #L fails structurally with a reason.
HadamardReport is_hadamard(const HadamardTriple& t, double tol = 1e-12);

// True when the elements of L are pairwise incongruent mod R.
bool incongruent_mod(const DigitSet& L, Int R);

} // namespace fracspec
