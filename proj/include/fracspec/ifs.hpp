#pragma once

#include "fracspec/types.hpp"

#include <functional>
#include <span>

namespace fracspec {

// One-dimensional affine iterated function system: maps tau_b(x) = (x+b)/R
// for b in a finite digit set B, scale R >= 2.  The attractor carries the
// unique balanced invariant measure mu; everything in this library evaluates
// against that measure.
struct AffineIfs {
    Int scale = 0;      // R
    DigitSet digits;    // B, sorted, distinct, at least two entries

    AffineIfs(Int R, std::vector<Int> B);

    std::size_t size() const { return digits.size(); }

    // Support of mu is [min(B), max(B)] / (R - 1).
    double support_min() const { return double(digits.front()) / double(scale - 1); }
    double support_max() const { return double(digits.back()) / double(scale - 1); }

    double tau(Int b, double x) const { return (x + double(b)) / double(scale); }
};

// chi_B(x) = (1/N) * sum_{b in B} e(b x), the transform of the uniform
// measure on the digit set.  |chi_B| <= 1 with equality at integers.
Complex digit_mask(const AffineIfs& ifs, double x);

// Verdict of the exact rational zero test for mu-hat.
enum class ZeroVerdict { zero, nonzero, undecidable };

// Decides exactly whether mu-hat(p/q) = 0.  Works whenever the digit set,
// translated to start at 0 and divided by its gcd, is {0,1,...,N-1} (this
// covers every two-digit set and every full digit set {0..N-1} up to affine
// normalization); other digit sets report undecidable.  The decision uses
// only integer arithmetic: some factor chi_B(p / (q R^n)) vanishes iff
// N*d*p is divisible by q*R^n while d*p is not, and the search terminates
// because the divisibility fails once q*R^n exceeds N*d*|p|.
ZeroVerdict exact_transform_zero(const AffineIfs& ifs, Int p, Int q = 1);

// mu-hat(t) = prod_{n>=1} chi_B(t / R^n), truncated once the certified tail
// is below tol.  The returned bound covers both the dropped tail (via
// |chi_B(x) - 1| <= 2*pi*mean|b|*|x| summed over the tail) and the floating
// point error of the evaluated prefix.  Exact integer zeros (when the zero
// test applies) return {0, 0}.
BoundedComplex fourier_transform(const AffineIfs& ifs, double t, double tol = 1e-12);

// Level-m product quadrature for mu: nodes are the m-fold tau-images of 0,
// all N^m of them with equal weight N^-m.  integrate() over this rule
// reproduces integrals of e(tx) to the accuracy of the level (the rule is
// exact for the measure's self-similar refinement up to depth m).
struct QuadratureRule {
    Int scale = 0;
    DigitSet digits;
    int level = 0;
    double weight = 0.0;          // N^-level
    std::vector<double> nodes;    // size N^level
};

// Builds the rule; throws resource_error when N^level exceeds max_nodes.
QuadratureRule quadrature_rule(const AffineIfs& ifs, int level,
                               std::size_t max_nodes = std::size_t(1) << 26);

// Compensated (and, for large rules, chunk-parallel) sum of w * f(node).
Complex integrate(const QuadratureRule& rule, const std::function<Complex(double)>& f);

} // namespace fracspec
