#pragma once

#include "fracspec/hadamard.hpp"
#include "fracspec/types.hpp"

#include <boost/rational.hpp>

namespace fracspec {

using Rational = boost::rational<Int>;

// A cycle of the maps x -> (x + l)/R, l in L, on which the base digit mask
// has modulus 1 at every point ("extreme").  points[i] steps to
// points[(i+1) % size] under digit digits[i]; points are exact rationals and
// the cycle is rotated so points[0] is the smallest.  The fixed point 0
// (digit 0) is the trivial cycle.
struct ExtremeCycle {
    std::vector<Rational> points;
    std::vector<Int> digits;
    bool trivial = false;
};

// [0, max(L)/(R-1)], the interval that traps every cycle of the dual maps.
std::pair<Rational, Rational> attractor_interval(Int R, const DigitSet& L);

// All extreme cycles of (R, B, L).  Candidate points are k/g for integer k,
// g = gcd of the base digits translated to start at 0 (|chi_B(x)| = 1 forces
// g*x into the integers); the search is an exact simple-cycle enumeration on
// the finite candidate graph.  Requires (R, B, L) with 0 in L, digits of L
// nonnegative.
std::vector<ExtremeCycle> extreme_cycles(Int R, const DigitSet& B, const DigitSet& L);

// Spectrality decision for the pair: Hadamard triple + only-trivial extreme
// cycles imply Gamma(L) is an orthonormal-basis spectrum for the measure.
struct SpectralVerdict {
    HadamardReport hadamard;
    std::vector<ExtremeCycle> nontrivial_cycles;
    bool spectral = false;
};
SpectralVerdict is_spectral_pair(Int R, const DigitSet& B, const DigitSet& L);

} // namespace fracspec
