#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracspec {

using Int = std::int64_t;
using Complex = std::complex<double>;

// A finite set of integer digits, kept sorted and duplicate-free.
using DigitSet = std::vector<Int>;

inline constexpr double two_pi = 6.283185307179586476925286766559;

// Thrown when a request would exceed an explicit work budget (node counts,
// set cardinalities, 64-bit ranges).  Distinct from invalid_argument so
// callers can retry with smaller parameters.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computed complex value together with a certified bound on the absolute
// error |value - exact|.  Exact results carry bound 0.
struct BoundedComplex {
    Complex value{0.0, 0.0};
    double bound = 0.0;

    double abs_lower() const { return std::max(0.0, std::abs(value) - bound); }
    double abs_upper() const { return std::abs(value) + bound; }
    // True when the certified disk around `value` contains 0.
    bool consistent_with_zero() const { return std::abs(value) <= bound; }
};

// e(x) = exp(2*pi*i*x).  The argument is reduced mod 1 before scaling so the
// trig evaluation never sees a large angle.
inline Complex unit_phase(double x) {
    return std::polar(1.0, two_pi * std::fmod(x, 1.0));
}

// base^e by binary powering; cpow(z, 0) == 1 even for z == 0.
inline Complex cpow(Complex base, std::uint64_t e) {
    Complex acc{1.0, 0.0};
    while (e != 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// Sorts, rejects duplicates.  All digit-set constructors funnel through here.
inline DigitSet make_digit_set(std::vector<Int> values, const char* what = "digit set") {
    if (values.empty())
        throw std::invalid_argument(std::string(what) + ": must be nonempty");
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end())
        throw std::invalid_argument(std::string(what) + ": entries must be distinct");
    return values;
}

inline bool contains(const DigitSet& s, Int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

// gcd of all entries (0 for the all-zero set); signs ignored.
inline Int gcd_of_digits(const DigitSet& s) {
    Int g = 0;
    for (Int v : s) g = std::gcd(g, v);
    return g;
}

// Compensated (Kahan) accumulator; used wherever 1e-14-level sums of many
// terms are required.
template <class T>
struct KahanSum {
    T sum{};
    T carry{};
    void add(T v) {
        T y = v - carry;
        T t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    T value() const { return sum; }
};

} // namespace fracspec
