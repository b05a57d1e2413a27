#include "fracspec/hadamard.hpp"

#include <cmath>
#include <limits>

namespace fracspec {

HadamardTriple::HadamardTriple(Int R, std::vector<Int> B, std::vector<Int> L)
    : scale(R),
      base(make_digit_set(std::move(B), "hadamard base set")),
      spec(make_digit_set(std::move(L), "hadamard spectrum set")) {
    if (R < 2) throw std::invalid_argument("hadamard scale: must be >= 2");
}

// Exact division of polynomials with integer coefficients (ascending order);
// the divisor must be monic and divide evenly, which holds throughout the
// cyclotomic recursion.
static std::vector<Int> divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<Int> quot(num.size() - dn, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
        Int c = num[i + dn];
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i + j] -= c * den[j];
    }
    return quot;
}

std::vector<Int> cyclotomic_polynomial(Int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
    // Phi_n(x) = (x^n - 1) / prod_{d | n, d < n} Phi_d(x)
    std::vector<Int> poly(std::size_t(n) + 1, 0);
    poly.front() = -1;
    poly.back() = 1;
    for (Int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
    }
    return poly;
}

bool root_of_unity_sum_is_zero(Int R, const std::vector<Int>& exponents) {
    // Counting polynomial c(x) = sum_j x^{e_j mod R}; the sum of the
    // corresponding R-th roots of unity vanishes iff Phi_R | c.
    std::vector<Int> counts(std::size_t(R), 0);
    bool any = false;
    for (Int e : exponents) {
        counts[std::size_t(((e % R) + R) % R)]++;
        any = true;
    }
    if (!any) return true;

    const std::vector<Int> phi = cyclotomic_polynomial(R);
    // Remainder of counts mod the monic phi by synthetic division.
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = counts.size(); i-- > deg;) {
        Int c = counts[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j) counts[i - deg + j] -= c * phi[j];
    }
    for (std::size_t i = 0; i < deg; ++i)
        if (counts[i] != 0) return false;
    return true;
}

bool incongruent_mod(const DigitSet& L, Int R) {
    std::vector<bool> seen(std::size_t(R), false);
    for (Int l : L) {
        std::size_t r = std::size_t(((l % R) + R) % R);
        if (seen[r]) return false;
        seen[r] = true;
    }
    return true;
}

HadamardReport is_hadamard(const HadamardTriple& t, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("is_hadamard: tol must be positive");
    HadamardReport rep;
    if (t.base.size() != t.spec.size()) {
        rep.unitary = false;
        rep.exact = true;
        rep.max_deviation = std::numeric_limits<double>::quiet_NaN();
        rep.reason = "cardinality mismatch: #B != #L";
        return rep;
    }

    const std::size_t N = t.base.size();
    const double R = double(t.scale);

    // Exact path: column l and column l' of H are orthogonal iff
    // sum_b e(b (l'-l)/R) = 0, a root-of-unity sum with integer exponents.
    bool exact_unitary = true;
    for (std::size_t j = 0; j < N && exact_unitary; ++j) {
        for (std::size_t k = j + 1; k < N && exact_unitary; ++k) {
            std::vector<Int> exps;
            exps.reserve(N);
            const Int diff = t.spec[k] - t.spec[j];
            for (Int b : t.base) exps.push_back(b * diff);
            if (!root_of_unity_sum_is_zero(t.scale, exps)) exact_unitary = false;
        }
    }

    // Numeric deviation of H* H from I, reported alongside the verdict.
    double dev = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
        for (std::size_t k = 0; k < N; ++k) {
            Complex s{0.0, 0.0};
            for (Int b : t.base)
                s += unit_phase(double(b) * double(t.spec[k] - t.spec[j]) / R);
            s /= double(N);
            if (j == k) s -= 1.0;
            dev = std::max(dev, std::abs(s));
        }
    }

    rep.exact = true;
    rep.max_deviation = dev;
    // Integer digit data is always decided exactly; tol only governs the
    // numeric deviation, which serves as a cross-check on the exact verdict.
    rep.unitary = exact_unitary;
    if (exact_unitary && !(dev <= tol)) rep.reason = "exact/numeric disagreement";
    return rep;
}

} // namespace fracspec
