#include "fracspec/complement.hpp"

#include <map>
#include <set>

namespace fracspec {

bool is_complementing(const DigitSet& A, const DigitSet& Ap, Int R) {
    if (R < 1) throw std::invalid_argument("is_complementing: R must be >= 1");
    if (A.empty() || Ap.empty()) return false;
    // Unique representation forces #A * #Ap == R with all sums distinct
    // inside [0, R).
    if (Int(A.size()) * Int(Ap.size()) != R) return false;
    std::vector<bool> hit(std::size_t(R), false);
    for (Int a : A) {
        for (Int ap : Ap) {
            Int s = a + ap;
            if (s < 0 || s >= R) return false;
            if (hit[std::size_t(s)]) return false;
            hit[std::size_t(s)] = true;
        }
    }
    return true; // R sums, all distinct, all in range: every residue is hit
}

static void require(bool ok, const char* hypothesis, const std::string& msg) {
    if (!ok) throw hypothesis_error(hypothesis, msg);
}

Decomposition decompose(const DigitSet& A, const DigitSet& Ap, Int R) {
    require(contains(A, 0), "0 in A", "decompose: A must contain 0");
    require(contains(Ap, 0), "0 in A'", "decompose: A' must contain 0");
    require(is_complementing(A, Ap, R), "A (+) A' = {0..R-1}",
            "decompose: pair is not complementing for R");

    Decomposition dec;
    if (A.size() == 1) {
        dec.kind = Decomposition::Kind::trivial_left;
        dec.C = A;
        dec.C_prime = Ap;
        return dec;
    }
    if (Ap.size() == 1) {
        dec.kind = Decomposition::Kind::trivial_right;
        dec.C = A;
        dec.C_prime = Ap;
        return dec;
    }

    // 1 = a + a' uniquely, so exactly one side contains the digit 1.
    dec.one_in_first = contains(A, 1);
    require(dec.one_in_first || contains(Ap, 1), "1 in A or A'",
            "decompose: neither set contains 1");
    const DigitSet& S = dec.one_in_first ? A : Ap;  // side with the run
    const DigitSet& O = dec.one_in_first ? Ap : A;  // other side

    // d = length of the maximal initial run {0,1,...,d-1} of S.
    Int d = 1;
    while (contains(S, d)) ++d;
    require(d >= 2, "initial run length >= 2", "decompose: run extraction failed");
    require(R % d == 0, "run length divides R",
            "decompose: initial run length " + std::to_string(d) +
                " does not divide R = " + std::to_string(R));
    dec.d = d;

    // S must split as {0,...,d-1} (+) d*E, and O must be d*F.
    DigitSet E;
    for (Int s : S)
        if (s % d == 0) E.push_back(s / d);
    require(E.size() * std::size_t(d) == S.size(), "S = {0..d-1} (+) d*E",
            "decompose: run side does not split over the divisor");
    {
        // Reconstruct and compare to close the verification loop.
        DigitSet rebuilt;
        rebuilt.reserve(S.size());
        for (Int e : E)
            for (Int r = 0; r < d; ++r) rebuilt.push_back(d * e + r);
        std::sort(rebuilt.begin(), rebuilt.end());
        require(rebuilt == S, "S = {0..d-1} (+) d*E",
                "decompose: run side does not split over the divisor");
    }
    DigitSet F;
    F.reserve(O.size());
    for (Int o : O) {
        require(o % d == 0, "d | A-opposite digits",
                "decompose: opposite side has a digit not divisible by " + std::to_string(d));
        F.push_back(o / d);
    }

    require(is_complementing(E, F, R / d), "E (+) F = {0..R/d-1}",
            "decompose: descended pair is not complementing for R/d");

    dec.kind = Decomposition::Kind::split;
    if (dec.one_in_first) {
        dec.C = E;        // A = {0..d-1} (+) d*C
        dec.C_prime = F;  // A' = d*C'
    } else {
        dec.C = F;        // A = d*C
        dec.C_prime = E;  // A' = {0..d-1} (+) d*C'
    }
    return dec;
}

static DigitSet run_times(Int step, Int count) {
    DigitSet out;
    out.reserve(std::size_t(count));
    for (Int k = 0; k < count; ++k) out.push_back(step * k);
    return out;
}

static DigitSet sum_sets(const DigitSet& a, const DigitSet& b) {
    DigitSet out;
    out.reserve(a.size() * b.size());
    for (Int x : a)
        for (Int y : b) out.push_back(x + y);
    std::sort(out.begin(), out.end());
    return out;
}

// Recursion without re-verifying the certificate at every level; the caller
// checks the certificate once at the top.
static std::pair<DigitSet, DigitSet> dual_recurse(const DigitSet& A, const DigitSet& Ap, Int R) {
    Decomposition dec = decompose(A, Ap, R);
    if (dec.kind == Decomposition::Kind::trivial_left)
        return {DigitSet{0}, run_times(1, R)};
    if (dec.kind == Decomposition::Kind::trivial_right)
        return {run_times(1, R), DigitSet{0}};

    const Int q = R / dec.d;
    auto [M, Mp] = dual_recurse(dec.C, dec.C_prime, q);
    if (dec.one_in_first) {
        // A = {0..d-1} (+) d*C picks up the coarse layer q*{0..d-1}.
        return {sum_sets(M, run_times(q, dec.d)), Mp};
    }
    return {M, sum_sets(Mp, run_times(q, dec.d))};
}

DualSets dual_spectra_sets(const DigitSet& A, const DigitSet& Ap, Int R) {
    DualSets out;
    auto [L, Lp] = dual_recurse(A, Ap, R);
    out.L = std::move(L);
    out.L_prime = std::move(Lp);

    DualCertificate& cert = out.certificate;
    cert.direct_sum = is_complementing(out.L, out.L_prime, R);
    cert.hadamard_left = is_hadamard(HadamardTriple(R, A, out.L)).unitary;
    cert.hadamard_right = is_hadamard(HadamardTriple(R, Ap, out.L_prime)).unitary;
    cert.gcd_left = gcd_of_digits(A);
    cert.gcd_right = gcd_of_digits(Ap);
    cert.gcd_bound_left = cert.gcd_left * out.L.back() < R;
    cert.gcd_bound_right = cert.gcd_right * out.L_prime.back() < R;
    // The degenerate side {0} has gcd 0; divisibility is only meaningful for
    // nonzero gcds.
    cert.gcd_divides_scale = (cert.gcd_left == 0 || R % cert.gcd_left == 0) &&
                             (cert.gcd_right == 0 || R % cert.gcd_right == 0);
    return out;
}

std::vector<std::pair<DigitSet, DigitSet>> enumerate_complementing_pairs(Int R) {
    if (R < 1) throw std::invalid_argument("enumerate_complementing_pairs: R must be >= 1");

    std::map<Int, std::set<std::pair<DigitSet, DigitSet>>> memo;
    auto enumerate = [&](auto&& self, Int n) -> const std::set<std::pair<DigitSet, DigitSet>>& {
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
        std::set<std::pair<DigitSet, DigitSet>> pairs;
        if (n == 1) {
            pairs.insert({DigitSet{0}, DigitSet{0}});
        } else {
            // Every pair for n with both sets containing 0 arises from a
            // divisor split: the side holding 1 is {0..d-1} (+) d*E and the
            // other is d*F with (E, F) complementing for n/d.
            for (Int d = 2; d <= n; ++d) {
                if (n % d != 0) continue;
                for (const auto& [E, F] : self(self, n / d)) {
                    DigitSet withrun;
                    withrun.reserve(E.size() * std::size_t(d));
                    for (Int e : E)
                        for (Int r = 0; r < d; ++r) withrun.push_back(d * e + r);
                    std::sort(withrun.begin(), withrun.end());
                    DigitSet scaled;
                    scaled.reserve(F.size());
                    for (Int f : F) scaled.push_back(d * f);
                    pairs.insert({withrun, scaled});
                    pairs.insert({scaled, withrun});
                }
            }
        }
        if (pairs.size() > (std::size_t(1) << 20))
            throw resource_error("enumerate_complementing_pairs: pair budget exceeded");
        return memo.emplace(n, std::move(pairs)).first->second;
    };

    const auto& result = enumerate(enumerate, R);
    return {result.begin(), result.end()};
}

} // namespace fracspec
