#include "fracspec/cycles.hpp"

namespace fracspec {

std::pair<Rational, Rational> attractor_interval(Int R, const DigitSet& L) {
    if (R < 2) throw std::invalid_argument("attractor_interval: R must be >= 2");
    if (L.empty()) throw std::invalid_argument("attractor_interval: L must be nonempty");
    return {Rational(L.front(), R - 1), Rational(L.back(), R - 1)};
}

std::vector<ExtremeCycle> extreme_cycles(Int R, const DigitSet& B, const DigitSet& L) {
    if (R < 2) throw std::invalid_argument("extreme_cycles: R must be >= 2");
    if (B.size() < 2) throw std::invalid_argument("extreme_cycles: need at least two base digits");
    DigitSet spec = make_digit_set(std::vector<Int>(L), "extreme_cycles spectrum digits");
    if (spec.front() != 0)
        throw std::invalid_argument("extreme_cycles: L must contain 0 as its smallest digit");

    // |chi_B(x)| = 1 iff all phases e(b x) agree, i.e. (b - b') x is an
    // integer for every digit pair, i.e. g x in Z for g = gcd of the
    // translated digits.  Translation only rotates chi_B, so g is computed
    // from B - min(B).
    Int g = 0;
    for (Int b : B) g = std::gcd(g, b - B.front());

    // Cycles of x -> (x + l)/R with l >= 0 live in [0, max(L)/(R-1)], so the
    // candidate nodes are k/g with 0 <= k <= g*max(L)/(R-1).
    const Int kmax = g * spec.back() / (R - 1);
    if (kmax > 2'000'000) throw resource_error("extreme_cycles: candidate budget exceeded");

    // Outgoing edges: k -> (k + g*l)/R whenever R divides k + g*l and the
    // image stays in range.  Distinct digits give distinct images.
    const std::size_t n = std::size_t(kmax) + 1;
    std::vector<std::vector<std::pair<Int, Int>>> edges(n); // (target k', digit l)
    for (Int k = 0; k <= kmax; ++k) {
        for (Int l : spec) {
            Int s = k + g * l;
            if (s % R != 0) continue;
            Int k2 = s / R;
            if (k2 <= kmax) edges[std::size_t(k)].push_back({k2, l});
        }
    }

    // Simple-cycle enumeration: for each root r ascending, walk only nodes
    // >= r not already on the path; closing an edge into r yields the cycle
    // whose minimal node is r, so each cycle is produced exactly once.
    std::vector<ExtremeCycle> out;
    std::vector<char> on_path(n, 0);
    std::vector<Int> path, path_digits;

    auto dfs = [&](auto&& self, Int root, Int k) -> void {
        for (auto [k2, l] : edges[std::size_t(k)]) {
            if (k2 == root) {
                ExtremeCycle cyc;
                cyc.points.reserve(path.size());
                for (Int p : path) cyc.points.push_back(Rational(p, g));
                cyc.digits = path_digits;
                cyc.digits.push_back(l);
                cyc.trivial = (path.size() == 1 && path[0] == 0);
                out.push_back(std::move(cyc));
                if (out.size() > 10000)
                    throw resource_error("extreme_cycles: cycle budget exceeded");
            } else if (k2 > root && !on_path[std::size_t(k2)]) {
                on_path[std::size_t(k2)] = 1;
                path.push_back(k2);
                path_digits.push_back(l);
                self(self, root, k2);
                path_digits.pop_back();
                path.pop_back();
                on_path[std::size_t(k2)] = 0;
            }
        }
    };

    for (Int r = 0; r <= kmax; ++r) {
        on_path[std::size_t(r)] = 1;
        path.push_back(r);
        dfs(dfs, r, r);
        path.pop_back();
        on_path[std::size_t(r)] = 0;
    }
    return out;
}

SpectralVerdict is_spectral_pair(Int R, const DigitSet& B, const DigitSet& L) {
    SpectralVerdict v;
    v.hadamard = is_hadamard(HadamardTriple(R, B, L));
    for (ExtremeCycle& c : extreme_cycles(R, B, L))
        if (!c.trivial) v.nontrivial_cycles.push_back(std::move(c));
    v.spectral = v.hadamard.unitary && v.nontrivial_cycles.empty();
    return v;
}

} // namespace fracspec
