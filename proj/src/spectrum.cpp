#include "fracspec/spectrum.hpp"
#include "fracspec/hadamard.hpp"

#include <set>

namespace fracspec {

SpectrumSpec::SpectrumSpec(Int R, std::vector<Int> L, int deg, std::size_t max_terms)
    : scale(R), digits(make_digit_set(std::move(L), "spectrum digits")), degree(deg) {
    if (R < 2) throw std::invalid_argument("spectrum scale: must be >= 2");
    if (deg < 0) throw std::invalid_argument("spectrum degree: must be >= 0");
    if (digits.front() != 0)
        throw std::invalid_argument("spectrum digits: 0 must be the smallest digit");
    if (!incongruent_mod(digits, R))
        throw std::invalid_argument("spectrum digits: entries must be incongruent mod R");

    // Cardinality and range guards: all stage elements must fit comfortably
    // in 64 bits and the enumeration must stay within the budget.
    std::size_t count = 1;
    for (int k = 0; k <= deg; ++k) {
        if (count > max_terms / digits.size())
            throw resource_error("spectrum: term budget exceeded");
        count *= digits.size();
    }
    unsigned __int128 hi = 0;
    unsigned __int128 pw = 1;
    for (int k = 0; k <= deg; ++k) {
        hi += pw * (unsigned __int128)digits.back();
        pw *= (unsigned __int128)R;
        if (hi > ((unsigned __int128)1 << 62))
            throw resource_error("spectrum: stage exceeds 64-bit range");
    }
}

std::size_t SpectrumSpec::term_count() const {
    std::size_t count = 1;
    for (int k = 0; k <= degree; ++k) count *= digits.size();
    return count;
}

Int SpectrumSpec::max_element() const {
    Int hi = 0, pw = 1;
    for (int k = 0; k <= degree; ++k) {
        hi += pw * digits.back();
        pw *= scale;
    }
    return hi;
}

std::vector<Int> gamma_set(const SpectrumSpec& spec) {
    // Stage recursion Gamma_k = L + R * Gamma_{k-1}, seeded with {0} at
    // virtual stage -1; every iteration multiplies the count by #L because
    // the digits are incongruent mod R (expansions are unique).
    std::vector<Int> g{0};
    g.reserve(spec.term_count());
    for (int k = 0; k <= spec.degree; ++k) {
        std::vector<Int> next;
        next.reserve(g.size() * spec.digits.size());
        for (Int x : g)
            for (Int l : spec.digits) next.push_back(spec.scale * x + l);
        g = std::move(next);
    }
    std::sort(g.begin(), g.end());
    return g;
}

bool check_self_affine(const SpectrumSpec& spec) {
    // Gamma_{degree+1} must equal R * Gamma_degree + L elementwise.
    SpectrumSpec up(spec.scale, spec.digits, spec.degree + 1);
    std::vector<Int> big = gamma_set(up);
    std::vector<Int> cur = gamma_set(spec);
    std::vector<Int> built;
    built.reserve(big.size());
    for (Int x : cur)
        for (Int l : spec.digits) built.push_back(spec.scale * x + l);
    std::sort(built.begin(), built.end());
    return built == big;
}

SumSet direct_sum(const std::vector<Int>& a, const std::vector<Int>& b) {
    SumSet out;
    out.values.reserve(a.size() * b.size());
    for (Int x : a)
        for (Int y : b) out.values.push_back(x + y);
    std::sort(out.values.begin(), out.values.end());
    out.unique =
        std::adjacent_find(out.values.begin(), out.values.end()) == out.values.end();
    out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
    return out;
}

std::vector<Int> difference_set(const std::vector<Int>& g, Int bound) {
    std::set<Int> diffs;
    for (Int x : g)
        for (Int y : g) {
            Int d = x - y;
            if (bound >= 0 && (d > bound || d < -bound)) continue;
            diffs.insert(d);
        }
    return {diffs.begin(), diffs.end()};
}

} // namespace fracspec
