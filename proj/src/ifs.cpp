#include "fracspec/ifs.hpp"
#include "fracspec/parallel.hpp"

#include <cfloat>
#include <cmath>
#include <limits>

namespace fracspec {

AffineIfs::AffineIfs(Int R, std::vector<Int> B)
    : scale(R), digits(make_digit_set(std::move(B), "ifs digits")) {
    if (R < 2) throw std::invalid_argument("ifs scale: must be >= 2");
    if (digits.size() < 2) throw std::invalid_argument("ifs digits: need at least two digits");
}

Complex digit_mask(const AffineIfs& ifs, double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("digit_mask: x must be finite");
    Complex s{0.0, 0.0};
    for (Int b : ifs.digits) s += unit_phase(double(b) * x);
    return s / double(ifs.size());
}

ZeroVerdict exact_transform_zero(const AffineIfs& ifs, Int p, Int q) {
    if (q <= 0) throw std::invalid_argument("exact_transform_zero: q must be positive");
    Int g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) { p /= g; q /= g; }
    // mu-hat(-t) = conj(mu-hat(t)), so the zero set is symmetric.
    unsigned __int128 ap = p < 0 ? -(unsigned __int128)p : (unsigned __int128)p;
    if (ap == 0) return ZeroVerdict::nonzero; // mu-hat(0) = 1

    // Normalize the digit set: translation by min(B) multiplies mu-hat by a
    // unimodular phase, and dividing out the gcd d rescales the argument.
    Int base = ifs.digits.front();
    Int d = 0;
    for (Int b : ifs.digits) d = std::gcd(d, b - base);
    // d == 0 cannot happen (>= 2 distinct digits).
    const Int N = Int(ifs.size());
    for (std::size_t i = 0; i < ifs.digits.size(); ++i) {
        if (ifs.digits[i] - base != d * Int(i)) return ZeroVerdict::undecidable;
    }
    // Now B ~ d*{0,...,N-1}: chi vanishes at x iff N*d*x is an integer and
    // d*x is not, i.e. iff some factor index n has q*R^n | N*d*p without
    // q*R^n | d*p.
    unsigned __int128 num = (unsigned __int128)N * (unsigned __int128)d * ap;
    unsigned __int128 dnum = (unsigned __int128)d * ap;
    unsigned __int128 den = (unsigned __int128)q;
    const unsigned __int128 R = (unsigned __int128)ifs.scale;
    while (true) {
        den *= R; // q * R^n, n = 1, 2, ...
        if (den > num) return ZeroVerdict::nonzero;
        if (num % den == 0 && dnum % den != 0) return ZeroVerdict::zero;
    }
}

BoundedComplex fourier_transform(const AffineIfs& ifs, double t, double tol) {
    if (!std::isfinite(t)) throw std::invalid_argument("fourier_transform: t must be finite");
    if (!(tol > 0.0)) throw std::invalid_argument("fourier_transform: tol must be positive");
    if (t == 0.0) return {Complex{1.0, 0.0}, 0.0};

    // Exact zeros at rationals (integers here) short-circuit the product.
    if (std::abs(t) < 9e15 && std::nearbyint(t) == t) {
        if (exact_transform_zero(ifs, Int(t)) == ZeroVerdict::zero)
            return {Complex{0.0, 0.0}, 0.0};
    }

    const double R = double(ifs.scale);
    double mean_abs = 0.0;
    for (Int b : ifs.digits) mean_abs += std::abs(double(b));
    mean_abs /= double(ifs.size());
    const double c = two_pi * mean_abs;

    // Dropped factors n > n0 satisfy |chi(t/R^n) - 1| <= c |t| R^-n, so the
    // relative tail error is at most expm1(sum) with sum = c|t| R^-n0/(R-1).
    // Pick the smallest depth that brings that under tol.
    double tail_sum = c * std::abs(t) / (R - 1.0);
    const double target = std::log1p(tol);
    int depth = 0;
    while (tail_sum > target && depth < 1100) {
        tail_sum /= R;
        ++depth;
    }

    Complex prod{1.0, 0.0};
    double x = t;
    for (int n = 1; n <= depth; ++n) {
        x /= R;
        prod *= digit_mask(ifs, x);
        if (prod == Complex{0.0, 0.0}) break;
    }

    // Each factor evaluation costs ~N flops on unit-modulus terms; the
    // accumulated relative rounding is well under (6N+8)*eps per factor.
    double fp = double(depth) * (6.0 * double(ifs.size()) + 8.0) * DBL_EPSILON;
    double bound = std::abs(prod) * std::expm1(tail_sum) + fp * std::max(1.0, std::abs(prod));
    return {prod, bound};
}

QuadratureRule quadrature_rule(const AffineIfs& ifs, int level, std::size_t max_nodes) {
    if (level < 0) throw std::invalid_argument("quadrature_rule: level must be >= 0");
    const std::size_t N = ifs.size();
    std::size_t count = 1;
    for (int k = 0; k < level; ++k) {
        if (count > max_nodes / N)
            throw resource_error("quadrature_rule: node budget exceeded");
        count *= N;
    }

    QuadratureRule rule;
    rule.scale = ifs.scale;
    rule.digits = ifs.digits;
    rule.level = level;
    rule.weight = std::pow(double(N), -double(level));

    // Nodes of level m are tau_{b_1}(tau_{b_2}(... tau_{b_m}(0))), i.e.
    // sum_k b_k R^-k over all digit words; built by one refinement pass per
    // level: X_{m} = { (x + b)/R : x in X_{m-1}, b in B }.
    std::vector<double> nodes{0.0};
    nodes.reserve(count);
    for (int k = 0; k < level; ++k) {
        std::vector<double> next;
        next.reserve(nodes.size() * N);
        for (Int b : ifs.digits)
            for (double x : nodes) next.push_back((x + double(b)) / double(ifs.scale));
        nodes = std::move(next);
    }
    rule.nodes = std::move(nodes);
    return rule;
}

Complex integrate(const QuadratureRule& rule, const std::function<Complex(double)>& f) {
    const std::size_t n = rule.nodes.size();
    const std::size_t chunk = 16384;
    const std::size_t chunks = (n + chunk - 1) / chunk;

    std::vector<Complex> partial(chunks, Complex{0.0, 0.0});
    parallel_chunks(chunks, [&](std::size_t c) {
        KahanSum<Complex> acc;
        const std::size_t lo = c * chunk, hi = std::min(n, lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) acc.add(f(rule.nodes[i]));
        partial[c] = acc.value();
    });

    KahanSum<Complex> total;
    for (const Complex& p : partial) total.add(p);
    return total.value() * rule.weight;
}

} // namespace fracspec
