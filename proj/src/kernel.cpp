#include "fracspec/kernel.hpp"
#include "fracspec/complement.hpp"

#include <cfloat>
#include <cmath>

namespace fracspec {

KernelQuery::KernelQuery(Complex z_, double x_) : KernelQuery(z_, x_, std::abs(z_)) {}

KernelQuery::KernelQuery(Complex z_, double x_, double cap) : z(z_), x(x_), radius_cap(cap) {
    if (!std::isfinite(x)) throw std::invalid_argument("kernel query: x must be finite");
    if (!(std::abs(z) < 1.0)) throw std::invalid_argument("kernel query: need |z| < 1");
    if (!(radius_cap < 1.0) || radius_cap < std::abs(z))
        throw std::invalid_argument("kernel query: need |z| <= radius_cap < 1");
}

Complex szego_classical(const KernelQuery& q) {
    return 1.0 / (1.0 - std::conj(q.z) * unit_phase(q.x));
}

// sum_{gamma} u^gamma over a sorted stage, with a certified bound that
// charges every integer exponent above the stage maximum at modulus `cap`.
static BoundedComplex geometric_sum_over(std::span<const Int> gamma, Complex u, double cap) {
    Complex sum{0.0, 0.0};
    double abs_sum = 0.0;
    Complex upow{1.0, 0.0};
    Int prev = 0;
    Int max_gamma = -1;
    for (Int g : gamma) {
        if (g < prev || (max_gamma >= 0 && g == prev))
            throw std::invalid_argument("gamma stage must be sorted, distinct, nonnegative");
        upow *= cpow(u, std::uint64_t(g - prev));
        prev = g;
        max_gamma = g;
        sum += upow;
        abs_sum += std::abs(upow);
    }
    double tail = 0.0;
    if (cap > 0.0)
        tail = std::pow(cap, double(max_gamma) + 1.0) / (1.0 - cap);
    double fp = DBL_EPSILON * (80.0 * abs_sum + 8.0 * std::abs(sum));
    return {sum, tail + fp};
}

BoundedComplex gamma_kernel_series(std::span<const Int> gamma, const KernelQuery& q) {
    // G(z, x) = sum conj(z)^gamma e(gamma x) = sum u^gamma at
    // u = conj(z) e(x).
    Complex u = std::conj(q.z) * unit_phase(q.x);
    return geometric_sum_over(gamma, u, q.radius_cap);
}

BoundedComplex gamma_kernel_series(const SpectrumSpec& spec, const KernelQuery& q) {
    std::vector<Int> g = gamma_set(spec);
    return gamma_kernel_series(g, q);
}

BoundedComplex gamma_kernel_product(Int R, const DigitSet& L, const KernelQuery& q, int depth) {
    if (R < 2) throw std::invalid_argument("gamma_kernel_product: R must be >= 2");
    if (depth < 0) throw std::invalid_argument("gamma_kernel_product: depth must be >= 0");
    DigitSet spec = make_digit_set(std::vector<Int>(L), "kernel product digits");
    if (spec.front() != 0)
        throw std::invalid_argument("gamma_kernel_product: L must contain 0 as smallest digit");

    // conj(G(z, x)) = prod_{n >= 0} sum_{l in L} z^{R^n l} conj(e(l R^n x)).
    // z^{R^n} is iterated by powering, and the boundary phase argument is
    // reduced mod 1 at every step so precision does not degrade with R^n.
    Complex prod{1.0, 0.0};
    Complex zpow = q.z;              // z^{R^n}
    double xn = std::fmod(q.x, 1.0); // R^n x mod 1
    for (int n = 0; n < depth; ++n) {
        Complex factor{0.0, 0.0};
        for (Int l : spec) factor += cpow(zpow, std::uint64_t(l)) * unit_phase(-double(l) * xn);
        prod *= factor;
        zpow = cpow(zpow, std::uint64_t(R));
        xn = std::fmod(xn * double(R), 1.0);
    }

    // Remaining factors differ from 1 by at most sum_{l > 0} cap^(R^n l);
    // accumulate those deviations until they underflow.
    double dev_sum = 0.0;
    double rn = std::pow(double(R), double(depth));
    for (int n = 0; n < 200; ++n) {
        double dev = 0.0;
        for (Int l : spec)
            if (l > 0) dev += std::pow(q.radius_cap, rn * double(l));
        if (dev == 0.0) break;
        dev_sum += dev;
        rn *= double(R);
    }
    double tail = std::abs(prod) * std::expm1(dev_sum);
    double fp = DBL_EPSILON * double(depth) * (8.0 * double(spec.size()) + 8.0) *
                std::max(1.0, std::abs(prod));
    return {std::conj(prod), tail + fp + 1e-290};
}

BoundedComplex kernel_gram(std::span<const Int> gamma, Complex z, Complex w) {
    if (!(std::abs(z) < 1.0) || !(std::abs(w) < 1.0))
        throw std::invalid_argument("kernel_gram: need |z| < 1 and |w| < 1");
    // <G(w, .), G(z, .)> over the stage collapses to sum (z conj(w))^gamma.
    return geometric_sum_over(gamma, z * std::conj(w), std::abs(z) * std::abs(w));
}

int choose_series_degree(Int R, const DigitSet& L, double cap, double target,
                         std::size_t budget) {
    if (!(cap >= 0.0 && cap < 1.0))
        throw std::invalid_argument("choose_series_degree: need 0 <= cap < 1");
    if (!(target > 0.0)) throw std::invalid_argument("choose_series_degree: target must be > 0");
    DigitSet spec = make_digit_set(std::vector<Int>(L), "series digits");
    if (spec.front() < 0) throw std::invalid_argument("choose_series_degree: digits must be >= 0");

    std::size_t terms = 1;
    unsigned __int128 max_gamma = 0;
    unsigned __int128 pw = 1;
    for (int degree = 0; degree < 2000; ++degree) {
        if (terms > budget / spec.size())
            throw resource_error("choose_series_degree: term budget exceeded before target");
        terms *= spec.size();
        max_gamma += pw * (unsigned __int128)spec.back();
        pw *= (unsigned __int128)R;
        if (max_gamma > ((unsigned __int128)1 << 62))
            throw resource_error("choose_series_degree: stage exceeds 64-bit range before target");
        double tail = std::pow(cap, double((Int)max_gamma) + 1.0) / (1.0 - cap);
        if (tail <= target) return degree;
        if (spec.back() == 0)
            throw resource_error("choose_series_degree: degenerate digits cannot reach target");
    }
    throw resource_error("choose_series_degree: target unreachable");
}

int choose_product_depth(Int R, double cap, double target) {
    if (!(cap >= 0.0 && cap < 1.0))
        throw std::invalid_argument("choose_product_depth: need 0 <= cap < 1");
    if (!(target > 0.0)) throw std::invalid_argument("choose_product_depth: target must be > 0");
    double rn = 1.0;
    for (int depth = 0; depth <= 64; ++depth) {
        // Deviation sum of the dropped factors is below cap^(R^depth)/(1-cap).
        double w = std::pow(cap, rn);
        if (std::expm1(w / (1.0 - cap)) <= target) return depth;
        rn *= double(R);
    }
    throw resource_error("choose_product_depth: target unreachable");
}

FactorizationCheck factorization_check(std::span<const Int> gamma_left,
                                       std::span<const Int> gamma_right,
                                       const KernelQuery& q) {
    FactorizationCheck chk;
    chk.left = gamma_kernel_series(gamma_left, q);
    chk.right = gamma_kernel_series(gamma_right, q);
    chk.szego = szego_classical(q);
    Complex prod = chk.left.value * chk.right.value;
    chk.residual = std::abs(prod - chk.szego);
    chk.bound = chk.left.abs_upper() * chk.right.bound +
                chk.right.abs_upper() * chk.left.bound +
                DBL_EPSILON * 16.0 * (std::abs(prod) + std::abs(chk.szego));
    return chk;
}

FactorizationCheck factorization_residual(Int R, const DigitSet& A, const DigitSet& Ap,
                                          const KernelQuery& q, double tail_target) {
    DualSets dual = dual_spectra_sets(A, Ap, R);
    if (!dual.certificate.all())
        throw hypothesis_error("dual certificate",
                               "factorization_residual: dual spectra certificate failed");
    int dl = choose_series_degree(R, dual.L, q.radius_cap, tail_target);
    int dr = choose_series_degree(R, dual.L_prime, q.radius_cap, tail_target);
    std::vector<Int> gl = gamma_set(SpectrumSpec(R, dual.L, dl));
    std::vector<Int> gr = gamma_set(SpectrumSpec(R, dual.L_prime, dr));
    return factorization_check(gl, gr, q);
}

} // namespace fracspec
