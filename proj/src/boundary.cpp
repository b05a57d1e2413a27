#include "fracspec/boundary.hpp"
#include "fracspec/parallel.hpp"

#include <cmath>

namespace fracspec {

GammaPolynomial GammaPolynomial::from_pairs(std::vector<std::pair<Int, Complex>> t) {
    std::sort(t.begin(), t.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i].first == t[i + 1].first)
            throw std::invalid_argument("gamma polynomial: duplicate exponent");
    if (!t.empty() && t.front().first < 0)
        throw std::invalid_argument("gamma polynomial: exponents must be >= 0");
    GammaPolynomial p;
    p.terms = std::move(t);
    return p;
}

double GammaPolynomial::h2_norm_sq() const {
    KahanSum<double> s;
    for (const auto& [g, c] : terms) s.add(std::norm(c));
    return s.value();
}

double GammaPolynomial::h2_norm() const { return std::sqrt(h2_norm_sq()); }

double GammaPolynomial::coeff_abs_sum() const {
    double s = 0.0;
    for (const auto& [g, c] : terms) s += std::abs(c);
    return s;
}

Complex GammaPolynomial::evaluate_disk(Complex z) const {
    Complex sum{0.0, 0.0};
    Complex zpow{1.0, 0.0};
    Int prev = 0;
    for (const auto& [g, c] : terms) {
        zpow *= cpow(z, std::uint64_t(g - prev));
        prev = g;
        sum += c * zpow;
    }
    return sum;
}

Complex GammaPolynomial::boundary_value(double x) const {
    Complex e1 = unit_phase(x);
    Complex sum{0.0, 0.0};
    Complex epow{1.0, 0.0};
    Int prev = 0;
    for (const auto& [g, c] : terms) {
        epow *= cpow(e1, std::uint64_t(g - prev));
        prev = g;
        sum += c * epow;
    }
    return sum;
}

std::vector<BoundedComplex> embedding_coefficients(const AffineIfs& ifs,
                                                   std::span<const Int> gamma, Int n,
                                                   double tol) {
    std::vector<BoundedComplex> out(gamma.size());
    parallel_chunks(gamma.size(), [&](std::size_t i) {
        out[i] = fourier_transform(ifs, double(n - gamma[i]), tol);
    });
    return out;
}

// One quadrature pass of integral conj(G(z, x)) f~(x) dmu(x).
static Complex reproduce_once(const QuadratureRule& rule, std::span<const Int> gamma,
                              const GammaPolynomial& f, Complex z) {
    // Precompute z^gamma for the stage once; per node only unit phases move.
    std::vector<Complex> zpows(gamma.size());
    {
        Complex zpow{1.0, 0.0};
        Int prev = 0;
        for (std::size_t i = 0; i < gamma.size(); ++i) {
            zpow *= cpow(z, std::uint64_t(gamma[i] - prev));
            prev = gamma[i];
            zpows[i] = zpow;
        }
    }
    return integrate(rule, [&](double x) -> Complex {
        // conj(G(z, x)) = sum z^gamma conj(e(gamma x))
        Complex e1 = std::conj(unit_phase(x));
        Complex epow{1.0, 0.0};
        Int prev = 0;
        Complex kern{0.0, 0.0};
        for (std::size_t i = 0; i < gamma.size(); ++i) {
            epow *= cpow(e1, std::uint64_t(gamma[i] - prev));
            prev = gamma[i];
            kern += zpows[i] * epow;
        }
        return kern * f.boundary_value(x);
    });
}

BoundaryEval boundary_evaluate(const AffineIfs& ifs, std::span<const Int> gamma,
                               const GammaPolynomial& f, Complex z, int level,
                               bool estimate_quad_error, std::size_t max_nodes) {
    if (!(std::abs(z) < 1.0))
        throw std::invalid_argument("boundary_evaluate: need |z| < 1");
    for (std::size_t i = 1; i < gamma.size(); ++i)
        if (gamma[i] <= gamma[i - 1])
            throw std::invalid_argument("boundary_evaluate: gamma stage must be increasing");
    if (!gamma.empty() && gamma.front() < 0)
        throw std::invalid_argument("boundary_evaluate: gamma stage must be nonnegative");

    BoundaryEval ev;
    QuadratureRule rule = quadrature_rule(ifs, level, max_nodes);
    ev.value = reproduce_once(rule, gamma, f, z);

    // Kernel truncation: the dropped stage tail has coefficient mass at most
    // sum_{m > max gamma} |z|^m, and |f~| <= sum |c| pointwise.
    double cap = std::abs(z);
    Int maxg = gamma.empty() ? -1 : gamma.back();
    ev.kernel_bound =
        std::pow(cap, double(maxg) + 1.0) / (1.0 - cap) * f.coeff_abs_sum();

    if (estimate_quad_error && level > 0) {
        QuadratureRule coarse = quadrature_rule(ifs, level - 1, max_nodes);
        ev.quad_error = std::abs(ev.value - reproduce_once(coarse, gamma, f, z));
        ev.has_quad_error = true;
    }
    return ev;
}

ParsevalReport parseval_check(const AffineIfs& ifs, const GammaPolynomial& f, int level,
                              std::size_t max_nodes) {
    ParsevalReport rep;
    rep.h2_norm_sq = f.h2_norm_sq();
    rep.h2_norm = std::sqrt(rep.h2_norm_sq);

    QuadratureRule rule = quadrature_rule(ifs, level, max_nodes);
    Complex l2sq = integrate(rule, [&](double x) -> Complex {
        Complex v = f.boundary_value(x);
        return Complex{std::norm(v), 0.0};
    });
    rep.l2mu_norm_sq = std::max(0.0, l2sq.real());
    rep.l2mu_norm = std::sqrt(rep.l2mu_norm_sq);
    rep.gap = std::abs(rep.h2_norm - rep.l2mu_norm);
    return rep;
}

} // namespace fracspec
