#pragma once

#include "fracspec/ifs.hpp"
#include "fracspec/kernel.hpp"

#include <span>
#include <utility>

namespace fracspec {

// Finite Fourier/Taylor polynomial supported on nonnegative integer
// frequencies: f(z) = sum c_gamma z^gamma on the disk, with boundary trace
// f~(x) = sum c_gamma e(gamma x).  Terms are kept sorted by exponent.
struct GammaPolynomial {
    std::vector<std::pair<Int, Complex>> terms;

    static GammaPolynomial from_pairs(std::vector<std::pair<Int, Complex>> t);

    double h2_norm_sq() const;  // sum |c|^2
    double h2_norm() const;
    double coeff_abs_sum() const;
    Complex evaluate_disk(Complex z) const;   // sum c z^gamma, |z| < 1
    Complex boundary_value(double x) const;   // sum c e(gamma x)
};

// Coefficients of the embedding J(e_n) against the stage: entry i is
// mu-hat(n - gamma_i), i.e. <e_n, e_{gamma_i}>_{L^2(mu)}.
std::vector<BoundedComplex> embedding_coefficients(const AffineIfs& ifs,
                                                   std::span<const Int> gamma, Int n,
                                                   double tol = 1e-14);

// Reproduces f(z) from its boundary trace by integrating conj(G(z, x))
// f~(x) dmu(x) with a level-`level` product quadrature.  kernel_bound is
// the certified truncation error of the kernel stage (scaled by the
// coefficient mass of f); quad_error is a two-level Richardson-style
// estimate |Q_level - Q_{level-1}| when requested.
struct BoundaryEval {
    Complex value{0.0, 0.0};
    double kernel_bound = 0.0;
    double quad_error = 0.0;
    bool has_quad_error = false;
};
BoundaryEval boundary_evaluate(const AffineIfs& ifs, std::span<const Int> gamma,
                               const GammaPolynomial& f, Complex z, int level,
                               bool estimate_quad_error = false,
                               std::size_t max_nodes = std::size_t(1) << 26);

// Norm identity check: ||f||_{H^2} vs ||f~||_{L^2(mu)} through the level-m
// quadrature.  For a spectrum stage of mu (orthonormal exponentials) the two
// agree; the gap is reported, not asserted.
struct ParsevalReport {
    double h2_norm = 0.0;
    double l2mu_norm = 0.0;
    double gap = 0.0;            // |h2 - l2mu|
    double h2_norm_sq = 0.0;
    double l2mu_norm_sq = 0.0;
};
ParsevalReport parseval_check(const AffineIfs& ifs, const GammaPolynomial& f, int level,
                              std::size_t max_nodes = std::size_t(1) << 26);

} // namespace fracspec
