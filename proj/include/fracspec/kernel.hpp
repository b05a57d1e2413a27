#pragma once

#include "fracspec/spectrum.hpp"
#include "fracspec/types.hpp"

#include <span>

namespace fracspec {

// Evaluation point for the spectral Szego kernels: z in the open unit disk,
// boundary coordinate x (the kernel pairs z^gamma against e(gamma x)), and a
// radius cap used for certified tail bounds (|z| <= radius_cap < 1).
struct KernelQuery {
    Complex z;
    double x = 0.0;
    double radius_cap = 0.0;

    KernelQuery(Complex z, double x);                    // cap = |z|
    KernelQuery(Complex z, double x, double radius_cap); // explicit cap
};

// Classical Szego kernel of the disk against the boundary point e(x):
// k(z, x) = 1 / (1 - conj(z) e(x)).
Complex szego_classical(const KernelQuery& q);

// G_Gamma(z, x) = sum_{gamma in Gamma} conj(z)^gamma e(gamma x), summed over
// a finite sorted gamma stage.  The certified bound covers the dropped tail
// sum_{m > max Gamma} cap^m (all integers beyond the stage, a safe
// overestimate) plus floating point error.
BoundedComplex gamma_kernel_series(std::span<const Int> gamma, const KernelQuery& q);
BoundedComplex gamma_kernel_series(const SpectrumSpec& spec, const KernelQuery& q);

// The same kernel through its product form: conj(G(z, x)) factors as
// prod_{n >= 0} sum_{l in L} z^{R^n l} conj(e(l R^n x)).  `depth` factors
// are multiplied; the remainder is controlled by w/(1-w), w = cap^(R^depth).
BoundedComplex gamma_kernel_product(Int R, const DigitSet& L, const KernelQuery& q, int depth);

// Gram kernel: sum_gamma (z conj(w))^gamma over the stage, |z|,|w| < 1.
BoundedComplex kernel_gram(std::span<const Int> gamma, Complex z, Complex w);

// Smallest stage degree whose series tail bound is below target (subject to
// the term budget), and smallest product depth likewise.
int choose_series_degree(Int R, const DigitSet& L, double cap, double target = 1e-10,
                         std::size_t budget = std::size_t(1) << 22);
int choose_product_depth(Int R, double cap, double target = 1e-10);

// Factorization test: for dual spectrum digit sets (L, L') of a
// complementing pair, G_{Gamma(L)} * G_{Gamma(L')} recovers the classical
// Szego kernel.  residual = |left*right - szego|; bound is the certified
// error budget of the truncated evaluations propagated through the product.
struct FactorizationCheck {
    BoundedComplex left;   // G over Gamma(L)
    BoundedComplex right;  // G over Gamma(L')
    Complex szego;
    double residual = 0.0;
    double bound = 0.0;
    bool within_bound() const { return residual <= bound; }
};

// Explicit stages.
FactorizationCheck factorization_check(std::span<const Int> gamma_left,
                                       std::span<const Int> gamma_right,
                                       const KernelQuery& q);

// Convenience: derives (L, L') from the complementing pair (A, A'), picks
// stage degrees so each series tail is below tail_target, then runs the
// check.
FactorizationCheck factorization_residual(Int R, const DigitSet& A, const DigitSet& Ap,
                                          const KernelQuery& q, double tail_target = 1e-10);

} // namespace fracspec
