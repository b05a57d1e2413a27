#pragma once

#include "fracspec/ifs.hpp"
#include "fracspec/spectrum.hpp"

#include <span>

namespace fracspec {

// Lower estimate of the frame symbol sigma(t) = sum_{gamma} |mu-hat(t - gamma)|^2
// over a finite stage, with a certified error: each term's modulus is known
// to its own bound, and the reported `error` majorizes the accumulated
// uncertainty of the partial sum (the true full sum is >= value - error, and
// >= value - error even before adding the dropped nonnegative tail).
struct SigmaValue {
    double value = 0.0;
    double error = 0.0;
};
SigmaValue sigma_gamma(const AffineIfs& ifs, std::span<const Int> gamma, double t,
                       double tol = 1e-14);

// Gram matrix of the exponentials e(gamma x) in L^2(mu): entries
// mu-hat(gamma_j - gamma_k), row-major.  exact_identity is set when every
// off-diagonal entry vanished by the exact integer zero test.
enum class GramClass { orthonormal, riesz, degenerate };

struct GramReport {
    std::vector<Int> gamma;
    std::size_t dim = 0;
    std::vector<Complex> matrix; // dim*dim, row-major
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    bool exact_identity = false;
    GramClass classification = GramClass::degenerate;
};

GramReport gram_matrix(const AffineIfs& ifs, std::span<const Int> gamma,
                       double tol = 1e-14, std::size_t max_dim = 4096,
                       double riesz_floor = 1e-10);

// Grid-based diagnostics for a candidate spectrum: exact orthogonality,
// lower frame evidence (min over the grid of the sigma lower estimates),
// Bessel ceiling (max upper estimate), and Riesz bounds from the Gram
// eigenvalues.
struct ClassifyReport {
    bool orthogonal = false;        // all pairwise mu-hat differences vanish
    bool orthogonal_exact = false;  // ... by exact integer arithmetic
    double max_offdiagonal = 0.0;   // largest |mu-hat(diff)| actually seen
    double onb_evidence = 0.0;      // min over grid of sigma lower estimates
    double bessel_ceiling = 0.0;    // max over grid of sigma upper estimates
    double riesz_lower = 0.0;       // lambda_min of the Gram stage
    double riesz_upper = 0.0;       // lambda_max of the Gram stage
};
ClassifyReport classify_system(const AffineIfs& ifs, std::span<const Int> gamma,
                               std::span<const double> grid, double tol = 1e-14);

// Membership evidence against the measure-class hierarchy: exact mutual
// orthogonality, a uniform bound sigma <= A on the grid, and the distance of
// the sigma profile from the constant 1 (the orthonormal-basis case).
struct MembershipEvidence {
    bool orthogonal_exact = false;   // pairwise-orthogonal class
    bool within_bound = false;       // sigma <= A across the grid (upper est.)
    double bound = 0.0;              // the A that was tested
    double sigma_min = 0.0;          // min lower estimate on grid
    double sigma_max = 0.0;          // max upper estimate on grid
    double onb_gap = 0.0;            // max over grid of |1 - sigma| outer gap
};
MembershipEvidence measure_class_membership(const AffineIfs& ifs,
                                            std::span<const Int> gamma, double bound_A,
                                            std::span<const double> grid,
                                            double tol = 1e-14);

} // namespace fracspec
