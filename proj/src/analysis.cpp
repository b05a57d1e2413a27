#include "fracspec/analysis.hpp"
#include "fracspec/parallel.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace fracspec {

SigmaValue sigma_gamma(const AffineIfs& ifs, std::span<const Int> gamma, double t,
                       double tol) {
    // Terms are |mu-hat(t - gamma)|^2; each transform value v carries bound
    // b, and | |v|^2 - |exact|^2 | <= 2|v|b + b^2.
    std::vector<double> vals(gamma.size()), errs(gamma.size());
    parallel_chunks(gamma.size(), [&](std::size_t i) {
        BoundedComplex f = fourier_transform(ifs, t - double(gamma[i]), tol);
        double a = std::abs(f.value);
        vals[i] = a * a;
        errs[i] = 2.0 * a * f.bound + f.bound * f.bound;
    });
    KahanSum<double> sum, err;
    for (double v : vals) sum.add(v);
    for (double e : errs) err.add(e);
    return {sum.value(), err.value() + 1e-15 * double(gamma.size() + 1)};
}

GramReport gram_matrix(const AffineIfs& ifs, std::span<const Int> gamma, double tol,
                       std::size_t max_dim, double riesz_floor) {
    GramReport rep;
    rep.gamma.assign(gamma.begin(), gamma.end());
    rep.dim = gamma.size();
    if (rep.dim == 0) throw std::invalid_argument("gram_matrix: empty gamma stage");
    if (rep.dim > max_dim) throw resource_error("gram_matrix: dimension budget exceeded");

    rep.matrix.assign(rep.dim * rep.dim, Complex{0.0, 0.0});
    bool exact_offdiag = true;
    std::vector<char> row_exact(rep.dim, 1);
    parallel_chunks(rep.dim, [&](std::size_t j) {
        for (std::size_t k = 0; k < rep.dim; ++k) {
            if (j == k) {
                rep.matrix[j * rep.dim + k] = Complex{1.0, 0.0};
                continue;
            }
            Int diff = gamma[j] - gamma[k];
            if (exact_transform_zero(ifs, diff) == ZeroVerdict::zero) continue;
            rep.matrix[j * rep.dim + k] = fourier_transform(ifs, double(diff), tol).value;
            row_exact[j] = 0;
        }
    });
    for (char e : row_exact) exact_offdiag = exact_offdiag && e;
    rep.exact_identity = exact_offdiag;

    Eigen::MatrixXcd M(rep.dim, rep.dim);
    for (std::size_t j = 0; j < rep.dim; ++j)
        for (std::size_t k = 0; k < rep.dim; ++k) M(Eigen::Index(j), Eigen::Index(k)) = rep.matrix[j * rep.dim + k];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(M, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("gram_matrix: eigenvalue iteration failed");
    rep.lambda_min = solver.eigenvalues().minCoeff();
    rep.lambda_max = solver.eigenvalues().maxCoeff();

    if (rep.exact_identity)
        rep.classification = GramClass::orthonormal;
    else if (rep.lambda_min > riesz_floor)
        rep.classification = GramClass::riesz;
    else
        rep.classification = GramClass::degenerate;
    return rep;
}

ClassifyReport classify_system(const AffineIfs& ifs, std::span<const Int> gamma,
                               std::span<const double> grid, double tol) {
    if (gamma.empty()) throw std::invalid_argument("classify_system: empty gamma stage");
    ClassifyReport rep;

    // Pairwise orthogonality: exact where the zero test decides, numeric
    // fallback (|value| within its certified bound) otherwise.
    rep.orthogonal = true;
    rep.orthogonal_exact = true;
    for (std::size_t j = 0; j < gamma.size() && rep.orthogonal; ++j) {
        for (std::size_t k = j + 1; k < gamma.size() && rep.orthogonal; ++k) {
            Int diff = gamma[j] - gamma[k];
            if (exact_transform_zero(ifs, diff) == ZeroVerdict::zero) continue;
            BoundedComplex f = fourier_transform(ifs, double(diff), tol);
            rep.orthogonal_exact = false;
            rep.max_offdiagonal = std::max(rep.max_offdiagonal, std::abs(f.value));
            if (!f.consistent_with_zero()) rep.orthogonal = false;
        }
    }
    if (!rep.orthogonal) rep.orthogonal_exact = false;

    // Frame evidence over the grid.
    rep.onb_evidence = std::numeric_limits<double>::infinity();
    rep.bessel_ceiling = 0.0;
    std::vector<SigmaValue> sig(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) sig[i] = sigma_gamma(ifs, gamma, grid[i], tol);
    for (const SigmaValue& s : sig) {
        rep.onb_evidence = std::min(rep.onb_evidence, s.value - s.error);
        rep.bessel_ceiling = std::max(rep.bessel_ceiling, s.value + s.error);
    }
    if (grid.empty()) rep.onb_evidence = 0.0;

    GramReport gram = gram_matrix(ifs, gamma, tol);
    rep.riesz_lower = gram.lambda_min;
    rep.riesz_upper = gram.lambda_max;
    return rep;
}

MembershipEvidence measure_class_membership(const AffineIfs& ifs,
                                            std::span<const Int> gamma, double bound_A,
                                            std::span<const double> grid, double tol) {
    if (!(bound_A > 0.0))
        throw std::invalid_argument("measure_class_membership: bound must be positive");
    MembershipEvidence ev;
    ev.bound = bound_A;

    ev.orthogonal_exact = true;
    for (std::size_t j = 0; j < gamma.size() && ev.orthogonal_exact; ++j)
        for (std::size_t k = j + 1; k < gamma.size() && ev.orthogonal_exact; ++k)
            if (exact_transform_zero(ifs, gamma[j] - gamma[k]) != ZeroVerdict::zero)
                ev.orthogonal_exact = false;

    ev.sigma_min = std::numeric_limits<double>::infinity();
    ev.sigma_max = 0.0;
    ev.within_bound = true;
    ev.onb_gap = 0.0;
    for (double t : grid) {
        SigmaValue s = sigma_gamma(ifs, gamma, t, tol);
        ev.sigma_min = std::min(ev.sigma_min, s.value - s.error);
        ev.sigma_max = std::max(ev.sigma_max, s.value + s.error);
        if (s.value - s.error > bound_A) ev.within_bound = false;
        ev.onb_gap = std::max(ev.onb_gap,
                              std::max(std::abs(1.0 - (s.value - s.error)),
                                       std::abs(1.0 - (s.value + s.error))));
    }
    if (grid.empty()) {
        ev.sigma_min = 0.0;
        ev.sigma_max = 0.0;
    }
    return ev;
}

} // namespace fracspec
