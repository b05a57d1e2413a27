// Acceptance harness: twelve end-to-end checks of the library against known
// closed forms, exact-arithmetic certificates, and certified error bounds.
// Prints one PASS/FAIL line per check; exit status is the number of failures.

#include "fracspec/analysis.hpp"
#include "fracspec/boundary.hpp"
#include "fracspec/complement.hpp"
#include "fracspec/cycles.hpp"
#include "fracspec/ifs.hpp"
#include "fracspec/kernel.hpp"
#include "fracspec/spectrum.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace fracspec;

namespace {

int g_failures = 0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename Fn>
void criterion(int index, const std::string& name, Fn&& body) {
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++g_failures;
    std::printf("%s %2d  %s%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                detail.empty() ? "" : "  -- ", detail.c_str());
    std::fflush(stdout);
}

// Complementing pairs with both sides larger than {0}, for 2 <= R <= rmax,
// together with their dual spectra.
struct DualEntry {
    Int R;
    DigitSet A, Ap;
    DualSets dual;
};

std::vector<DualEntry> nontrivial_duals(Int rmax) {
    std::vector<DualEntry> out;
    for (Int R = 2; R <= rmax; ++R)
        for (const auto& [A, Ap] : enumerate_complementing_pairs(R)) {
            if (A.size() < 2 || Ap.size() < 2) continue;
            out.push_back({R, A, Ap, dual_spectra_sets(A, Ap, R)});
        }
    return out;
}

std::vector<KernelQuery> random_queries(std::size_t count, double cap, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<KernelQuery> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        double r = cap * std::sqrt(u(rng));
        double theta = two_pi * u(rng);
        double x = u(rng);
        out.emplace_back(std::polar(r, theta), x, cap);
    }
    return out;
}

} // namespace

int main() {
    criterion(1, "transform vanishes exactly on odd integers for (4,{-1,1})", [](std::string& d) {
        AffineIfs ifs(4, {-1, 1});
        auto start = Clock::now();
        for (Int t = -101; t <= 101; t += 2) {
            if (exact_transform_zero(ifs, t) != ZeroVerdict::zero) {
                d = "verdict not zero at t=" + std::to_string(t);
                return false;
            }
            BoundedComplex v = fourier_transform(ifs, double(t));
            if (v.value != Complex(0.0, 0.0) || v.bound != 0.0) {
                d = "value not exact zero at t=" + std::to_string(t);
                return false;
            }
        }
        double elapsed = seconds_since(start);
        if (elapsed >= 1.0) {
            d = "took " + std::to_string(elapsed) + " s";
            return false;
        }
        return true;
    });

    criterion(2, "transform at 2 is certified negative and appears in the embedding",
              [](std::string& d) {
                  AffineIfs ifs(4, {-1, 1});
                  BoundedComplex v = fourier_transform(ifs, 2.0);
                  if (!(v.value.real() < 0.0)) {
                      d = "value not negative";
                      return false;
                  }
                  if (!(std::abs(v.value) > v.bound)) {
                      d = "modulus not above the certified bound";
                      return false;
                  }
                  // J(e_2) against the stage {0,1,4,5,...}: the coefficient at
                  // gamma = 0 is <e_2, e_0> = mu-hat(2), so J(e_2) is not the
                  // monomial z^2 (which has no gamma = 0 component).
                  auto gamma = gamma_set(SpectrumSpec(4, {0, 1}, 3));
                  auto coeffs = embedding_coefficients(ifs, gamma, 2);
                  if (gamma[0] != 0) {
                      d = "stage does not start at 0";
                      return false;
                  }
                  if (coeffs[0].value != v.value) {
                      d = "embedding coefficient differs from direct evaluation";
                      return false;
                  }
                  if (!(coeffs[0].abs_lower() > 0.0)) {
                      d = "coefficient not certified nonzero";
                      return false;
                  }
                  return true;
              });

    criterion(3, "32x32 Gram stage of (4,{0,2}) is exactly the identity", [](std::string& d) {
        auto start = Clock::now();
        AffineIfs ifs(4, {0, 2});
        auto gamma = gamma_set(SpectrumSpec(4, {0, 1}, 4));
        if (gamma.size() != 32) {
            d = "stage size " + std::to_string(gamma.size());
            return false;
        }
        GramReport rep = gram_matrix(ifs, gamma);
        if (!rep.exact_identity) {
            d = "off-diagonal entries not exactly zero";
            return false;
        }
        if (std::abs(rep.lambda_min - 1.0) > 1e-10 || std::abs(rep.lambda_max - 1.0) > 1e-10) {
            d = "eigenvalue range [" + std::to_string(rep.lambda_min) + ", " +
                std::to_string(rep.lambda_max) + "]";
            return false;
        }
        if (rep.classification != GramClass::orthonormal) {
            d = "not classified orthonormal";
            return false;
        }
        double elapsed = seconds_since(start);
        if (elapsed >= 5.0) {
            d = "took " + std::to_string(elapsed) + " s";
            return false;
        }
        return true;
    });

    criterion(4, "sigma lower estimates are monotone, capped, and reach 0.99",
              [](std::string& d) {
                  AffineIfs ifs(4, {0, 2});
                  for (double t : {0.1, 0.37, 0.5}) {
                      double prev = -1.0;
                      double best_certified = 0.0;
                      for (int degree = 2; degree <= 8; ++degree) {
                          auto gamma = gamma_set(SpectrumSpec(4, {0, 1}, degree));
                          SigmaValue s = sigma_gamma(ifs, gamma, t);
                          if (s.value + 1e-12 < prev) {
                              d = "estimate decreased at t=" + std::to_string(t) +
                                  " degree=" + std::to_string(degree);
                              return false;
                          }
                          if (s.value > 1.0 + 1e-9) {
                              d = "estimate exceeds 1 at t=" + std::to_string(t);
                              return false;
                          }
                          prev = s.value;
                          best_certified = std::max(best_certified, s.value - s.error);
                      }
                      if (!(best_certified > 0.99)) {
                          d = "best certified estimate " + std::to_string(best_certified) +
                              " at t=" + std::to_string(t);
                          return false;
                      }
                  }
                  return true;
              });

    // Shared by criteria 5, 6, 8.
    std::vector<DualEntry> duals32;

    criterion(5, "dual spectra certificates hold for every complementing pair, R <= 32",
              [&duals32](std::string& d) {
                  auto start = Clock::now();
                  duals32 = nontrivial_duals(32);
                  if (duals32.empty()) {
                      d = "no pairs enumerated";
                      return false;
                  }
                  for (const auto& e : duals32) {
                      const DualCertificate& c = e.dual.certificate;
                      if (!(c.all() && c.direct_sum && c.hadamard_left && c.hadamard_right &&
                            c.gcd_bound_left && c.gcd_bound_right && c.gcd_divides_scale)) {
                          std::ostringstream os;
                          os << "certificate failed at R=" << e.R;
                          d = os.str();
                          return false;
                      }
                  }
                  double elapsed = seconds_since(start);
                  if (elapsed >= 60.0) {
                      d = "took " + std::to_string(elapsed) + " s";
                      return false;
                  }
                  d = std::to_string(duals32.size()) + " pairs";
                  return true;
              });

    criterion(6, "only trivial extreme cycles across dual pairs; controls expose {1}",
              [&duals32](std::string& d) {
                  if (duals32.empty()) duals32 = nontrivial_duals(32);
                  for (const auto& e : duals32) {
                      auto cycles = extreme_cycles(e.R, e.A, e.dual.L);
                      for (const auto& c : cycles)
                          if (!c.trivial) {
                              d = "nontrivial cycle at R=" + std::to_string(e.R);
                              return false;
                          }
                  }
                  auto has_one_cycle = [](const std::vector<ExtremeCycle>& cycles) {
                      for (const auto& c : cycles)
                          if (!c.trivial && c.points.size() == 1 && c.points[0] == Rational(1))
                              return true;
                      return false;
                  };
                  if (!has_one_cycle(extreme_cycles(4, {0, 2}, {0, 3}))) {
                      d = "(4,{0,2},{0,3}) missing the cycle {1}";
                      return false;
                  }
                  if (!has_one_cycle(extreme_cycles(2, {0, 1}, {0, 1}))) {
                      d = "(2,{0,1},{0,1}) missing the cycle {1}";
                      return false;
                  }
                  return true;
              });

    criterion(7, "transform product equals the unit-interval transform", [](std::string& d) {
        AffineIfs a(4, {0, 2}), ap(4, {0, 1});
        for (int i = 0; i < 200; ++i) {
            double t = -20.0 + 0.2 * i;
            Complex lhs = fourier_transform(a, t).value * fourier_transform(ap, t).value;
            Complex rhs;
            if (t == 0.0) {
                rhs = 1.0;
            } else {
                // (e(t) - 1) / (2 pi i t), the transform of Lebesgue measure
                // on [0,1].
                rhs = (std::polar(1.0, two_pi * t) - 1.0) / Complex(0.0, two_pi * t);
            }
            if (std::abs(lhs - rhs) > 1e-8) {
                d = "mismatch " + std::to_string(std::abs(lhs - rhs)) +
                    " at t=" + std::to_string(t);
                return false;
            }
        }
        return true;
    });

    criterion(8, "kernel factorization stays within certified bounds, R <= 16",
              [](std::string& d) {
                  auto queries = random_queries(100, 0.9, 0);
                  for (const auto& e : nontrivial_duals(16))
                      for (const auto& q : queries) {
                          FactorizationCheck fc = factorization_residual(e.R, e.A, e.Ap, q);
                          if (!(fc.residual <= fc.bound)) {
                              d = "residual above bound at R=" + std::to_string(e.R);
                              return false;
                          }
                          if (!(fc.bound <= 1e-6)) {
                              d = "bound " + std::to_string(fc.bound) + " too large at R=" +
                                  std::to_string(e.R);
                              return false;
                          }
                      }
                  return true;
              });

    criterion(9, "series and product kernels agree within combined bounds", [](std::string& d) {
        auto queries = random_queries(100, 0.9, 0);
        for (const DigitSet& L : {DigitSet{0, 1}, DigitSet{0, 2}}) {
            int degree = choose_series_degree(4, L, 0.9);
            int depth = choose_product_depth(4, 0.9);
            SpectrumSpec spec(4, L, degree);
            for (const auto& q : queries) {
                BoundedComplex s = gamma_kernel_series(spec, q);
                BoundedComplex p = gamma_kernel_product(4, L, q, depth);
                double diff = std::abs(s.value - p.value);
                if (diff > s.bound + p.bound) {
                    d = "difference " + std::to_string(diff) + " above bounds for L={" +
                        std::to_string(L[0]) + "," + std::to_string(L[1]) + "}";
                    return false;
                }
            }
        }
        return true;
    });

    criterion(10, "boundary reconstruction and norm identity at ~1e6 nodes",
              [](std::string& d) {
                  AffineIfs ifs(4, {0, 2});
                  auto gamma = gamma_set(SpectrumSpec(4, {0, 1}, 4));
                  const int level = 20; // 2^20 nodes
                  std::mt19937_64 rng(0);
                  std::uniform_real_distribution<double> u(-1.0, 1.0);
                  std::uniform_int_distribution<std::size_t> pick(0, gamma.size() - 1);
                  for (int trial = 0; trial < 20; ++trial) {
                      std::set<std::size_t> idx;
                      while (idx.size() < 6) idx.insert(pick(rng));
                      std::vector<std::pair<Int, Complex>> terms;
                      for (std::size_t i : idx)
                          terms.emplace_back(gamma[i], Complex(u(rng), u(rng)));
                      GammaPolynomial f = GammaPolynomial::from_pairs(std::move(terms));
                      Complex z = std::polar(0.35 + 0.35 * std::abs(u(rng)),
                                             two_pi * std::abs(u(rng)));
                      BoundaryEval ev = boundary_evaluate(ifs, gamma, f, z, level);
                      double diff = std::abs(ev.value - f.evaluate_disk(z));
                      if (diff > 1e-6) {
                          d = "reconstruction off by " + std::to_string(diff);
                          return false;
                      }
                      ParsevalReport pr = parseval_check(ifs, f, level);
                      if (pr.gap > 1e-6) {
                          d = "norm gap " + std::to_string(pr.gap);
                          return false;
                      }
                  }
                  // Non-orthogonal control: for the (3,{0,2}) measure and the
                  // candidate frequencies {0,1}, the squared norms differ by
                  // exactly 2 Re mu-hat(1).
                  GammaPolynomial f01 =
                      GammaPolynomial::from_pairs({{0, Complex(1.0, 0.0)}, {1, Complex(1.0, 0.0)}});
                  ParsevalReport ctrl = parseval_check(AffineIfs(3, {0, 2}), f01, level);
                  double squared_gap = ctrl.l2mu_norm_sq - ctrl.h2_norm_sq;
                  double analytic = 2.0 * 0.3714373567087654;
                  if (std::abs(squared_gap - analytic) > 1e-8) {
                      d = "control gap " + std::to_string(squared_gap) + " vs " +
                          std::to_string(analytic);
                      return false;
                  }
                  return true;
              });

    criterion(11, "ternary difference set covers its range; Lebesgue sigma vanishes",
              [](std::string& d) {
                  for (int n = 2; n <= 6; ++n) {
                      auto g = gamma_set(SpectrumSpec(3, {0, 1}, n));
                      auto diffs = difference_set(g);
                      Int m = 0;
                      for (int k = 0; k <= n; ++k) m = 3 * m + 1; // (3^(n+1)-1)/2
                      if (diffs.front() != -m || diffs.back() != m ||
                          diffs.size() != std::size_t(2 * m + 1)) {
                          d = "gap in coverage at degree " + std::to_string(n);
                          return false;
                      }
                  }
                  auto g = gamma_set(SpectrumSpec(3, {0, 1}, 6));
                  SigmaValue s = sigma_gamma(AffineIfs(3, {0, 1, 2}), g, 2.0);
                  if (s.value != 0.0) {
                      d = "sigma(2) = " + std::to_string(s.value);
                      return false;
                  }
                  return true;
              });

    criterion(12, "quadrature refinement identity across five systems", [](std::string& d) {
        const std::vector<AffineIfs> systems = {
            AffineIfs(2, {0, 1}), AffineIfs(3, {0, 2}), AffineIfs(4, {0, 2}),
            AffineIfs(4, {-1, 1}), AffineIfs(5, {0, 1, 2, 3, 4})};
        std::mt19937_64 rng(0);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (const AffineIfs& ifs : systems) {
            for (int rep = 0; rep < 3; ++rep) {
                Complex c0(u(rng), u(rng)), c1(u(rng), u(rng)), c2(u(rng), u(rng)),
                    c3(u(rng), u(rng));
                auto f = [&](double x) { return ((c3 * x + c2) * x + c1) * x + c0; };
                for (int m = 0; m <= 8; ++m) {
                    Complex lhs = integrate(quadrature_rule(ifs, m + 1), f);
                    KahanSum<Complex> rhs;
                    QuadratureRule rule = quadrature_rule(ifs, m);
                    for (Int b : ifs.digits)
                        rhs.add(integrate(rule, [&](double x) { return f(ifs.tau(b, x)); }));
                    Complex avg = rhs.value() / double(ifs.size());
                    if (std::abs(lhs - avg) > 1e-14) {
                        d = "identity off by " + std::to_string(std::abs(lhs - avg)) +
                            " at level " + std::to_string(m);
                        return false;
                    }
                }
            }
        }
        return true;
    });

    std::printf("%d of 12 criteria passed\n", 12 - g_failures);
    return g_failures;
}
