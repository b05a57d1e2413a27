// Command-line front end: every library operation as a subcommand with
// machine-readable (JSON/CSV) output.  Exit codes: 0 success/true verdict,
// 1 false verdict or failed certification, 2 invalid input.

#include "fracspec/json_io.hpp"
#include "fracspec/parallel.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

using namespace fracspec;

namespace {

// ---- input helpers ---------------------------------------------------------

std::vector<double> parse_grid(const std::string& s) {
    // Either a single value or "a:b:step" with endpoints inclusive within
    // half a step.
    auto first = s.find(':');
    if (first == std::string::npos) return {std::stod(s)};
    auto second = s.find(':', first + 1);
    if (second == std::string::npos || s.find(':', second + 1) != std::string::npos)
        throw std::invalid_argument("grid: expected a:b:step or a single value");
    double a = std::stod(s.substr(0, first));
    double b = std::stod(s.substr(first + 1, second - first - 1));
    double step = std::stod(s.substr(second + 1));
    if (!(step > 0.0)) throw std::invalid_argument("grid: step must be positive");
    if (b < a) throw std::invalid_argument("grid: need a <= b");
    std::vector<double> out;
    for (std::size_t k = 0;; ++k) {
        double x = a + double(k) * step;
        if (x > b + step / 2) break;
        out.push_back(x);
        if (out.size() > 10'000'000) throw std::invalid_argument("grid: too many points");
    }
    return out;
}

Complex parse_complex(const std::string& s) {
    // "re" or "re,im"
    auto comma = s.find(',');
    if (comma == std::string::npos) return Complex{std::stod(s), 0.0};
    return Complex{std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

GammaPolynomial parse_polynomial(const std::string& s) {
    // Comma-separated terms "gamma:re" or "gamma:re:im".
    std::vector<std::pair<Int, Complex>> terms;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::stringstream ts(tok);
        std::string g, re, im;
        if (!std::getline(ts, g, ':' ) || !std::getline(ts, re, ':'))
            throw std::invalid_argument("polynomial: expected gamma:re[:im] terms");
        std::getline(ts, im, ':');
        terms.push_back({Int(std::stoll(g)),
                         Complex{std::stod(re), im.empty() ? 0.0 : std::stod(im)}});
    }
    if (terms.empty()) throw std::invalid_argument("polynomial: no terms given");
    return GammaPolynomial::from_pairs(std::move(terms));
}

// Shared flags: an IFS given either as a JSON file or inline --R/--B.
struct IfsArgs {
    std::string path;
    Int R = 0;
    std::vector<Int> B;

    void attach(CLI::App* cmd) {
        cmd->add_option("--ifs", path, "IFS JSON file: {\"R\": int, \"B\": [int...]}");
        cmd->add_option("--R", R, "scale factor (inline alternative to --ifs)");
        cmd->add_option("--B", B, "base digit set, comma separated")->delimiter(',');
    }
    AffineIfs load() const {
        if (!path.empty()) {
            std::ifstream in(path);
            if (!in) throw std::invalid_argument("cannot open IFS file: " + path);
            json j = json::parse(in);
            return ifs_from_json(j);
        }
        if (R == 0) throw std::invalid_argument("need --ifs or --R/--B");
        return AffineIfs(R, B);
    }
};

struct Output {
    std::string path;
    void attach(CLI::App* cmd) {
        cmd->add_option("--out", path, "output file (default: stdout)");
    }
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (text.empty() || text.back() != '\n') std::cout << '\n';
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::invalid_argument("cannot open output file: " + path);
        out << text;
        if (text.empty() || text.back() != '\n') out << '\n';
    }
    void write_json(const json& j) const { write(j.dump(2)); }
};

std::vector<Int> gamma_from(Int R, const std::vector<Int>& L, int degree) {
    return gamma_set(SpectrumSpec(R, L, degree));
}

// ---- subcommand bodies -----------------------------------------------------

int run_muhat(const IfsArgs& ifs_args, const Output& out, std::optional<double> t,
              const std::string& grid_expr, double tol) {
    AffineIfs ifs = ifs_args.load();
    if (t.has_value() == !grid_expr.empty())
        throw std::invalid_argument("muhat: give exactly one of --t / --grid");
    if (t) {
        BoundedComplex f = fourier_transform(ifs, *t, tol);
        bool exact_zero = f.value == Complex{0.0, 0.0} && f.bound == 0.0;
        out.write_json(json{{"t", *t},
                            {"tol", tol},
                            {"value", complex_to_json(f.value)},
                            {"bound", f.bound},
                            {"exact_zero", exact_zero}});
        return 0;
    }
    std::string csv = "t,re,im,bound\n";
    for (double x : parse_grid(grid_expr)) {
        BoundedComplex f = fourier_transform(ifs, x, tol);
        csv += format_double(x) + "," + format_double(f.value.real()) + "," +
               format_double(f.value.imag()) + "," + format_double(f.bound) + "\n";
    }
    out.write(csv);
    return 0;
}

int run_hadamard(Int R, const std::vector<Int>& B, const std::vector<Int>& L,
                 double tol, const Output& out) {
    HadamardReport rep = is_hadamard(HadamardTriple(R, B, L), tol);
    json j = hadamard_report_to_json(rep);
    j["R"] = R;
    j["B"] = B;
    j["L"] = L;
    out.write_json(j);
    return rep.unitary ? 0 : 1;
}

int run_complementing(Int R, const std::vector<Int>& A, const std::vector<Int>& Ap,
                      const Output& out) {
    bool ok = is_complementing(make_digit_set(A, "A"), make_digit_set(Ap, "A'"), R);
    out.write_json(json{{"R", R}, {"A", A}, {"Ap", Ap}, {"complementing", ok}});
    return ok ? 0 : 1;
}

int run_dual(Int R, const std::vector<Int>& A, const std::vector<Int>& Ap,
             const Output& out) {
    DualSets d = dual_spectra_sets(make_digit_set(A, "A"), make_digit_set(Ap, "A'"), R);
    json j = dual_sets_to_json(d);
    j["R"] = R;
    j["A"] = A;
    j["Ap"] = Ap;
    out.write_json(j);
    return d.certificate.all() ? 0 : 1;
}

int run_cycles(Int R, const std::vector<Int>& B, const std::vector<Int>& L,
               const Output& out) {
    auto cycles = extreme_cycles(R, make_digit_set(B, "B"), make_digit_set(L, "L"));
    json arr = json::array();
    for (const ExtremeCycle& c : cycles) arr.push_back(cycle_to_json(c));
    out.write_json(json{{"R", R}, {"B", B}, {"L", L}, {"cycles", arr}});
    return 0;
}

int run_spectral(Int R, const std::vector<Int>& B, const std::vector<Int>& L,
                 const Output& out) {
    SpectralVerdict v = is_spectral_pair(R, make_digit_set(B, "B"), make_digit_set(L, "L"));
    json j = spectral_verdict_to_json(v);
    j["R"] = R;
    j["B"] = B;
    j["L"] = L;
    out.write_json(j);
    return v.spectral ? 0 : 1;
}

int run_spectrum(Int R, const std::vector<Int>& L, int degree, const Output& out) {
    SpectrumSpec spec(R, L, degree);
    std::vector<Int> g = gamma_set(spec);
    out.write_json(json{{"R", R},
                        {"L", L},
                        {"degree", degree},
                        {"count", g.size()},
                        {"max", g.back()},
                        {"self_affine", check_self_affine(spec)},
                        {"gamma", g}});
    return 0;
}

int run_sigma(const IfsArgs& ifs_args, const std::vector<Int>& L, int degree,
              const std::string& grid_expr, double tol, const Output& out) {
    AffineIfs ifs = ifs_args.load();
    std::vector<Int> g = gamma_from(ifs.scale, L, degree);
    std::vector<double> grid = parse_grid(grid_expr);
    std::string csv = "t,sigma_lower,err\n";
    for (double t : grid) {
        SigmaValue s = sigma_gamma(ifs, g, t, tol);
        csv += format_double(t) + "," + format_double(s.value) + "," +
               format_double(s.error) + "\n";
    }
    out.write(csv);
    return 0;
}

int run_gram(const IfsArgs& ifs_args, const std::vector<Int>& L, int degree,
             double tol, bool with_matrix, const Output& out) {
    AffineIfs ifs = ifs_args.load();
    std::vector<Int> g = gamma_from(ifs.scale, L, degree);
    GramReport rep = gram_matrix(ifs, g, tol);
    out.write_json(gram_report_to_json(rep, with_matrix));
    return 0;
}

int run_classify(const IfsArgs& ifs_args, const std::vector<Int>& L, int degree,
                 const std::string& grid_expr, double tol, double bound_A,
                 const Output& out) {
    AffineIfs ifs = ifs_args.load();
    std::vector<Int> g = gamma_from(ifs.scale, L, degree);
    std::vector<double> grid = parse_grid(grid_expr);
    ClassifyReport rep = classify_system(ifs, g, grid, tol);
    json j = classify_report_to_json(rep);
    if (bound_A > 0.0)
        j["membership"] = membership_to_json(
            measure_class_membership(ifs, g, bound_A, grid, tol));
    out.write_json(j);
    return 0;
}

int run_kernel(Int R, const std::vector<Int>& L, int degree, int depth,
               const std::string& z_expr, double x, double cap, const Output& out) {
    Complex z = parse_complex(z_expr);
    KernelQuery q = cap > 0.0 ? KernelQuery(z, x, cap) : KernelQuery(z, x);
    SpectrumSpec spec(R, L, degree);
    BoundedComplex series = gamma_kernel_series(spec, q);
    BoundedComplex product = gamma_kernel_product(R, spec.digits, q, depth);
    double diff = std::abs(series.value - product.value);
    bool agree = diff <= series.bound + product.bound;
    out.write_json(json{{"R", R},
                        {"L", L},
                        {"degree", degree},
                        {"depth", depth},
                        {"z", complex_to_json(z)},
                        {"x", x},
                        {"series", bounded_to_json(series)},
                        {"product", bounded_to_json(product)},
                        {"difference", diff},
                        {"within_bounds", agree}});
    return agree ? 0 : 1;
}

int run_factorize(Int R, const std::vector<Int>& A, const std::vector<Int>& Ap,
                  const std::string& z_expr, std::optional<double> x, int samples,
                  std::uint64_t seed, double cap, double target, const Output& out) {
    DigitSet a = make_digit_set(A, "A"), ap = make_digit_set(Ap, "A'");
    std::vector<KernelQuery> queries;
    if (!z_expr.empty() && x) {
        queries.push_back(KernelQuery(parse_complex(z_expr), *x, cap));
    } else if (samples > 0) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int i = 0; i < samples; ++i) {
            double r = cap * std::sqrt(unit(rng));
            double th = unit(rng);
            queries.push_back(KernelQuery(std::polar(r, two_pi * th), unit(rng), cap));
        }
    } else {
        throw std::invalid_argument("factorize: give --z and --x, or --samples");
    }

    std::string csv = "re_z,im_z,x,residual,bound\n";
    bool all_ok = true;
    double max_residual = 0.0, max_bound = 0.0;
    for (const KernelQuery& q : queries) {
        FactorizationCheck chk = factorization_residual(R, a, ap, q, target);
        all_ok = all_ok && chk.within_bound();
        max_residual = std::max(max_residual, chk.residual);
        max_bound = std::max(max_bound, chk.bound);
        csv += format_double(q.z.real()) + "," + format_double(q.z.imag()) + "," +
               format_double(q.x) + "," + format_double(chk.residual) + "," +
               format_double(chk.bound) + "\n";
    }
    csv += "# max_residual=" + format_double(max_residual) +
           " max_bound=" + format_double(max_bound) +
           " all_within_bound=" + (all_ok ? std::string("true") : std::string("false")) + "\n";
    out.write(csv);
    return all_ok ? 0 : 1;
}

int run_boundary(const IfsArgs& ifs_args, const std::vector<Int>& L, int degree,
                 const std::string& f_expr, const std::string& z_expr, int level,
                 bool estimate, const Output& out) {
    AffineIfs ifs = ifs_args.load();
    std::vector<Int> g = gamma_from(ifs.scale, L, degree);
    GammaPolynomial f = parse_polynomial(f_expr);
    Complex z = parse_complex(z_expr);
    BoundaryEval ev = boundary_evaluate(ifs, g, f, z, level, estimate);
    Complex direct = f.evaluate_disk(z);
    json j = boundary_eval_to_json(ev);
    j["direct"] = complex_to_json(direct);
    j["difference"] = std::abs(ev.value - direct);
    j["level"] = level;
    out.write_json(j);
    return 0;
}

int run_parseval(const IfsArgs& ifs_args, const std::string& f_expr, int level,
                 const Output& out) {
    AffineIfs ifs = ifs_args.load();
    GammaPolynomial f = parse_polynomial(f_expr);
    ParsevalReport rep = parseval_check(ifs, f, level);
    json j = parseval_to_json(rep);
    j["level"] = level;
    out.write_json(j);
    return 0;
}

int run_sweep(Int rmin, Int rmax, const Output& out) {
    if (rmin < 2 || rmax < rmin) throw std::invalid_argument("sweep: need 2 <= rmin <= rmax");
    json failures = json::array();
    std::size_t pair_count = 0;
    for (Int R = rmin; R <= rmax; ++R) {
        for (const auto& [A, Ap] : enumerate_complementing_pairs(R)) {
            if (A.size() == 1 || Ap.size() == 1) continue; // skip {0} sides
            ++pair_count;
            json entry{{"R", R}, {"A", A}, {"Ap", Ap}};
            try {
                DualSets d = dual_spectra_sets(A, Ap, R);
                bool cert = d.certificate.all();
                bool cycles_ok = true;
                for (const ExtremeCycle& c : extreme_cycles(R, A, d.L))
                    cycles_ok = cycles_ok && c.trivial;
                for (const ExtremeCycle& c : extreme_cycles(R, Ap, d.L_prime))
                    cycles_ok = cycles_ok && c.trivial;
                if (!cert || !cycles_ok) {
                    entry["certificate"] = dual_sets_to_json(d)["certificate"];
                    entry["only_trivial_cycles"] = cycles_ok;
                    failures.push_back(std::move(entry));
                }
            } catch (const std::exception& e) {
                entry["error"] = e.what();
                failures.push_back(std::move(entry));
            }
        }
    }
    bool ok = failures.empty();
    out.write_json(json{{"rmin", rmin},
                        {"rmax", rmax},
                        {"pairs", pair_count},
                        {"failures", failures},
                        {"ok", ok}});
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"affine fractal measures: transforms, spectra, kernels"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "RNG seed for sampled checks (default 0)");

    // Per-subcommand state.  Everything is parsed up front and dispatched in
    // one switch at the end through these captures.
    struct {
        IfsArgs ifs;
        Output out;
        std::optional<double> t;
        std::string grid;
        double tol = 1e-12;
    } muhat;
    auto* c_muhat = app.add_subcommand("muhat", "Fourier transform of the invariant measure");
    muhat.ifs.attach(c_muhat);
    muhat.out.attach(c_muhat);
    double muhat_t = 0.0;
    auto* muhat_t_opt = c_muhat->add_option("--t", muhat_t, "evaluation point");
    c_muhat->add_option("--grid", muhat.grid, "grid a:b:step for CSV output");
    c_muhat->add_option("--tol", muhat.tol, "certified tail tolerance");

    struct TripleArgs {
        Int R = 0;
        std::vector<Int> B, L;
        Output out;
        double tol = 1e-12;
        void attach(CLI::App* cmd, bool with_tol = false) {
            cmd->add_option("--R", R, "scale factor")->required();
            cmd->add_option("--B", B, "base digit set")->required()->delimiter(',');
            cmd->add_option("--L", L, "spectrum digit set")->required()->delimiter(',');
            if (with_tol) cmd->add_option("--tol", tol, "numeric deviation tolerance");
            out.attach(cmd);
        }
    } hadamard_args, cycles_args, spectral_args;
    auto* c_hadamard = app.add_subcommand("hadamard", "unitarity of the (R, B, L) matrix");
    hadamard_args.attach(c_hadamard, true);
    auto* c_cycles = app.add_subcommand("cycles", "extreme cycles of the dual maps");
    cycles_args.attach(c_cycles);
    auto* c_spectral = app.add_subcommand("spectral", "spectrality decision for (R, B, L)");
    spectral_args.attach(c_spectral);

    struct PairArgs {
        Int R = 0;
        std::vector<Int> A, Ap;
        Output out;
        void attach(CLI::App* cmd) {
            cmd->add_option("--R", R, "modulus")->required();
            cmd->add_option("--A", A, "first digit set")->required()->delimiter(',');
            cmd->add_option("--Ap", Ap, "second digit set")->required()->delimiter(',');
            out.attach(cmd);
        }
    } compl_args, dual_args;
    auto* c_compl = app.add_subcommand("complementing", "A (+) A' = {0..R-1} test");
    compl_args.attach(c_compl);
    auto* c_dual = app.add_subcommand("dual", "dual spectrum digit sets with certificate");
    dual_args.attach(c_dual);

    struct {
        Int R = 0;
        std::vector<Int> L;
        int degree = 0;
        Output out;
    } spectrum_args;
    auto* c_spectrum = app.add_subcommand("spectrum", "finite stage of Gamma(L)");
    c_spectrum->add_option("--R", spectrum_args.R, "scale factor")->required();
    c_spectrum->add_option("--L", spectrum_args.L, "spectrum digit set")->required()->delimiter(',');
    c_spectrum->add_option("--degree", spectrum_args.degree, "stage degree")->required();
    spectrum_args.out.attach(c_spectrum);

    struct {
        IfsArgs ifs;
        std::vector<Int> L;
        int degree = 0;
        std::string grid;
        double tol = 1e-14;
        Output out;
    } sigma_args;
    auto* c_sigma = app.add_subcommand("sigma", "frame symbol lower estimates on a grid");
    sigma_args.ifs.attach(c_sigma);
    c_sigma->add_option("--L", sigma_args.L, "spectrum digit set")->required()->delimiter(',');
    c_sigma->add_option("--degree", sigma_args.degree, "stage degree")->required();
    c_sigma->add_option("--grid", sigma_args.grid, "grid a:b:step or single t")->required();
    c_sigma->add_option("--tol", sigma_args.tol, "transform tolerance");
    sigma_args.out.attach(c_sigma);

    struct {
        IfsArgs ifs;
        std::vector<Int> L;
        int degree = 0;
        double tol = 1e-14;
        bool with_matrix = false;
        Output out;
    } gram_args;
    auto* c_gram = app.add_subcommand("gram", "Gram matrix diagnostics for a stage");
    gram_args.ifs.attach(c_gram);
    c_gram->add_option("--L", gram_args.L, "spectrum digit set")->required()->delimiter(',');
    c_gram->add_option("--degree", gram_args.degree, "stage degree")->required();
    c_gram->add_option("--tol", gram_args.tol, "transform tolerance");
    c_gram->add_flag("--matrix", gram_args.with_matrix, "include matrix entries in the report");
    gram_args.out.attach(c_gram);

    struct {
        IfsArgs ifs;
        std::vector<Int> L;
        int degree = 0;
        std::string grid;
        double tol = 1e-14;
        double bound = 0.0;
        Output out;
    } classify_args;
    auto* c_classify = app.add_subcommand("classify", "orthogonality/frame/Riesz diagnostics");
    classify_args.ifs.attach(c_classify);
    c_classify->add_option("--L", classify_args.L, "spectrum digit set")->required()->delimiter(',');
    c_classify->add_option("--degree", classify_args.degree, "stage degree")->required();
    c_classify->add_option("--grid", classify_args.grid, "grid a:b:step")->required();
    c_classify->add_option("--tol", classify_args.tol, "transform tolerance");
    c_classify->add_option("--bound", classify_args.bound, "membership bound A (optional)");
    classify_args.out.attach(c_classify);

    struct {
        Int R = 0;
        std::vector<Int> L;
        int degree = 0;
        int depth = 0;
        std::string z;
        double x = 0.0;
        double cap = 0.0;
        Output out;
    } kernel_args;
    auto* c_kernel = app.add_subcommand("kernel", "Gamma-Szego kernel, series vs product");
    c_kernel->add_option("--R", kernel_args.R, "scale factor")->required();
    c_kernel->add_option("--L", kernel_args.L, "spectrum digit set")->required()->delimiter(',');
    c_kernel->add_option("--degree", kernel_args.degree, "series stage degree")->required();
    c_kernel->add_option("--depth", kernel_args.depth, "product depth")->required();
    c_kernel->add_option("--z", kernel_args.z, "disk point re[,im]")->required();
    c_kernel->add_option("--x", kernel_args.x, "boundary coordinate")->required();
    c_kernel->add_option("--cap", kernel_args.cap, "radius cap (default |z|)");
    kernel_args.out.attach(c_kernel);

    struct {
        Int R = 0;
        std::vector<Int> A, Ap;
        std::string z;
        std::optional<double> x;
        int samples = 0;
        double cap = 0.9;
        double target = 1e-10;
        Output out;
    } fact_args;
    auto* c_fact = app.add_subcommand("factorize", "Szego kernel factorization residuals");
    c_fact->add_option("--R", fact_args.R, "modulus")->required();
    c_fact->add_option("--A", fact_args.A, "first digit set")->required()->delimiter(',');
    c_fact->add_option("--Ap", fact_args.Ap, "second digit set")->required()->delimiter(',');
    c_fact->add_option("--z", fact_args.z, "disk point re[,im]");
    double fact_x = 0.0;
    auto* fact_x_opt = c_fact->add_option("--x", fact_x, "boundary coordinate");
    c_fact->add_option("--samples", fact_args.samples, "number of random queries");
    c_fact->add_option("--cap", fact_args.cap, "radius cap for queries");
    c_fact->add_option("--target", fact_args.target, "per-series tail target");
    fact_args.out.attach(c_fact);

    struct {
        IfsArgs ifs;
        std::vector<Int> L;
        int degree = 0;
        std::string f;
        std::string z;
        int level = 8;
        bool estimate = false;
        Output out;
    } boundary_args;
    auto* c_boundary = app.add_subcommand("boundary", "reconstruct f(z) from boundary data");
    boundary_args.ifs.attach(c_boundary);
    c_boundary->add_option("--L", boundary_args.L, "spectrum digit set")->required()->delimiter(',');
    c_boundary->add_option("--degree", boundary_args.degree, "kernel stage degree")->required();
    c_boundary->add_option("--f", boundary_args.f, "polynomial terms gamma:re[:im],...")->required();
    c_boundary->add_option("--z", boundary_args.z, "disk point re[,im]")->required();
    c_boundary->add_option("--level", boundary_args.level, "quadrature level");
    c_boundary->add_flag("--estimate", boundary_args.estimate, "two-level quadrature error estimate");
    boundary_args.out.attach(c_boundary);

    struct {
        IfsArgs ifs;
        std::string f;
        int level = 8;
        Output out;
    } parseval_args;
    auto* c_parseval = app.add_subcommand("parseval", "H^2 vs L^2(mu) norm comparison");
    parseval_args.ifs.attach(c_parseval);
    c_parseval->add_option("--f", parseval_args.f, "polynomial terms gamma:re[:im],...")->required();
    c_parseval->add_option("--level", parseval_args.level, "quadrature level");
    parseval_args.out.attach(c_parseval);

    struct {
        Int rmin = 2;
        Int rmax = 16;
        Output out;
    } sweep_args;
    auto* c_sweep = app.add_subcommand("sweep", "certify all complementing pairs up to Rmax");
    c_sweep->add_option("--rmin", sweep_args.rmin, "smallest modulus");
    c_sweep->add_option("--rmax", sweep_args.rmax, "largest modulus");
    sweep_args.out.attach(c_sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_muhat->parsed()) {
            if (muhat_t_opt->count() > 0) muhat.t = muhat_t;
            return run_muhat(muhat.ifs, muhat.out, muhat.t, muhat.grid, muhat.tol);
        }
        if (c_hadamard->parsed())
            return run_hadamard(hadamard_args.R, hadamard_args.B, hadamard_args.L,
                                hadamard_args.tol, hadamard_args.out);
        if (c_compl->parsed())
            return run_complementing(compl_args.R, compl_args.A, compl_args.Ap, compl_args.out);
        if (c_dual->parsed())
            return run_dual(dual_args.R, dual_args.A, dual_args.Ap, dual_args.out);
        if (c_cycles->parsed())
            return run_cycles(cycles_args.R, cycles_args.B, cycles_args.L, cycles_args.out);
        if (c_spectral->parsed())
            return run_spectral(spectral_args.R, spectral_args.B, spectral_args.L,
                                spectral_args.out);
        if (c_spectrum->parsed())
            return run_spectrum(spectrum_args.R, spectrum_args.L, spectrum_args.degree,
                                spectrum_args.out);
        if (c_sigma->parsed())
            return run_sigma(sigma_args.ifs, sigma_args.L, sigma_args.degree,
                             sigma_args.grid, sigma_args.tol, sigma_args.out);
        if (c_gram->parsed())
            return run_gram(gram_args.ifs, gram_args.L, gram_args.degree, gram_args.tol,
                            gram_args.with_matrix, gram_args.out);
        if (c_classify->parsed())
            return run_classify(classify_args.ifs, classify_args.L, classify_args.degree,
                                classify_args.grid, classify_args.tol, classify_args.bound,
                                classify_args.out);
        if (c_kernel->parsed())
            return run_kernel(kernel_args.R, kernel_args.L, kernel_args.degree,
                              kernel_args.depth, kernel_args.z, kernel_args.x,
                              kernel_args.cap, kernel_args.out);
        if (c_fact->parsed()) {
            if (fact_x_opt->count() > 0) fact_args.x = fact_x;
            return run_factorize(fact_args.R, fact_args.A, fact_args.Ap, fact_args.z,
                                 fact_args.x, fact_args.samples, seed, fact_args.cap,
                                 fact_args.target, fact_args.out);
        }
        if (c_boundary->parsed())
            return run_boundary(boundary_args.ifs, boundary_args.L, boundary_args.degree,
                                boundary_args.f, boundary_args.z, boundary_args.level,
                                boundary_args.estimate, boundary_args.out);
        if (c_parseval->parsed())
            return run_parseval(parseval_args.ifs, parseval_args.f, parseval_args.level,
                                parseval_args.out);
        if (c_sweep->parsed())
            return run_sweep(sweep_args.rmin, sweep_args.rmax, sweep_args.out);
        std::cerr << "no subcommand given\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
