#include "fracspec/json_io.hpp"

#include <charconv>
#include <cmath>

namespace fracspec {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

json ifs_to_json(const AffineIfs& ifs) {
    return json{{"R", ifs.scale}, {"B", ifs.digits}};
}

AffineIfs ifs_from_json(const json& j) {
    if (!j.is_object() || !j.contains("R") || !j.contains("B"))
        throw std::invalid_argument("ifs json: expected {\"R\": int, \"B\": [int...]}");
    if (!j["R"].is_number_integer())
        throw std::invalid_argument("ifs json: R must be an integer");
    if (!j["B"].is_array())
        throw std::invalid_argument("ifs json: B must be an array of integers");
    for (const auto& v : j["B"])
        if (!v.is_number_integer())
            throw std::invalid_argument("ifs json: B must be an array of integers");
    return AffineIfs(j["R"].get<Int>(), j["B"].get<std::vector<Int>>());
}

json complex_to_json(Complex z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

json bounded_to_json(const BoundedComplex& b) {
    return json{{"value", complex_to_json(b.value)}, {"bound", b.bound}};
}

json hadamard_report_to_json(const HadamardReport& rep) {
    json j{{"unitary", rep.unitary},
           {"exact", rep.exact},
           {"reason", rep.reason}};
    if (std::isnan(rep.max_deviation))
        j["max_deviation"] = nullptr;
    else
        j["max_deviation"] = rep.max_deviation;
    return j;
}

json dual_sets_to_json(const DualSets& d) {
    return json{{"L", d.L},
                {"L_prime", d.L_prime},
                {"certificate",
                 json{{"direct_sum", d.certificate.direct_sum},
                      {"hadamard_left", d.certificate.hadamard_left},
                      {"hadamard_right", d.certificate.hadamard_right},
                      {"gcd_bound_left", d.certificate.gcd_bound_left},
                      {"gcd_bound_right", d.certificate.gcd_bound_right},
                      {"gcd_divides_scale", d.certificate.gcd_divides_scale},
                      {"gcd_left", d.certificate.gcd_left},
                      {"gcd_right", d.certificate.gcd_right},
                      {"all", d.certificate.all()}}}};
}

static std::string rational_to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

json cycle_to_json(const ExtremeCycle& c) {
    json points = json::array();
    for (const Rational& p : c.points) points.push_back(rational_to_string(p));
    return json{{"points", points}, {"digits", c.digits}, {"trivial", c.trivial}};
}

json spectral_verdict_to_json(const SpectralVerdict& v) {
    json cyc = json::array();
    for (const ExtremeCycle& c : v.nontrivial_cycles) cyc.push_back(cycle_to_json(c));
    return json{{"hadamard", hadamard_report_to_json(v.hadamard)},
                {"nontrivial_cycles", cyc},
                {"spectral", v.spectral}};
}

const char* gram_class_name(GramClass c) {
    switch (c) {
        case GramClass::orthonormal: return "orthonormal";
        case GramClass::riesz: return "riesz";
        case GramClass::degenerate: return "degenerate";
    }
    return "degenerate";
}

json gram_report_to_json(const GramReport& rep, bool include_matrix) {
    json j{{"gamma", rep.gamma},
           {"dim", rep.dim},
           {"lambda_min", rep.lambda_min},
           {"lambda_max", rep.lambda_max},
           {"exact_identity", rep.exact_identity},
           {"classification", gram_class_name(rep.classification)}};
    if (include_matrix) {
        json rows = json::array();
        for (std::size_t r = 0; r < rep.dim; ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < rep.dim; ++c)
                row.push_back(complex_to_json(rep.matrix[r * rep.dim + c]));
            rows.push_back(std::move(row));
        }
        j["matrix"] = std::move(rows);
    }
    return j;
}

json classify_report_to_json(const ClassifyReport& rep) {
    return json{{"orthogonal", rep.orthogonal},
                {"orthogonal_exact", rep.orthogonal_exact},
                {"max_offdiagonal", rep.max_offdiagonal},
                {"onb_evidence", rep.onb_evidence},
                {"bessel_ceiling", rep.bessel_ceiling},
                {"riesz_lower", rep.riesz_lower},
                {"riesz_upper", rep.riesz_upper}};
}

json membership_to_json(const MembershipEvidence& ev) {
    return json{{"orthogonal_exact", ev.orthogonal_exact},
                {"within_bound", ev.within_bound},
                {"bound", ev.bound},
                {"sigma_min", ev.sigma_min},
                {"sigma_max", ev.sigma_max},
                {"onb_gap", ev.onb_gap}};
}

json factorization_to_json(const FactorizationCheck& chk) {
    return json{{"left", bounded_to_json(chk.left)},
                {"right", bounded_to_json(chk.right)},
                {"szego", complex_to_json(chk.szego)},
                {"residual", chk.residual},
                {"bound", chk.bound},
                {"within_bound", chk.within_bound()}};
}

json boundary_eval_to_json(const BoundaryEval& ev) {
    json j{{"value", complex_to_json(ev.value)}, {"kernel_bound", ev.kernel_bound}};
    if (ev.has_quad_error)
        j["quad_error"] = ev.quad_error;
    else
        j["quad_error"] = nullptr;
    return j;
}

json parseval_to_json(const ParsevalReport& rep) {
    return json{{"h2_norm", rep.h2_norm},
                {"l2mu_norm", rep.l2mu_norm},
                {"gap", rep.gap},
                {"h2_norm_sq", rep.h2_norm_sq},
                {"l2mu_norm_sq", rep.l2mu_norm_sq}};
}

} // namespace fracspec
