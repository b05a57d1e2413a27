#pragma once

#include "fracspec/analysis.hpp"
#include "fracspec/boundary.hpp"
#include "fracspec/complement.hpp"
#include "fracspec/cycles.hpp"
#include "fracspec/hadamard.hpp"
#include "fracspec/ifs.hpp"
#include "fracspec/kernel.hpp"

#include <json.hpp>

namespace fracspec {

using nlohmann::json;

// IFS wire format: {"R": <int>, "B": [<int>...]}.
json ifs_to_json(const AffineIfs& ifs);
AffineIfs ifs_from_json(const json& j);

json complex_to_json(Complex z);
json bounded_to_json(const BoundedComplex& b);
json hadamard_report_to_json(const HadamardReport& rep);
json dual_sets_to_json(const DualSets& d);
json cycle_to_json(const ExtremeCycle& c);
json spectral_verdict_to_json(const SpectralVerdict& v);
json gram_report_to_json(const GramReport& rep, bool include_matrix);
json classify_report_to_json(const ClassifyReport& rep);
json membership_to_json(const MembershipEvidence& ev);
json factorization_to_json(const FactorizationCheck& chk);
json boundary_eval_to_json(const BoundaryEval& ev);
json parseval_to_json(const ParsevalReport& rep);

const char* gram_class_name(GramClass c);

// Shortest round-trip decimal for a double (what the CSV writers use).
std::string format_double(double v);

} // namespace fracspec
