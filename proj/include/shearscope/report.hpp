#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "shearscope/conditions.hpp"
#include "shearscope/harness.hpp"
#include "shearscope/jacobian.hpp"
#include "shearscope/shear.hpp"

namespace shearscope {

enum class Verdict { shear, linear, jacobian_not_divergence_free, not_jacobian };

std::string to_string(Verdict v);

struct ClassificationReport {
    PolyMap input;
    std::pair<Rational, Rational> translation{0, 0};
    LinearPart linear_part = LinearPart::identity();
    Poly determinant;
    bool is_jacobian = false;
    bool singular_linear_part = false;

    /// Absent when the linear part is singular.
    std::optional<NormalizedMap> normalized;
    std::optional<Poly> divergence;
    bool is_divergence_free = false;

    /// Present once the map is known to be a divergence-free jacobian map.
    std::optional<DecompositionOutcome> decomposition;
    /// Inverse of the input map (shear and linear verdicts).
    std::optional<PolyMap> inverse;
    /// Normal form of the normalized map (shear and linear verdicts).
    std::optional<ShearNormalForm> normal_form;

    ConditionsReport conditions;
    Verdict verdict = Verdict::not_jacobian;
};

/// Runs the whole pipeline. Throws InternalVerificationFailed if any exact
/// check on the produced decomposition, inverse, or normal form fails.
ClassificationReport classify(const PolyMap& m, NormalizationSide side = NormalizationSide::right);

/// Deterministic document: keys sorted, rationals rendered as "num/den".
nlohmann::json to_json(const ClassificationReport& r);
std::string to_text(const ClassificationReport& r);

nlohmann::json to_json(const EnumerationResult& r);
nlohmann::json to_json(const EnumerationSpec& spec);

nlohmann::json to_json(const PolyMap& m);
nlohmann::json to_json(const ShearDecomposition& d);
nlohmann::json to_json(const ShearNormalForm& nf);
nlohmann::json to_json(const ConditionsReport& c);

/// Gap sets, parity flags and gap conditions of the components exactly as
/// given, with no linear part removed.
nlohmann::json component_conditions_json(const PolyMap& m);
std::string component_conditions_text(const PolyMap& m);

}  // namespace shearscope
