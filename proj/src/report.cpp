#include "shearscope/report.hpp"

#include <sstream>

#include "shearscope/expr_io.hpp"

namespace shearscope {

using nlohmann::json;

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::shear: return "shear";
        case Verdict::linear: return "linear";
        case Verdict::jacobian_not_divergence_free: return "jacobian_not_divergence_free";
        case Verdict::not_jacobian: return "not_jacobian";
    }
    return "?";
}

ClassificationReport classify(const PolyMap& m, NormalizationSide side) {
    ClassificationReport r;
    r.input = m;
    r.translation = {m.P.constant_term(), m.Q.constant_term()};
    r.linear_part = LinearPart::of(m);
    auto jac = is_jacobian_map(m);
    r.is_jacobian = jac.holds;
    r.determinant = std::move(jac.witness);

    const PolyMap affine = r.linear_part.as_map() + PolyMap{Poly::constant(r.translation.first),
                                                            Poly::constant(r.translation.second)};
    const PolyMap rest = m - affine;
    r.conditions = corollary1_conditions(rest.P, rest.Q);
    if (r.translation.first.is_zero() && r.translation.second.is_zero() && r.linear_part.is_identity()) {
        const ConditionsReport c2 = corollary2_conditions(rest.P, rest.Q);
        r.conditions.c2_i = c2.c2_i;
        r.conditions.c2_ii = c2.c2_ii;
    }

    if (r.linear_part.determinant().is_zero()) {
        r.singular_linear_part = true;
        r.verdict = Verdict::not_jacobian;
        return r;
    }

    r.normalized = normalize(m, side);
    const auto df = is_divergence_free_jacobian(*r.normalized);
    r.divergence = df.witness.divergence;
    r.is_divergence_free = df.witness.divergence.is_zero();

    if (!r.is_jacobian) {
        r.verdict = Verdict::not_jacobian;
        return r;
    }
    if (!df.holds) {
        r.verdict = Verdict::jacobian_not_divergence_free;
        return r;
    }

    r.decomposition = decompose_map(*r.normalized);
    if (!r.decomposition->succeeded())
        throw InternalVerificationFailed("divergence-free jacobian map did not decompose: " + r.decomposition->reason);
    if (reconstruct(r.decomposition->decomposition) != r.normalized->psi)
        throw InternalVerificationFailed("shear decomposition does not reproduce the normalized map");

    r.verdict = r.decomposition->status == DecompositionOutcome::Status::shear ? Verdict::shear : Verdict::linear;
    r.inverse = invert_normalized(*r.normalized, r.decomposition->decomposition);
    r.normal_form = conjugate_to_normal_form(r.decomposition->decomposition);
    return r;
}

namespace {

json rational(const Rational& q) { return q.str(); }

json optional_degree(const std::optional<std::uint32_t>& d) { return d ? json(*d) : json(nullptr); }

json optional_flag(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json linear_json(const LinearPart& l) {
    return {{"a", rational(l.a())},
            {"b", rational(l.b())},
            {"c", rational(l.c())},
            {"d", rational(l.d())},
            {"determinant", rational(l.determinant())}};
}

}  // namespace

json to_json(const PolyMap& m) { return {{"P", format_poly(m.P)}, {"Q", format_poly(m.Q)}}; }

json to_json(const ShearDecomposition& d) {
    if (d.is_trivial()) return {{"linear_map_no_direction", true}};
    json eps = json::array();
    for (unsigned i = 2; i <= d.degree(); ++i) eps.push_back({{"degree", i}, {"epsilon", rational(d.epsilon(i))}});
    return {{"alpha", d.direction()->alpha().get_str()},
            {"beta", d.direction()->beta().get_str()},
            {"degree", d.degree()},
            {"epsilons", eps}};
}

json to_json(const ShearNormalForm& nf) {
    const PolyMap T = nf.change_of_variables.as_map();
    json g = json::array();
    for (std::size_t k = 2; k < nf.g.size(); ++k) g.push_back({{"power", k}, {"coefficient", rational(nf.g[k])}});
    return {{"T", {{"u", format_poly(T.P)}, {"v", format_poly(T.Q)}}},
            {"g", format_univariate(nf.g_poly(), 'u')},
            {"g_coefficients", g},
            {"form", "(u, v) -> (u, v + g(u))"}};
}

json to_json(const ConditionsReport& c) {
    auto gaps = [](const GapSet& s) { return json(std::vector<std::uint32_t>(s.begin(), s.end())); };
    return {{"c1_i", optional_flag(c.c1_i)},
            {"c1_ii", c.c1_ii},
            {"c1_iii", c.c1_iii},
            {"c1_iv", c.c1_iv},
            {"c2_i", optional_flag(c.c2_i)},
            {"c2_ii", optional_flag(c.c2_ii)},
            {"degrees", {{"d_p", optional_degree(c.degree_p)},
                         {"o_p", optional_degree(c.order_p)},
                         {"d_q", optional_degree(c.degree_q)},
                         {"o_q", optional_degree(c.order_q)}}},
            {"gap_sets", {{"p", gaps(c.gaps_p)}, {"q", gaps(c.gaps_q)}}}};
}

json component_conditions_json(const PolyMap& m) {
    auto component = [](const Poly& p) {
        const ParityClass c = parity_class(p);
        const GapSet g = gap_set(p);
        return json{{"gap_set", std::vector<std::uint32_t>(g.begin(), g.end())},
                    {"parity", {{"even", c.even},
                                {"odd", c.odd},
                                {"x_even", c.x_even},
                                {"x_odd", c.x_odd},
                                {"y_even", c.y_even},
                                {"y_odd", c.y_odd}}}};
    };
    return {{"P", component(m.P)},
            {"Q", component(m.Q)},
            {"gap_condition_PQ", gap_condition(m.P, m.Q)},
            {"gap_condition_QP", gap_condition(m.Q, m.P)},
            {"symmetric_gap_condition", symmetric_gap_condition(m.P, m.Q)}};
}

std::string component_conditions_text(const PolyMap& m) {
    auto gaps = [](const Poly& p) {
        std::string out = "{";
        for (const auto g : gap_set(p)) out += (out.size() > 1 ? ", " : "") + std::to_string(g);
        return out + "}";
    };
    std::ostringstream os;
    os << "G(P):        " << gaps(m.P) << "\n";
    os << "G(Q):        " << gaps(m.Q) << "\n";
    os << "gap (P, Q):  " << (gap_condition(m.P, m.Q) ? "yes" : "no") << "\n";
    os << "gap (Q, P):  " << (gap_condition(m.Q, m.P) ? "yes" : "no") << "\n";
    return os.str();
}

json to_json(const ClassificationReport& r) {
    json out;
    out["input"] = to_json(r.input);
    out["translation"] = {rational(r.translation.first), rational(r.translation.second)};
    out["linear_part"] = linear_json(r.linear_part);
    out["determinant"] = {{"polynomial", format_poly(r.determinant)}, {"is_jacobian", r.is_jacobian}};
    out["normalized"] = r.normalized ? to_json(r.normalized->psi) : json(nullptr);
    out["divergence"] = {{"polynomial", r.divergence ? json(format_poly(*r.divergence)) : json(nullptr)},
                         {"is_divergence_free", r.is_divergence_free}};
    out["verdict"] = to_string(r.verdict);
    out["shear"] = r.decomposition ? to_json(r.decomposition->decomposition) : json(nullptr);
    out["inverse"] = r.inverse ? to_json(*r.inverse) : json(nullptr);
    out["normal_form"] = r.normal_form ? to_json(*r.normal_form) : json(nullptr);
    out["conditions"] = to_json(r.conditions);
    return out;
}

std::string to_text(const ClassificationReport& r) {
    std::ostringstream os;
    os << "map:         (" << format_poly(r.input.P) << ", " << format_poly(r.input.Q) << ")\n";
    os << "translation: (" << r.translation.first << ", " << r.translation.second << ")\n";
    const LinearPart& l = r.linear_part;
    os << "linear part: [[" << l.a() << ", " << l.b() << "], [" << l.c() << ", " << l.d() << "]], det "
       << l.determinant() << "\n";
    os << "det J:       " << format_poly(r.determinant) << (r.is_jacobian ? "  (jacobian)" : "  (not jacobian)")
       << "\n";
    if (r.normalized)
        os << "normalized:  (" << format_poly(r.normalized->psi.P) << ", " << format_poly(r.normalized->psi.Q)
           << ")\n";
    if (r.divergence) os << "divergence:  " << format_poly(*r.divergence) << "\n";
    os << "verdict:     " << to_string(r.verdict) << "\n";
    if (r.decomposition && !r.decomposition->decomposition.is_trivial()) {
        const auto& d = r.decomposition->decomposition;
        os << "direction:   alpha = " << d.direction()->alpha().get_str() << ", beta = " << d.direction()->beta().get_str()
           << "\n";
        for (unsigned i = 2; i <= d.degree(); ++i) os << "  eps_" << i << " = " << d.epsilon(i) << "\n";
    }
    if (r.inverse) os << "inverse:     (" << format_poly(r.inverse->P) << ", " << format_poly(r.inverse->Q) << ")\n";
    if (r.normal_form) {
        const PolyMap T = r.normal_form->change_of_variables.as_map();
        os << "normal form: T = (" << format_poly(T.P) << ", " << format_poly(T.Q) << "), (u, v) -> (u, v + g(u)), g(u) = "
           << format_univariate(r.normal_form->g_poly(), 'u') << "\n";
    }
    const auto& c = r.conditions;
    auto flag = [](const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "n/a"; };
    os << "conditions:  c1_i " << flag(c.c1_i) << ", c1_ii " << flag(c.c1_ii) << ", c1_iii " << flag(c.c1_iii)
       << ", c1_iv " << flag(c.c1_iv) << ", c2_i " << flag(c.c2_i) << ", c2_ii " << flag(c.c2_ii) << "\n";
    return os.str();
}

json to_json(const EnumerationSpec& spec) {
    json coeffs = json::array();
    for (const auto& c : spec.coefficient_set) coeffs.push_back(rational(c));
    json out = {{"max_degree", spec.max_degree},
                {"coefficient_set", coeffs},
                {"mode", spec.mode == EnumerationMode::exhaustive ? "exhaustive" : "random"}};
    if (spec.mode == EnumerationMode::random) {
        out["count"] = spec.count;
        out["seed"] = spec.seed;
    }
    return out;
}

json to_json(const EnumerationResult& r) {
    json ce = json::array();
    for (const auto& m : r.counterexamples) ce.push_back(to_json(m));
    return {{"total_candidates", r.total_candidates},
            {"divergence_free_count", r.divergence_free_count},
            {"jacobian_count", r.jacobian_count},
            {"divfree_jacobian_count", r.divfree_jacobian_count},
            {"shear_decomposed_count", r.shear_decomposed_count},
            {"out_of_set_count", r.out_of_set_count},
            {"in_set", {{"divergence_free_count", r.in_set.divergence_free},
                        {"jacobian_count", r.in_set.jacobian},
                        {"divfree_jacobian_count", r.in_set.divfree_jacobian},
                        {"shear_decomposed_count", r.in_set.shear_decomposed}}},
            {"counterexamples", ce},
            {"confirmed", r.confirmed()}};
}

}  // namespace shearscope
