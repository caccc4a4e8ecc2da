#pragma once

#include <json.hpp>

#include "vanish/bounds.hpp"
#include "vanish/witness.hpp"

namespace vanish {

using json = nlohmann::json;

inline json poly_to_json(const Poly& p) {
    json a = json::array();
    for (long j = 0; j <= p.degree(); ++j) a.push_back(rational_str(p.coeff(static_cast<std::size_t>(j))));
    return a;
}

inline Poly poly_from_json(const json& a) {
    if (!a.is_array()) throw std::invalid_argument("poly: expected JSON array of rational strings");
    std::vector<Rational> c;
    c.reserve(a.size());
    for (const auto& e : a) {
        if (!e.is_string()) throw std::invalid_argument("poly: coefficients must be num/den strings");
        c.push_back(parse_rational(e.get<std::string>()));
    }
    return Poly(std::move(c));
}

inline json cmp_to_json(Cmp c) {
    if (c == Cmp::Undecided) return "undecided";
    return c == Cmp::True;
}

inline json claim_to_json(const Claim& c) {
    using K = Claim::Kind;
    json j;
    switch (c.kind) {
        case K::DegreeEq: j = {{"kind", "degree_eq"}, {"value", c.n_value}}; break;
        case K::DegreeLe: j = {{"kind", "degree_le"}, {"value", c.n_value}}; break;
        case K::ConstantCoeffEq: j = {{"kind", "constant_coeff_eq"}, {"value", rational_str(c.q_value)}}; break;
        case K::MultiplicityGe: j = {{"kind", "multiplicity_ge"}, {"value", c.n_value}}; break;
        case K::TailNormLe:
            j = {{"kind", "tail_norm_le"}, {"p", c.p.str()}, {"budget", rational_str(c.q_value)}, {"squared", c.squared}};
            break;
        case K::TailNormScaledLe:
            j = {{"kind", "tail_norm_le_scaled"}, {"p", c.p.str()}, {"base", rational_str(c.q_value)}, {"M", c.m_value}};
            break;
        case K::CoeffRatioGe:
            j = {{"kind", "coeff_ratio_ge"}, {"p", c.p.str()}, {"L", rational_str(c.q_value)}};
            break;
        case K::AbsValuesLe:
            j = {{"kind", "abs_values_le"}, {"from", c.n_from}, {"to", c.n_to}, {"bound", rational_str(c.q_value)}};
            break;
        case K::ValuesZero: j = {{"kind", "values_zero"}, {"from", c.n_from}, {"to", c.n_to}}; break;
        case K::ValueAt0Gt: j = {{"kind", "value_at0_gt"}, {"bound", rational_str(c.q_value)}}; break;
        case K::HmCoeffBounds: j = {{"kind", "hm_coeff_bounds"}, {"m", c.n_value}}; break;
    }
    return j;
}

inline Claim claim_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "degree_eq") return Claim::degree_eq(j.at("value").get<long>());
    if (kind == "degree_le") return Claim::degree_le(j.at("value").get<long>());
    if (kind == "constant_coeff_eq")
        return Claim::constant_coeff_eq(parse_rational(j.at("value").get<std::string>()));
    if (kind == "multiplicity_ge") return Claim::multiplicity_ge(j.at("value").get<long>());
    if (kind == "tail_norm_le")
        return Claim::tail_norm_le(NormExponent::parse(j.at("p").get<std::string>()),
                                   parse_rational(j.at("budget").get<std::string>()),
                                   j.at("squared").get<bool>());
    if (kind == "tail_norm_le_scaled")
        return Claim::tail_norm_le_scaled(NormExponent::parse(j.at("p").get<std::string>()),
                                          parse_rational(j.at("base").get<std::string>()),
                                          j.at("M").get<long>());
    if (kind == "coeff_ratio_ge")
        return Claim::coeff_ratio_ge(NormExponent::parse(j.at("p").get<std::string>()),
                                     parse_rational(j.at("L").get<std::string>()));
    if (kind == "abs_values_le")
        return Claim::abs_values_le(j.at("from").get<long>(), j.at("to").get<long>(),
                                    parse_rational(j.at("bound").get<std::string>()));
    if (kind == "values_zero") return Claim::values_zero(j.at("from").get<long>(), j.at("to").get<long>());
    if (kind == "value_at0_gt") return Claim::value_at0_gt(parse_rational(j.at("bound").get<std::string>()));
    if (kind == "hm_coeff_bounds") return Claim::hm_coeff_bounds(j.at("m").get<long>());
    throw std::invalid_argument("unknown claim kind '" + kind + "'");
}

inline json witness_to_json(const Witness& w) {
    json j;
    j["construction"] = w.construction;
    j["params"] = w.params;
    j["coeffs"] = poly_to_json(w.poly);
    j["claims"] = json::array();
    for (const auto& c : w.claims) j["claims"].push_back(claim_to_json(c));
    j["verified"] = json::array();
    for (auto v : w.verified) j["verified"].push_back(cmp_to_json(v));
    j["observed_multiplicity"] = w.observed_multiplicity;
    if (w.vacuous) j["vacuous"] = true;
    return j;
}

/// Reads construction, params, coefficients and claims. Stored verification
/// flags are deliberately ignored; re-certify after loading.
inline Witness witness_from_json(const json& j) {
    Witness w;
    w.construction = j.value("construction", std::string("unknown"));
    if (j.contains("params"))
        for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
            w.params[it.key()] = it.value().get<std::string>();
    w.poly = poly_from_json(j.at("coeffs"));
    if (j.contains("claims"))
        for (const auto& cj : j.at("claims")) w.claims.push_back(claim_from_json(cj));
    w.vacuous = j.value("vacuous", false);
    return w;
}

inline json norm_value_to_json(const NormValue& v) {
    json j;
    switch (v.kind) {
        case NormValue::Kind::Exact:
            j["value"] = rational_str(v.value);
            break;
        case NormValue::Kind::ExactSquared:
            j["value"] = rational_str(v.value);
            j["squared"] = true;
            break;
        case NormValue::Kind::Enclosure:
            j["value_lo"] = v.enc.lo_d();
            j["value_hi"] = v.enc.hi_d();
            j["enclosure_width"] = v.enc.hi_d() - v.enc.lo_d();
            break;
    }
    return j;
}

inline const char* solver_str(OracleResult::Solver s) {
    switch (s) {
        case OracleResult::Solver::ExactLP: return "ExactLP";
        case OracleResult::Solver::ExactLS: return "ExactLS";
        case OracleResult::Solver::FloatIRLS: return "FloatIRLS";
    }
    return "?";
}

inline json oracle_result_to_json(const OracleResult& r) {
    json j = norm_value_to_json(r.value);
    j["kind"] = r.kind == OracleResult::Kind::Tau ? "tau" : "rho";
    j["n"] = r.n;
    j["k"] = r.k;
    j["exponent"] = r.exponent.str();
    j["argmin"] = poly_to_json(r.argmin);
    j["solver"] = solver_str(r.solver);
    if (r.solver == OracleResult::Solver::FloatIRLS) j["float_residual"] = r.float_residual;
    j["assumptions"] = json::array({"real-coefficient optimum"});
    return j;
}

inline json extremal_to_json(const ExtremalResult& r) {
    json j;
    j["kind"] = r.kind == ExtremalResult::Kind::Kappa ? "kappa" : "mu";
    j["n"] = r.n;
    j["L"] = rational_str(r.L);
    j["exponent"] = r.exponent.str();
    if (r.undecided) j["undecided"] = true;
    else j["value"] = r.value;
    j["witness"] = poly_to_json(r.witness);
    j["assumptions"] = json::array({"real-coefficient optimum"});
    return j;
}

inline json grid_summary_to_json(const GridSummary& s) {
    json j;
    j["cells"] = s.cells;
    j["ok"] = s.ok;
    j["envelope_violations"] = s.envelope_violations;
    j["sandwich_violations"] = s.sandwich_violations;
    j["undecided"] = s.undecided;
    j["asprinted_lower_violations"] = s.asprinted_lower_violations;
    j["asprinted_upper_violations"] = s.asprinted_upper_violations;
    j["assumptions"] = json::array({"real-coefficient optimum"});
    return j;
}

}  // namespace vanish
