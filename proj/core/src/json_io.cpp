#include "esing/json_io.hpp"

#include <json.hpp>

#include "esing/version.hpp"

namespace esing::jsonio {

namespace {

using nlohmann::json;

std::string dump(const json& j, bool pretty) {
    return pretty ? j.dump(2) : j.dump();
}

json jet_json(const PolyJet& jet) {
    // Terms ordered by total degree, then x1 exponent.
    std::vector<PolyJet::Key> keys;
    keys.reserve(jet.terms().size());
    for (const auto& [key, c] : jet.terms()) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), [](const PolyJet::Key& a, const PolyJet::Key& b) {
        const unsigned da = a.first + a.second;
        const unsigned db = b.first + b.second;
        if (da != db) return da < db;
        return a.first < b.first;
    });
    json terms = json::array();
    for (const auto& key : keys) {
        terms.push_back({{"c", jet.coeff(key.first, key.second).str()},
                         {"i", key.first},
                         {"j", key.second}});
    }
    return {{"order", jet.order()}, {"terms", std::move(terms)}};
}

PolyJet jet_from_json(const json& j) {
    PolyJet jet(j.at("order").get<unsigned>());
    for (const auto& term : j.at("terms")) {
        jet.set_coeff(term.at("i").get<unsigned>(), term.at("j").get<unsigned>(),
                      Rational::from_string(term.at("c").get<std::string>()));
    }
    return jet;
}

json series_json(const PowerSeries1& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
    return {{"coeffs", std::move(coeffs)}, {"order", s.order()}};
}

json step_json(const TransformStep& step) {
    json params = json::object();
    for (const auto& [name, value] : step.params) params[name] = value.str();
    return {{"map", {{"comp1", jet_json(step.map.comp1())}, {"comp2", jet_json(step.map.comp2())}}},
            {"name", step_name(step.kind)},
            {"params", std::move(params)}};
}

TransformStep step_from_json(const json& j) {
    PolyMap2 map(jet_from_json(j.at("map").at("comp1")), jet_from_json(j.at("map").at("comp2")));
    std::vector<std::pair<std::string, Rational>> params;
    for (const auto& [name, value] : j.at("params").items()) {
        params.emplace_back(name, Rational::from_string(value.get<std::string>()));
    }
    return {step_kind_from_name(j.at("name").get<std::string>()), std::move(map),
            std::move(params)};
}

json certificate_json(const Certificate& cert) {
    json c = json::object();
    if (cert.m_s1_p3) c["m_s1_p3"] = *cert.m_s1_p3;
    if (cert.cube_root_form) {
        c["cube_root_form"] = {{"x1", cert.cube_root_form->a().str()},
                               {"x2", cert.cube_root_form->b().str()}};
    }
    if (cert.res_p3_p4) c["res_p3_p4"] = cert.res_p3_p4->str();
    if (cert.common_mult_infinite) {
        c["common_mult_in_p4"] = "infinite";
    } else if (cert.common_mult_in_p4) {
        c["common_mult_in_p4"] = *cert.common_mult_in_p4;
    }
    if (cert.res_p3_p5) c["res_p3_p5"] = cert.res_p3_p5->str();
    json chain = json::array();
    for (const auto& step : cert.transform_chain) chain.push_back(step_json(step));
    c["transform_chain"] = std::move(chain);
    if (cert.normalized_jet) c["normalized_jet"] = jet_json(*cert.normalized_jet);
    return c;
}

void put_verdict(json& doc, const Classification& cls) {
    doc["verdict"] = verdict_name(cls.verdict);
    if (cls.verdict == Verdict::E6) doc["sign"] = cls.sign > 0 ? "+" : "-";
    if (!cls.reason.empty()) doc["reason"] = cls.reason;
}

}  // namespace

std::string classify_document(const Classification& cls, const Certificate& cert,
                              const std::vector<std::string>* explain, bool pretty) {
    json doc;
    doc["certificate"] = certificate_json(cert);
    put_verdict(doc, cls);
    if (explain) {
        doc["explain"] = *explain;
    }
    doc["version"] = kVersion;
    return dump(doc, pretty);
}

std::string reduce_document(const Classification& cls, const Certificate& cert, bool replay_ok,
                            bool pretty) {
    json doc;
    doc["certificate"] = certificate_json(cert);
    put_verdict(doc, cls);
    doc["replay_ok"] = replay_ok;
    doc["version"] = kVersion;
    return dump(doc, pretty);
}

std::string decompose_document(const Decomposition& dec, unsigned working_order, bool pretty) {
    json doc;
    doc["psi"] = series_json(dec.psi);
    doc["b0"] = series_json(dec.b0);
    doc["b1"] = series_json(dec.b1);
    doc["B"] = jet_json(dec.B);
    doc["B_at_origin"] = dec.B_at_origin.str();
    if (dec.ord_b0) {
        doc["ord_b0"] = *dec.ord_b0;
    } else {
        doc["ord_b0"] = "infinite";
    }
    if (dec.ord_b1) {
        doc["ord_b1"] = *dec.ord_b1;
    } else {
        doc["ord_b1"] = "infinite";
    }
    auto mpsi = vanishing_order(dec.psi);
    if (mpsi) {
        doc["ord_psi"] = *mpsi;
    } else {
        doc["ord_psi"] = ">= " + std::to_string(working_order + 1);
    }
    doc["working_order"] = working_order;
    doc["version"] = kVersion;
    return dump(doc, pretty);
}

std::string verify_document(const VerifyReport& report, bool pretty) {
    json doc;
    doc["verdict"] = verdict_name(report.verdict);
    doc["samples"] = report.samples;
    doc["radius"] = report.radius;
    doc["seed"] = report.seed;
    doc["series_order"] = report.series_order;
    doc["max_residual"] = report.max_residual;
    doc["max_residual_half"] = report.max_residual_half;
    doc["residual_order_estimate"] = report.residual_order_estimate;
    doc["skipped_samples"] = report.skipped_samples;
    doc["jacobian_numeric"] = report.jacobian_numeric;
    if (report.jacobian_closed_form) {
        doc["jacobian_closed_form"] = *report.jacobian_closed_form;
    }
    doc["jacobian_ok"] = report.jacobian_ok;
    doc["pass"] = report.pass;
    doc["version"] = kVersion;
    return dump(doc, pretty);
}

std::string error_document(const std::string& code, const std::string& message, int line,
                           int column, bool pretty) {
    json err;
    err["code"] = code;
    err["message"] = message;
    if (line > 0) {
        err["line"] = line;
        err["column"] = column;
    }
    json doc;
    doc["error"] = std::move(err);
    doc["version"] = kVersion;
    return dump(doc, pretty);
}

std::vector<TransformStep> parse_transform_chain(const std::string& document) {
    const json doc = json::parse(document);
    std::vector<TransformStep> steps;
    for (const auto& step : doc.at("certificate").at("transform_chain")) {
        steps.push_back(step_from_json(step));
    }
    return steps;
}

PolyJet parse_normalized_jet(const std::string& document) {
    const json doc = json::parse(document);
    return jet_from_json(doc.at("certificate").at("normalized_jet"));
}

}  // namespace esing::jsonio
