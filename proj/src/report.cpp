#include "orbint/report.hpp"

#include "orbint/checks.hpp"
#include "orbint/evaluator.hpp"

#include <stdexcept>

namespace orbint {

using nlohmann::json;

Curve curve_from_json(const json& j) {
    if (!j.is_object())
        throw std::invalid_argument("curve file must be a JSON object");
    if (!j.contains("q") || !j["q"].is_number_integer())
        throw std::invalid_argument("curve field \"q\" must be an integer");
    if (!j.contains("genus") || !j["genus"].is_number_integer())
        throw std::invalid_argument("curve field \"genus\" must be an integer");
    long q = j["q"].get<long>();
    int genus = j["genus"].get<int>();
    if (j.contains("counts") && j.contains("numerator"))
        throw std::invalid_argument("give either \"counts\" or \"numerator\", not both");
    if (j.contains("numerator")) {
        if (!j["numerator"].is_array())
            throw std::invalid_argument("curve field \"numerator\" must be an array");
        std::vector<Rat> coeffs;
        for (const auto& x : j["numerator"]) {
            if (!x.is_string())
                throw std::invalid_argument("numerator entries must be \"p/q\" strings");
            coeffs.push_back(rat_parse(x.get<std::string>()));
        }
        return curve_from_numerator(q, genus, Poly<Rat>(std::move(coeffs)));
    }
    std::vector<long> counts;
    if (j.contains("counts")) {
        if (!j["counts"].is_array())
            throw std::invalid_argument("curve field \"counts\" must be an array");
        for (const auto& x : j["counts"]) {
            if (!x.is_number_integer())
                throw std::invalid_argument("counts entries must be integers");
            counts.push_back(x.get<long>());
        }
    }
    return curve_from_counts(q, genus, counts);
}

Curve curve_from_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw std::invalid_argument("curve file is not valid JSON");
    return curve_from_json(j);
}

json value_to_json(const RadExt& v, long q) {
    if (v.is_rational())
        return rat_str(v.rational_part());
    Int sq = squarefree_decompose(Int(q)).second;
    for (const auto& [m, c] : v.terms())
        if (m != 1 && m != sq)
            throw std::domain_error("value outside Q + Q sqrt(q): " + v.str());
    return json{{"rational", rat_str(v.rational_part())}, {"sqrtq_coeff", rat_str(v.coeff(sq))}};
}

json integral_report(const Curve& c, long degD, int n, int d, long e, unsigned salt) {
    IntegralQuery query{c, degD, n, d, e};
    GenericDirection dir = default_direction(n / d, salt);
    IntegralResult res = integral_value(query, dir);
    json out;
    out["value"] = value_to_json(res.value, c.q);
    out["psi"] = rat_str(res.psi);
    out["volume_factor"] = rat_str(res.volume_factor);
    out["q_power"] = value_to_json(res.q_power, c.q);
    out["direction"] = res.direction_used.b;
    return out;
}

json checks_report(int nmax, unsigned seed) {
    json suites = json::array();
    bool ok = true;
    for (const CheckResult& r : run_identity_checks(nmax, seed)) {
        suites.push_back({{"name", r.name},
                          {"passed", r.passed},
                          {"detail", r.detail},
                          {"elapsed_ms", r.elapsed_ms}});
        ok = ok && r.passed;
    }
    return json{{"passed", ok}, {"suites", suites}};
}

}  // namespace orbint
