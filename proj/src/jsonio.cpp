#include "focklab/jsonio.hpp"

#include <stdexcept>

namespace focklab {

json to_json(const ChargedPartition& cp) {
    return json{{"lambda", cp.lambda.parts()}, {"charge", cp.charge}};
}

ChargedPartition charged_from_json(const json& j) {
    if (!j.is_object() || !j.contains("lambda") || !j.contains("charge"))
        throw std::invalid_argument("charged partition needs \"lambda\" and \"charge\"");
    return {Partition(j.at("lambda").get<std::vector<int>>()), j.at("charge").get<int>()};
}

json to_json(const MayaSpec& m) {
    std::vector<int> blacks;
    for (const auto& b : m.blacks) blacks.push_back(b.twice());
    return json{{"window_lo", m.window_lo.twice()}, {"blacks", blacks}};
}

MayaSpec maya_from_json(const json& j) {
    if (!j.is_object() || !j.contains("window_lo") || !j.contains("blacks"))
        throw std::invalid_argument("maya needs \"window_lo\" and \"blacks\"");
    MayaSpec m;
    m.window_lo = HalfInt::from_twice(j.at("window_lo").get<int>());
    for (int t : j.at("blacks").get<std::vector<int>>()) m.blacks.push_back(HalfInt::from_twice(t));
    return m;
}

json to_json(const RVec& v) {
    json out = json::array();
    for (const auto& [cp, c] : canonical_terms(v)) out.push_back({{"state", to_json(cp)}, {"coeff", c.fraction_str()}});
    return out;
}

json to_json(const QVec& v) {
    json out = json::array();
    for (const auto& [cp, c] : canonical_terms(v)) {
        json coeff = json::object();
        for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it)
            coeff["q^" + std::to_string(it->first)] = it->second.fraction_str();
        out.push_back({{"state", to_json(cp)}, {"coeff", coeff}});
    }
    return out;
}

RVec rvec_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("vector must be a JSON array");
    RVec v;
    for (const auto& term : j) v.add(charged_from_json(term.at("state")), Rational::parse(term.at("coeff").get<std::string>()));
    return v;
}

json to_json(const MultiPoly& p) {
    json out = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        out.push_back({{"exponents", it->first}, {"coeff", it->second.fraction_str()}});
    return out;
}

}  // namespace focklab
