#include "qsdd/xpoly.hpp"

#include <json.hpp>

namespace qsdd {

XPoly parse_poly(const std::string& text) {
    return PolyParser<Int>(text, 'x', /*rational=*/false).parse();
}

std::string format_poly(const XPoly& f) {
    return format_poly(f, 'x');
}

std::string xpoly_to_json(const XPoly& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [c, a] : f.terms()) {
        terms.push_back({{"coeff", a.str()}, {"code", c}});
    }
    return nlohmann::json{{"terms", terms}}.dump();
}

XPoly xpoly_from_json(const std::string& json) {
    auto j = nlohmann::json::parse(json);
    XPoly f;
    for (auto& t : j.at("terms")) {
        Code c = t.at("code").get<std::vector<int>>();
        for (int e : c)
            if (e < 0) throw std::invalid_argument("negative exponent in code");
        f.add_term(std::move(c), Int(t.at("coeff").get<std::string>()));
    }
    return f;
}

} // namespace qsdd
