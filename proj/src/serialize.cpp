#include "qreal/serialize.hpp"

#include <fstream>

#include "qreal/errors.hpp"

namespace qreal {

nlohmann::json series_to_json(const TruncatedLaurentSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int e = s.valuation(); e < s.order(); ++e) coeffs.push_back(to_string(s.coefficient(e)));
    return {{"valuation", s.valuation()}, {"order", s.order()}, {"coeffs", coeffs}};
}

TruncatedLaurentSeries series_from_json(const nlohmann::json& j) {
    if (j.is_object() && j.contains("series")) return series_from_json(j.at("series"));
    try {
        const int valuation = j.at("valuation").get<int>();
        const int order = j.at("order").get<int>();
        std::vector<Rational> coeffs;
        for (const auto& c : j.at("coeffs")) {
            coeffs.push_back(c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()));
        }
        if (valuation > order) throw InvalidInput("series valuation exceeds its order");
        return TruncatedLaurentSeries(valuation, std::move(coeffs), order);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed series JSON: ") + e.what());
    }
}

TruncatedLaurentSeries read_series_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(path.string() + ": " + e.what());
    }
    return series_from_json(j);
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

}  // namespace qreal
