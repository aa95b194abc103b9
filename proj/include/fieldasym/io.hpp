#pragma once

#include "charges.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace fieldasym {

/// Unreadable or syntactically broken input (as opposed to a readable but
/// semantically invalid configuration, which raises ConfigError).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Schema: { "charges": [ { "a": "1", "x": "1/2", "y": "-3" }, ... ] } with
/// every number an exact rational ("p", "p/q" or a plain decimal); bare JSON
/// integers are accepted too.
inline std::vector<Charge> charges_from_json(const nlohmann::json& doc) {
    auto rational_field = [](const nlohmann::json& node, const char* name) {
        if (!node.contains(name))
            throw ParseError(std::string("charge entry missing field '") + name + "'");
        const nlohmann::json& value = node.at(name);
        try {
            if (value.is_string()) return parse_rational(value.get<std::string>());
            if (value.is_number_integer()) return Rational(Int(value.get<long long>()));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("field '") + name + "': " + e.what());
        }
        throw ParseError(std::string("field '") + name +
                         "' must be a rational string or an integer");
    };
    if (!doc.is_object() || !doc.contains("charges") || !doc.at("charges").is_array())
        throw ParseError("configuration needs a top-level \"charges\" array");
    std::vector<Charge> charges;
    for (const auto& node : doc.at("charges")) {
        if (!node.is_object()) throw ParseError("charge entries must be objects");
        charges.push_back(
            {rational_field(node, "a"), rational_field(node, "x"), rational_field(node, "y")});
    }
    return charges;
}

inline ChargeConfiguration load_configuration(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open configuration file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return ChargeConfiguration::validated(charges_from_json(doc));
}

inline nlohmann::json charges_to_json(const ChargeConfiguration& config) {
    nlohmann::json array = nlohmann::json::array();
    for (const auto& c : config.charges()) {
        array.push_back({{"a", format_rational(c.strength)},
                         {"x", format_rational(c.x)},
                         {"y", format_rational(c.y)}});
    }
    return {{"charges", array}};
}

}  // namespace fieldasym
