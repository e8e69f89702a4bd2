#pragma once

#include "cobalt/scalar.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cobalt {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

/// Outcome of one verification, with the identity it checks named by `anchor`.
struct Check {
    std::string name;
    std::string anchor;
    bool pass = false;
    nlohmann::json details = nlohmann::json::object();
    std::optional<nlohmann::json> witness;
};

nlohmann::json to_json(const Check& check);

/// JSON number when it fits in a long, decimal string otherwise.
nlohmann::json integer_json(const Integer& v);
/// Integer JSON for integral values, "p/q" string otherwise.
nlohmann::json rational_json(const Rational& v);

struct Report {
    std::string command;
    nlohmann::json options = nlohmann::json::object();
    nlohmann::json result = nlohmann::json::object();
    std::vector<Check> checks;
    std::optional<double> timing_ms;

    bool all_pass() const;
    nlohmann::json to_json() const;
};

} // namespace cobalt
