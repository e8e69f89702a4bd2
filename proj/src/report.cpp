#include "cobalt/report.hpp"

#include <algorithm>

namespace cobalt {

nlohmann::json to_json(const Check& check)
{
    nlohmann::json j;
    j["name"] = check.name;
    j["anchor"] = check.anchor;
    j["pass"] = check.pass;
    j["details"] = check.details;
    if (check.witness)
        j["witness"] = *check.witness;
    return j;
}

nlohmann::json integer_json(const Integer& v)
{
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

nlohmann::json rational_json(const Rational& v)
{
    if (v.get_den() == 1)
        return integer_json(v.get_num());
    return v.get_str();
}

bool Report::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

nlohmann::json Report::to_json() const
{
    nlohmann::json j;
    j["schema"] = kSchemaVersion;
    j["tool_version"] = kToolVersion;
    j["command"] = command;
    j["options"] = options;
    j["result"] = result;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
        j["checks"].push_back(cobalt::to_json(c));
    j["pass"] = all_pass();
    if (timing_ms)
        j["timing_ms"] = *timing_ms;
    return j;
}

} // namespace cobalt
