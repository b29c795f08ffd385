#include "rihahn/report.hpp"

namespace rihahn {

nlohmann::ordered_json violations_to_json(const std::vector<Violation>& violations) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Violation& v : violations) {
        arr.push_back({{"location", v.location}, {"detail", v.detail}});
    }
    return arr;
}

nlohmann::ordered_json IdentityReport::to_json() const {
    nlohmann::ordered_json j;
    j["identity"] = identity;
    j["params"] = params;
    j["status"] = ok() ? "pass" : "fail";
    j["violations"] = violations_to_json(violations);
    if (!flags.empty()) j["flags"] = flags;
    return j;
}

} // namespace rihahn
