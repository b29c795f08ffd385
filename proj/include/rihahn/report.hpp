#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace rihahn {

/// One exact-equality failure: where it happened and what was compared.
struct Violation {
    std::string location;
    std::string detail;
};

/// Result of one identity verification sweep. Empty violations means every
/// comparison held exactly.
struct IdentityReport {
    std::string identity;
    nlohmann::ordered_json params;
    std::vector<Violation> violations;
    /// Informational flags (e.g. a zero normalization constant) that are not
    /// identity failures.
    std::vector<std::string> flags;

    bool ok() const { return violations.empty(); }

    void add(std::string location, std::string detail) {
        violations.push_back({std::move(location), std::move(detail)});
    }

    nlohmann::ordered_json to_json() const;
};

nlohmann::ordered_json violations_to_json(const std::vector<Violation>& violations);

} // namespace rihahn
