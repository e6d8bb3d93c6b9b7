// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace oasforge::testing {

/// Minimal JSON Schema draft-04 validator covering the keywords used by the
/// OpenAPI 3.0 meta-schema. Only local `#/...` references are supported.
class Draft04Validator {
public:
    explicit Draft04Validator(nlohmann::json schema);

    /// Violations as "pointer: message"; empty when the instance is valid.
    std::vector<std::string> validate(const nlohmann::json& instance) const;

private:
    bool check(const nlohmann::json& schema, const nlohmann::json& instance, const std::string& where,
               std::vector<std::string>* errors, int depth) const;
    const nlohmann::json& resolve(const std::string& ref) const;

    nlohmann::json root_;
};

/// Every `$ref` string in `document` that does not point at an existing node.
std::vector<std::string> dangling_refs(const nlohmann::json& document);

} // namespace oasforge::testing
