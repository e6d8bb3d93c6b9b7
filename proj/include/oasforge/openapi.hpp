// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "oasforge/endpoint_analyzer.hpp"
#include "oasforge/schema.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace oasforge {

struct OperationObject {
    std::vector<ParameterDesc> parameters;
    std::optional<RequestBodyDesc> request_body;
    /// Status -> response, ordered by status code.
    std::map<std::string, ResponseDesc> responses;

    friend bool operator==(const OperationObject&, const OperationObject&) = default;
};

struct OpenApiDoc {
    std::string oas_version = "3.0.3";
    std::string title;
    std::string service_version = "0.0.0";
    std::string profile = "default";
    std::map<std::string, std::map<HttpVerb, OperationObject>> paths;
    SchemaRegistry components_schemas;

    /// Number of (path, verb) operations.
    std::size_t operation_count() const;
    bool empty() const { return paths.empty() && components_schemas.schemas().empty(); }

    friend bool operator==(const OpenApiDoc&, const OpenApiDoc&) = default;
};

struct DocumentMeta {
    std::string project;
    std::string version = "0.0.0";
    std::string profile = "default";
};

/// Conflicting duplicate operations or schemas found while merging.
class MergeConflict : public std::runtime_error {
public:
    explicit MergeConflict(std::vector<std::string> conflicts);
    const std::vector<std::string>& conflicts() const noexcept { return conflicts_; }

private:
    std::vector<std::string> conflicts_;
};

enum class OutputFormat : std::uint8_t { json, yaml };

/// "project" for the default profile, "project (profile)" otherwise.
std::string document_title(const std::string& project, const std::string& profile);

/// Version declared by pom.xml or build.gradle(.kts) at `root`, else "0.0.0".
std::string project_version(const std::filesystem::path& root);

/// Builds the document of one profile. Duplicate (path, verb) pairs keep the
/// last endpoint and add a DUPLICATE_METHOD diagnostic.
OpenApiDoc assemble_document(const std::vector<EndpointMethod>& endpoints, SchemaRegistry registry,
                             const DocumentMeta& meta, Diagnostics* diagnostics = nullptr);

/// Set union of documents of one project. Empty documents are neutral.
/// @throws MergeConflict when a path/verb or schema name differs between inputs.
OpenApiDoc merge_documents(const std::vector<OpenApiDoc>& docs);

Json to_json(const OpenApiDoc& doc);
std::string serialize(const OpenApiDoc& doc, OutputFormat format);
/// YAML rendering of an arbitrary JSON value, keys in insertion order.
std::string to_yaml(const Json& value);

/// Reads a description produced by serialize (JSON or YAML).
/// @throws std::invalid_argument on malformed input.
OpenApiDoc parse_document(std::string_view text);
OpenApiDoc from_json(const Json& j);

} // namespace oasforge
