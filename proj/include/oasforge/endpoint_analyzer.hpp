// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "oasforge/controller_discovery.hpp"
#include "oasforge/schema.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oasforge {

enum class HttpVerb : std::uint8_t { get, post, put, delete_, patch, head, options };

inline constexpr std::array<HttpVerb, 7> kAllVerbs{HttpVerb::get,   HttpVerb::post, HttpVerb::put,
                                                   HttpVerb::delete_, HttpVerb::patch, HttpVerb::head,
                                                   HttpVerb::options};

/// Lower-case OAS key ("get", "delete", ...).
std::string_view to_string(HttpVerb verb) noexcept;
/// Case-insensitive; nullopt for anything outside the seven verbs.
std::optional<HttpVerb> parse_verb(std::string_view name) noexcept;

enum class ParameterLocation : std::uint8_t { path, query, header };

std::string_view to_string(ParameterLocation location) noexcept;
std::optional<ParameterLocation> parse_location(std::string_view name) noexcept;

struct ParameterDesc {
    std::string name;
    ParameterLocation location = ParameterLocation::query;
    bool required = true;
    SchemaNode schema;
    std::optional<std::string> pattern;

    friend bool operator==(const ParameterDesc&, const ParameterDesc&) = default;
};

struct RequestBodyDesc {
    SchemaNode schema;
    bool required = true;
    /// Java parameter name, kept for evaluation of non-object bodies.
    std::string name;

    friend bool operator==(const RequestBodyDesc&, const RequestBodyDesc&) = default;
};

struct ResponseDesc {
    std::string status;
    std::optional<SchemaNode> schema;
    std::string description;

    friend bool operator==(const ResponseDesc&, const ResponseDesc&) = default;
};

struct EndpointMethod {
    std::string path;
    HttpVerb verb = HttpVerb::get;
    const MethodDecl* handler = nullptr;
    const ClassDecl* controller = nullptr;
    std::vector<ParameterDesc> parameters;
    std::optional<RequestBodyDesc> request_body;
    std::vector<ResponseDesc> responses;
};

struct PathConstraint {
    std::string name;
    std::string regex;

    friend bool operator==(const PathConstraint&, const PathConstraint&) = default;
};

struct SplitSegment {
    std::string clean_segment;
    std::optional<PathConstraint> constraint;
    bool balanced = true;

    friend bool operator==(const SplitSegment&, const SplitSegment&) = default;
};

/// `{id:[0-9]+}` -> (`{id}`, id, `[0-9]+`). The regex runs from the first
/// ':' inside the outer braces to the matching close brace.
SplitSegment split_path_pattern(std::string_view segment);

/// Path with its template constraints removed.
struct PathPattern {
    std::string path;
    std::vector<PathConstraint> constraints;
    bool balanced = true;
};

/// Joins, splits on '/' outside braces, drops empty segments and strips
/// constraints. The result starts with '/' and never contains "//".
PathPattern normalize_path(std::string_view raw);
/// Convenience: normalize_path(raw).path.
std::string clean_path(std::string_view raw);

/// Names of `{...}` template variables in a clean path.
std::vector<std::string> path_variables(std::string_view path);

/// Analysis context of one profile unit. Diagnostics are appended; the
/// registry receives every named schema referenced by the endpoints.
class EndpointAnalyzer {
public:
    EndpointAnalyzer(const SourceModel& model, const ProfileUnit& unit, SchemaRegistry& registry,
                     Diagnostics& diagnostics);

    std::vector<EndpointMethod> extract_endpoints();

    std::pair<std::vector<ParameterDesc>, std::optional<RequestBodyDesc>>
    extract_parameters(const MethodDecl& handler, const ClassDecl& owner, const PathPattern& path);

    std::vector<ParameterDesc> expand_model_attribute(const TypeRef& type, const ClassDecl& owner, int line);

    std::vector<ResponseDesc> extract_responses(const MethodDecl& handler, const ClassDecl& owner,
                                                const ClassDecl& controller);

    /// Three-digit status for an exception thrown by a handler of `local`.
    std::string resolve_exception_status(const std::string& exception, const ClassDecl& local,
                                         const std::string& file = {}, int line = 0);

private:
    void report(std::string_view code, Severity severity, std::string message, const std::string& file, int line);

    const SourceModel& model_;
    const ProfileUnit& unit_;
    SchemaRegistry& registry_;
    Diagnostics& diagnostics_;
};

/// Shorthand that runs an EndpointAnalyzer over `unit`.
std::vector<EndpointMethod> extract_endpoints(const ProfileUnit& unit, const SourceModel& model,
                                              SchemaRegistry& registry, Diagnostics& diagnostics);

/// Ancestor distance of `exception` to `handled` (0 = same class), walking
/// model superclasses and the built-in JDK hierarchy; nullopt when unrelated.
std::optional<int> exception_distance(const std::string& exception, const std::string& handled,
                                      const SourceModel& model);

} // namespace oasforge
