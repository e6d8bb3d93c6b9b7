// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "oasforge/source_model.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oasforge {

using Json = nlohmann::ordered_json;

/// Name of the shared schema used when a response wrapper hides its payload.
inline constexpr std::string_view kUnspecifiedType = "UNSPECIFIED_TYPE";

/// Recursive OAS schema value.
struct SchemaNode {
    enum class Kind : std::uint8_t { unspecified, primitive, array, enumeration, map, ref, all_of, object };

    Kind kind = Kind::unspecified;
    std::string oas_type;                 ///< primitive: integer/number/string/boolean
    std::string format;                   ///< primitive: int32/int64 or empty
    std::vector<SchemaNode> children;     ///< array items, map value, or allOf parts
    std::vector<std::string> values;      ///< enum constants in declaration order
    std::string ref_name;                 ///< ref target under #/components/schemas
    std::vector<std::pair<std::string, SchemaNode>> properties; ///< object, declaration order
    std::vector<std::string> required;    ///< object

    static SchemaNode unspecified() { return {}; }
    static SchemaNode primitive(std::string type, std::string format = {});
    static SchemaNode array(SchemaNode items);
    static SchemaNode enumeration(std::vector<std::string> values);
    static SchemaNode map(SchemaNode value);
    static SchemaNode ref(std::string name);
    static SchemaNode all_of(std::vector<SchemaNode> parts);
    static SchemaNode object(std::vector<std::pair<std::string, SchemaNode>> properties,
                             std::vector<std::string> required = {});

    bool is_primitive() const noexcept { return kind == Kind::primitive; }
    const SchemaNode& items() const { return children.at(0); }
    const SchemaNode& value() const { return children.at(0); }

    Json to_json() const;
    /// Inverse of to_json for the constructs above; unknown keywords are ignored.
    static SchemaNode from_json(const Json& j);

    friend bool operator==(const SchemaNode&, const SchemaNode&) = default;
};

/// Named schemas of one document (#/components/schemas).
class SchemaRegistry {
public:
    const std::map<std::string, SchemaNode>& schemas() const noexcept { return schemas_; }
    /// Schema name -> package for classes outside the analyzed tree.
    const std::map<std::string, std::string>& external_notes() const noexcept { return external_; }

    bool contains(std::string_view name) const { return schemas_.contains(std::string(name)); }
    const SchemaNode* find(std::string_view name) const;

    /// Schema name already bound to a type key, if any.
    std::optional<std::string> name_for(std::string_view key) const;
    /// Binds `key` to `preferred`, or to `preferred_2`, `preferred_3`, ... when
    /// the name is taken by another key. Idempotent per key.
    std::string reserve(std::string_view key, std::string_view preferred);
    /// Stores the schema for a reserved name.
    void define(const std::string& name, SchemaNode node, std::optional<std::string> external_package = {});

    /// Serialized form of one entry (externalDocs for external classes).
    Json entry_json(const std::string& name) const;
    /// Adds an entry parsed from a document; used when reading descriptions back.
    void add_parsed(const std::string& name, const Json& j);

    /// Every `$ref` target reachable from the registered schemas.
    std::set<std::string> referenced_names() const;

    friend bool operator==(const SchemaRegistry& a, const SchemaRegistry& b)
    {
        return a.schemas_ == b.schemas_ && a.external_ == b.external_;
    }

private:
    std::map<std::string, SchemaNode> schemas_;
    std::map<std::string, std::string> external_;
    std::map<std::string, std::string, std::less<>> key_to_name_;
    std::set<std::string, std::less<>> taken_;
};

/// Simple-type mapping. Returns nullopt for custom classes (anywhere inside
/// `t`), which need a named schema.
std::optional<SchemaNode> map_simple_type(const TypeRef& t, const SourceModel& model);

/// Full mapping: simple types inline, custom classes as `$ref` registered
/// (with their closure) in `reg`.
SchemaNode schema_for_type(const TypeRef& t, const SourceModel& model, SchemaRegistry& reg);

/// Strips response-entity / deferred-result style wrappers to a fixpoint.
/// A wrapper without a usable type argument yields the UNSPECIFIED_TYPE marker.
TypeRef unwrap_response_wrapper(const TypeRef& t);

/// True for the marker returned by unwrap_response_wrapper.
bool is_unspecified_marker(const TypeRef& t) noexcept;

/// Registers `cls` (instantiated with `type_arguments`) and everything it
/// references; returns its schema name.
std::string build_named_schema(const ClassDecl& cls, const SourceModel& model, SchemaRegistry& reg,
                               const std::vector<TypeRef>& type_arguments = {});

/// Declared instance fields that are required, in declaration order.
std::vector<std::string> required_fields(const ClassDecl& cls);

/// Registers every named class (by qualified name) and its closure.
SchemaRegistry& collect_schemas(const std::set<std::string>& class_names, const SourceModel& model,
                                SchemaRegistry& reg);

/// Replaces type variables bound in `bindings`.
TypeRef substitute(const TypeRef& t, const std::map<std::string, TypeRef>& bindings);

} // namespace oasforge
