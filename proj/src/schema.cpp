// SPDX-License-Identifier: Apache-2.0
#include "oasforge/schema.hpp"

#include <algorithm>
#include <functional>

namespace oasforge {

namespace {

constexpr std::string_view kRefPrefix = "#/components/schemas/";

using NameSet = std::set<std::string_view>;

const NameSet kInt32{"int", "Integer", "short", "Short", "byte", "Byte", "AtomicInteger", "OptionalInt"};
const NameSet kInt64{"long", "Long", "AtomicLong", "OptionalLong", "LongAdder"};
const NameSet kNumber{"float", "Float", "double", "Double", "BigDecimal", "Number", "OptionalDouble",
                      "DoubleAdder"};
const NameSet kBoolean{"boolean", "Boolean", "AtomicBoolean"};
const NameSet kString{
    "String",       "char",        "Character",     "CharSequence",   "StringBuilder", "StringBuffer",
    "UUID",         "URI",         "URL",           "LocalDate",      "LocalDateTime", "LocalTime",
    "OffsetDateTime", "OffsetTime", "ZonedDateTime", "Instant",       "Date",          "Timestamp",
    "Calendar",     "Duration",    "Period",        "ZoneId",         "ZoneOffset",    "Year",
    "YearMonth",    "Locale",      "Currency",      "Pattern",        "DayOfWeek",     "Month",
};
const NameSet kCollections{
    "List",     "ArrayList", "LinkedList", "Set",           "HashSet",   "LinkedHashSet",
    "TreeSet",  "SortedSet", "NavigableSet", "Collection",  "Iterable",  "Queue",
    "Deque",    "ArrayDeque", "Stream",    "Vector",        "EnumSet",   "CopyOnWriteArrayList",
    "Flux",     "Iterator",  "SequencedCollection",
};
const NameSet kMaps{
    "Map", "HashMap", "LinkedHashMap", "TreeMap", "SortedMap", "NavigableMap", "ConcurrentHashMap",
    "ConcurrentMap", "EnumMap", "Hashtable", "WeakHashMap", "IdentityHashMap", "MultiValueMap",
    "LinkedMultiValueMap",
};
const NameSet kTransparent{"Optional", "AtomicReference", "Mono", "Supplier"};
const NameSet kUnspecified{"Object", "JsonNode", "ObjectNode", "Serializable", "Void"};
const NameSet kResponseWrappers{
    "ResponseEntity",  "HttpEntity",        "DeferredResult", "Callable",     "CompletableFuture",
    "CompletionStage", "ListenableFuture",  "WebAsyncTask",   "Future",
};

std::optional<SchemaNode> scalar(std::string_view simple)
{
    if (kInt32.contains(simple))
        return SchemaNode::primitive("integer", "int32");
    if (kInt64.contains(simple))
        return SchemaNode::primitive("integer", "int64");
    if (simple == "BigInteger")
        return SchemaNode::primitive("integer");
    if (kNumber.contains(simple))
        return SchemaNode::primitive("number");
    if (kBoolean.contains(simple))
        return SchemaNode::primitive("boolean");
    if (kString.contains(simple))
        return SchemaNode::primitive("string");
    return std::nullopt;
}

std::string type_label(const TypeRef& t)
{
    if (t.array_depth > 0)
        return "ArrayOf" + type_label(t.element_type());
    if (t.form == TypeRef::Form::wildcard)
        return t.type_arguments.empty() ? "Object" : type_label(t.type_arguments.front());
    if (t.form == TypeRef::Form::type_variable || is_unspecified_marker(t))
        return "Object";
    std::string label = t.simple_name();
    if (!label.empty())
        label[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
    if (!t.type_arguments.empty()) {
        label += "Of";
        for (std::size_t i = 0; i < t.type_arguments.size(); ++i) {
            if (i)
                label += "And";
            label += type_label(t.type_arguments[i]);
        }
    }
    return label;
}

std::string type_key(const ClassDecl& cls, const std::vector<TypeRef>& args)
{
    std::string key = cls.qualified_name;
    if (!args.empty()) {
        TypeRef carrier = TypeRef::named("", args);
        key += carrier.display();
    }
    return key;
}

// With reg == nullptr only inline (simple) schemas are produced.
std::optional<SchemaNode> map_type(const TypeRef& t, const SourceModel& model, SchemaRegistry* reg)
{
    if (t.array_depth > 0) {
        auto inner = map_type(t.element_type(), model, reg);
        if (!inner)
            return std::nullopt;
        return SchemaNode::array(std::move(*inner));
    }
    switch (t.form) {
    case TypeRef::Form::primitive: return scalar(t.raw_name);
    case TypeRef::Form::type_variable: return SchemaNode::unspecified();
    case TypeRef::Form::wildcard:
        if (t.type_arguments.empty())
            return SchemaNode::unspecified();
        return map_type(t.type_arguments.front(), model, reg);
    case TypeRef::Form::named: break;
    }

    if (is_unspecified_marker(t)) {
        if (!reg)
            return std::nullopt;
        std::string name = reg->reserve(kUnspecifiedType, kUnspecifiedType);
        if (!reg->contains(name))
            reg->define(name, SchemaNode::unspecified());
        return SchemaNode::ref(name);
    }
    if (t.resolved) {
        if (const ClassDecl* cls = model.find(t.raw_name)) {
            if (cls->kind == ClassKind::enum_)
                return SchemaNode::enumeration(cls->enum_constants);
            if (!reg)
                return std::nullopt;
            return SchemaNode::ref(build_named_schema(*cls, model, *reg, t.type_arguments));
        }
    }

    std::string simple = t.simple_name();
    if (auto s = scalar(simple))
        return s;
    const auto& args = t.type_arguments;
    if (kCollections.contains(simple)) {
        if (args.empty())
            return SchemaNode::array(SchemaNode::unspecified());
        auto items = map_type(args.front(), model, reg);
        if (!items)
            return std::nullopt;
        return SchemaNode::array(std::move(*items));
    }
    if (kMaps.contains(simple)) {
        if (args.size() < 2)
            return SchemaNode::map(SchemaNode::unspecified());
        auto value = map_type(args[1], model, reg);
        if (!value)
            return std::nullopt;
        if (simple.starts_with("MultiValue") || simple.starts_with("LinkedMultiValue"))
            return SchemaNode::map(SchemaNode::array(std::move(*value)));
        return SchemaNode::map(std::move(*value));
    }
    if (simple == "Properties")
        return SchemaNode::map(SchemaNode::primitive("string"));
    if (kTransparent.contains(simple))
        return args.empty() ? SchemaNode::unspecified() : map_type(args.front(), model, reg);
    if (kUnspecified.contains(simple))
        return SchemaNode::unspecified();
    if (kResponseWrappers.contains(simple))
        return map_type(unwrap_response_wrapper(t), model, reg);

    if (!reg)
        return std::nullopt;
    auto dot = t.raw_name.rfind('.');
    std::string package = dot == std::string::npos ? "unknown" : t.raw_name.substr(0, dot);
    std::string name = reg->reserve("external:" + t.raw_name, simple);
    if (!reg->contains(name))
        reg->define(name, SchemaNode::unspecified(), package);
    return SchemaNode::ref(name);
}

void collect_refs(const SchemaNode& node, std::set<std::string>& out)
{
    if (node.kind == SchemaNode::Kind::ref)
        out.insert(node.ref_name);
    for (const auto& child : node.children)
        collect_refs(child, out);
    for (const auto& [_, prop] : node.properties)
        collect_refs(prop, out);
}

} // namespace

// ---------------------------------------------------------------------------
// SchemaNode

SchemaNode SchemaNode::primitive(std::string type, std::string format)
{
    SchemaNode n;
    n.kind = Kind::primitive;
    n.oas_type = std::move(type);
    n.format = std::move(format);
    return n;
}

SchemaNode SchemaNode::array(SchemaNode items)
{
    SchemaNode n;
    n.kind = Kind::array;
    n.children.push_back(std::move(items));
    return n;
}

SchemaNode SchemaNode::enumeration(std::vector<std::string> values)
{
    SchemaNode n;
    n.kind = Kind::enumeration;
    n.values = std::move(values);
    return n;
}

SchemaNode SchemaNode::map(SchemaNode value)
{
    SchemaNode n;
    n.kind = Kind::map;
    n.children.push_back(std::move(value));
    return n;
}

SchemaNode SchemaNode::ref(std::string name)
{
    SchemaNode n;
    n.kind = Kind::ref;
    n.ref_name = std::move(name);
    return n;
}

SchemaNode SchemaNode::all_of(std::vector<SchemaNode> parts)
{
    SchemaNode n;
    n.kind = Kind::all_of;
    n.children = std::move(parts);
    return n;
}

SchemaNode SchemaNode::object(std::vector<std::pair<std::string, SchemaNode>> properties,
                              std::vector<std::string> required)
{
    SchemaNode n;
    n.kind = Kind::object;
    n.properties = std::move(properties);
    n.required = std::move(required);
    return n;
}

Json SchemaNode::to_json() const
{
    Json j = Json::object();
    switch (kind) {
    case Kind::unspecified: break;
    case Kind::primitive:
        j["type"] = oas_type;
        if (!format.empty())
            j["format"] = format;
        break;
    case Kind::array:
        j["type"] = "array";
        j["items"] = items().to_json();
        break;
    case Kind::enumeration:
        j["type"] = "string";
        j["enum"] = values;
        break;
    case Kind::map:
        j["type"] = "object";
        j["additionalProperties"] = value().to_json();
        break;
    case Kind::ref: j["$ref"] = std::string(kRefPrefix) + ref_name; break;
    case Kind::all_of: {
        Json parts = Json::array();
        for (const auto& part : children)
            parts.push_back(part.to_json());
        j["allOf"] = std::move(parts);
        break;
    }
    case Kind::object:
        if (!required.empty())
            j["required"] = required;
        j["type"] = "object";
        if (!properties.empty()) {
            Json props = Json::object();
            for (const auto& [name, schema] : properties)
                props[name] = schema.to_json();
            j["properties"] = std::move(props);
        }
        break;
    }
    return j;
}

SchemaNode SchemaNode::from_json(const Json& j)
{
    if (!j.is_object())
        return unspecified();
    if (auto it = j.find("$ref"); it != j.end() && it->is_string()) {
        std::string target = it->get<std::string>();
        auto slash = target.rfind('/');
        return ref(slash == std::string::npos ? target : target.substr(slash + 1));
    }
    if (auto it = j.find("allOf"); it != j.end() && it->is_array()) {
        std::vector<SchemaNode> parts;
        for (const auto& part : *it)
            parts.push_back(from_json(part));
        return all_of(std::move(parts));
    }
    if (auto it = j.find("enum"); it != j.end() && it->is_array()) {
        std::vector<std::string> values;
        for (const auto& v : *it)
            values.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        return enumeration(std::move(values));
    }
    std::string type = j.value("type", std::string());
    if (type == "array")
        return array(j.contains("items") ? from_json(j["items"]) : unspecified());
    if (type == "object" || (type.empty() && (j.contains("properties") || j.contains("additionalProperties")))) {
        if (auto it = j.find("additionalProperties"); it != j.end() && !j.contains("properties")) {
            if (it->is_object())
                return map(from_json(*it));
            if (it->is_boolean() && it->get<bool>())
                return map(unspecified());
        }
        std::vector<std::pair<std::string, SchemaNode>> props;
        if (auto it = j.find("properties"); it != j.end() && it->is_object())
            for (const auto& [name, schema] : it->items())
                props.emplace_back(name, from_json(schema));
        std::vector<std::string> req;
        if (auto it = j.find("required"); it != j.end() && it->is_array())
            for (const auto& r : *it)
                if (r.is_string())
                    req.push_back(r.get<std::string>());
        return object(std::move(props), std::move(req));
    }
    if (!type.empty())
        return primitive(type, j.value("format", std::string()));
    return unspecified();
}

// ---------------------------------------------------------------------------
// SchemaRegistry

const SchemaNode* SchemaRegistry::find(std::string_view name) const
{
    auto it = schemas_.find(std::string(name));
    return it == schemas_.end() ? nullptr : &it->second;
}

std::optional<std::string> SchemaRegistry::name_for(std::string_view key) const
{
    auto it = key_to_name_.find(key);
    if (it == key_to_name_.end())
        return std::nullopt;
    return it->second;
}

std::string SchemaRegistry::reserve(std::string_view key, std::string_view preferred)
{
    if (auto it = key_to_name_.find(key); it != key_to_name_.end())
        return it->second;
    std::string name(preferred);
    for (int suffix = 2; taken_.contains(name); ++suffix)
        name = std::string(preferred) + "_" + std::to_string(suffix);
    taken_.insert(name);
    key_to_name_.emplace(std::string(key), name);
    return name;
}

void SchemaRegistry::define(const std::string& name, SchemaNode node, std::optional<std::string> external_package)
{
    taken_.insert(name);
    schemas_.insert_or_assign(name, std::move(node));
    if (external_package)
        external_.insert_or_assign(name, std::move(*external_package));
}

Json SchemaRegistry::entry_json(const std::string& name) const
{
    if (auto it = external_.find(name); it != external_.end()) {
        Json docs = Json::object();
        docs["description"] = it->second;
        docs["url"] = "urn:java:package:" + it->second;
        Json j = Json::object();
        j["externalDocs"] = std::move(docs);
        return j;
    }
    return schemas_.at(name).to_json();
}

void SchemaRegistry::add_parsed(const std::string& name, const Json& j)
{
    if (j.is_object() && j.contains("externalDocs") && j["externalDocs"].is_object()) {
        define(name, SchemaNode::unspecified(), j["externalDocs"].value("description", std::string()));
        return;
    }
    define(name, SchemaNode::from_json(j));
}

std::set<std::string> SchemaRegistry::referenced_names() const
{
    std::set<std::string> out;
    for (const auto& [_, node] : schemas_)
        collect_refs(node, out);
    return out;
}

// ---------------------------------------------------------------------------
// Mapping

std::optional<SchemaNode> map_simple_type(const TypeRef& t, const SourceModel& model)
{
    return map_type(t, model, nullptr);
}

SchemaNode schema_for_type(const TypeRef& t, const SourceModel& model, SchemaRegistry& reg)
{
    return *map_type(t, model, &reg);
}

bool is_unspecified_marker(const TypeRef& t) noexcept
{
    return t.form == TypeRef::Form::named && !t.resolved && t.array_depth == 0 &&
           t.type_arguments.empty() && t.raw_name == kUnspecifiedType;
}

TypeRef unwrap_response_wrapper(const TypeRef& t)
{
    TypeRef current = t;
    while (current.form == TypeRef::Form::named && current.array_depth == 0 && !current.resolved &&
           kResponseWrappers.contains(current.simple_name())) {
        if (current.type_arguments.empty())
            return TypeRef::named(std::string(kUnspecifiedType));
        TypeRef inner = current.type_arguments.front();
        if (inner.form == TypeRef::Form::wildcard) {
            if (inner.type_arguments.empty())
                return TypeRef::named(std::string(kUnspecifiedType));
            inner = inner.type_arguments.front();
        }
        current = std::move(inner);
    }
    return current;
}

TypeRef substitute(const TypeRef& t, const std::map<std::string, TypeRef>& bindings)
{
    if (t.form == TypeRef::Form::type_variable) {
        auto it = bindings.find(t.raw_name);
        if (it == bindings.end())
            return t;
        TypeRef bound = it->second;
        bound.array_depth += t.array_depth;
        return bound;
    }
    TypeRef out = t;
    for (auto& arg : out.type_arguments)
        arg = substitute(arg, bindings);
    return out;
}

std::vector<std::string> required_fields(const ClassDecl& cls)
{
    std::vector<std::string> out;
    for (const auto& f : cls.fields) {
        if (f.is_static)
            continue;
        bool annotated = find_annotation(f.annotations, "NotNull") || find_annotation(f.annotations, "NotEmpty") ||
                         find_annotation(f.annotations, "NotBlank");
        if (annotated || f.type.is_primitive())
            out.push_back(f.name);
    }
    return out;
}

std::string build_named_schema(const ClassDecl& cls, const SourceModel& model, SchemaRegistry& reg,
                               const std::vector<TypeRef>& type_arguments)
{
    supertype_chain(cls, model); // rejects cyclic hierarchies early

    std::map<std::string, TypeRef> bindings;
    for (std::size_t i = 0; i < cls.type_parameters.size() && i < type_arguments.size(); ++i)
        bindings.emplace(cls.type_parameters[i], type_arguments[i]);

    std::string key = type_key(cls, type_arguments);
    if (auto existing = reg.name_for(key))
        return *existing;
    std::string preferred = cls.simple_name;
    if (!type_arguments.empty())
        preferred = type_label(TypeRef::named(cls.simple_name, type_arguments));
    std::string name = reg.reserve(key, preferred);

    if (cls.kind == ClassKind::enum_) {
        reg.define(name, SchemaNode::enumeration(cls.enum_constants));
        return name;
    }

    // Placeholder so that self references terminate.
    reg.define(name, SchemaNode::object({}));
    std::vector<std::pair<std::string, SchemaNode>> props;
    for (const auto& f : cls.fields) {
        if (f.is_static)
            continue;
        props.emplace_back(f.name, schema_for_type(substitute(f.type, bindings), model, reg));
    }
    SchemaNode own = SchemaNode::object(std::move(props), required_fields(cls));

    const ClassDecl* parent = cls.superclass && cls.superclass->resolved ? model.find(cls.superclass->raw_name) : nullptr;
    if (parent) {
        std::vector<TypeRef> parent_args;
        for (const auto& a : cls.superclass->type_arguments)
            parent_args.push_back(substitute(a, bindings));
        std::string parent_name = build_named_schema(*parent, model, reg, parent_args);
        reg.define(name, SchemaNode::all_of({SchemaNode::ref(parent_name), std::move(own)}));
    } else {
        reg.define(name, std::move(own));
    }
    return name;
}

SchemaRegistry& collect_schemas(const std::set<std::string>& class_names, const SourceModel& model,
                                SchemaRegistry& reg)
{
    for (const auto& qn : class_names)
        if (const ClassDecl* cls = model.find(qn))
            build_named_schema(*cls, model, reg);
    return reg;
}

} // namespace oasforge
