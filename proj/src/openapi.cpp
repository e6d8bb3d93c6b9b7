// SPDX-License-Identifier: Apache-2.0
#include "oasforge/openapi.hpp"

#include "oasforge/http_status.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace oasforge {

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += parts[i];
    }
    return out;
}

std::optional<std::string> read_file(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string base_project(const OpenApiDoc& doc)
{
    std::string suffix = " (" + doc.profile + ")";
    if (doc.profile != kDefaultProfile && doc.title.ends_with(suffix))
        return doc.title.substr(0, doc.title.size() - suffix.size());
    return doc.title;
}

Json media(const SchemaNode& schema)
{
    Json content = Json::object();
    content["application/json"]["schema"] = schema.to_json();
    return content;
}

Json parameter_json(const ParameterDesc& p)
{
    Json j = Json::object();
    j["name"] = p.name;
    j["in"] = std::string(to_string(p.location));
    j["required"] = p.required;
    Json schema = p.schema.to_json();
    if (p.pattern && p.schema.kind != SchemaNode::Kind::ref)
        schema["pattern"] = *p.pattern;
    j["schema"] = std::move(schema);
    return j;
}

Json operation_json(const OperationObject& op)
{
    Json j = Json::object();
    if (!op.parameters.empty()) {
        Json params = Json::array();
        for (const auto& p : op.parameters)
            params.push_back(parameter_json(p));
        j["parameters"] = std::move(params);
    }
    if (op.request_body) {
        Json body = Json::object();
        body["content"] = media(op.request_body->schema);
        body["required"] = op.request_body->required;
        body["x-name"] = op.request_body->name;
        j["requestBody"] = std::move(body);
    }
    Json responses = Json::object();
    for (const auto& [status, r] : op.responses) {
        Json entry = Json::object();
        entry["description"] = r.description.empty() ? reason_phrase(status) : r.description;
        if (r.schema)
            entry["content"] = media(*r.schema);
        responses[status] = std::move(entry);
    }
    j["responses"] = std::move(responses);
    return j;
}

// --- YAML ------------------------------------------------------------------

bool needs_quotes(const std::string& s)
{
    if (s.empty())
        return true;
    static const std::regex special(
        R"(^(~|null|Null|NULL|true|True|TRUE|false|False|FALSE|yes|Yes|YES|no|No|NO|on|On|ON|off|Off|OFF|y|Y|n|N)$)");
    static const std::regex numeric(
        R"(^[-+]?(\.[0-9]+|[0-9][0-9_]*(\.[0-9_]*)?)([eE][-+]?[0-9]+)?$|^[-+]?\.(inf|Inf|INF)$|^\.(nan|NaN|NAN)$|^0[xXoObB][0-9a-fA-F_]+$|^[0-9]+(:[0-5]?[0-9])+$)");
    return std::regex_match(s, special) || std::regex_match(s, numeric);
}

void emit_yaml(YAML::Emitter& out, const Json& v)
{
    switch (v.type()) {
    case Json::value_t::object:
        out << YAML::BeginMap;
        for (const auto& [key, value] : v.items()) {
            out << YAML::Key;
            if (needs_quotes(key))
                out << YAML::DoubleQuoted;
            out << key << YAML::Value;
            emit_yaml(out, value);
        }
        out << YAML::EndMap;
        break;
    case Json::value_t::array:
        out << YAML::BeginSeq;
        for (const auto& item : v)
            emit_yaml(out, item);
        out << YAML::EndSeq;
        break;
    case Json::value_t::string: {
        const auto& s = v.get_ref<const std::string&>();
        if (needs_quotes(s))
            out << YAML::DoubleQuoted;
        out << s;
        break;
    }
    case Json::value_t::boolean: out << v.get<bool>(); break;
    case Json::value_t::number_integer: out << v.get<std::int64_t>(); break;
    case Json::value_t::number_unsigned: out << v.get<std::uint64_t>(); break;
    case Json::value_t::number_float: out << v.dump(); break;
    case Json::value_t::null: out << YAML::Null; break;
    default: out << v.dump(); break;
    }
}

Json yaml_to_json(const YAML::Node& node)
{
    switch (node.Type()) {
    case YAML::NodeType::Map: {
        Json j = Json::object();
        for (const auto& kv : node)
            j[kv.first.as<std::string>()] = yaml_to_json(kv.second);
        return j;
    }
    case YAML::NodeType::Sequence: {
        Json j = Json::array();
        for (const auto& item : node)
            j.push_back(yaml_to_json(item));
        return j;
    }
    case YAML::NodeType::Scalar: {
        const std::string& s = node.Scalar();
        if (node.Tag() == "!")
            return s;
        if (s == "true" || s == "True" || s == "TRUE")
            return true;
        if (s == "false" || s == "False" || s == "FALSE")
            return false;
        if (s == "~" || s == "null" || s == "Null" || s == "NULL")
            return nullptr;
        static const std::regex integer(R"(^[-+]?[0-9]+$)");
        static const std::regex real(R"(^[-+]?(\.[0-9]+|[0-9]+(\.[0-9]*)?)([eE][-+]?[0-9]+)?$)");
        try {
            if (std::regex_match(s, integer))
                return std::stoll(s);
            if (std::regex_match(s, real))
                return std::stod(s);
        } catch (const std::out_of_range&) {
        }
        return s;
    }
    case YAML::NodeType::Null: return nullptr;
    default: return nullptr;
    }
}

const Json* first_media_schema(const Json& holder)
{
    auto content = holder.find("content");
    if (content == holder.end() || !content->is_object() || content->empty())
        return nullptr;
    const Json& first = content->begin().value();
    auto schema = first.find("schema");
    return schema == first.end() ? nullptr : &*schema;
}

} // namespace

// ---------------------------------------------------------------------------

MergeConflict::MergeConflict(std::vector<std::string> conflicts)
    : std::runtime_error("merge conflict: " + join(conflicts, "; ")), conflicts_(std::move(conflicts))
{
}

std::size_t OpenApiDoc::operation_count() const
{
    std::size_t n = 0;
    for (const auto& [_, ops] : paths)
        n += ops.size();
    return n;
}

std::string document_title(const std::string& project, const std::string& profile)
{
    return profile == kDefaultProfile ? project : project + " (" + profile + ")";
}

std::string project_version(const std::filesystem::path& root)
{
    if (auto pom = read_file(root / "pom.xml")) {
        static const std::regex nested(
            R"(<(parent|dependencies|dependencyManagement|build|profiles|plugins|reporting)\b[\s\S]*?</\1>)");
        static const std::regex version(R"(<version>\s*([^<\s]+)\s*</version>)");
        std::string top = std::regex_replace(*pom, nested, "");
        std::smatch m;
        if (std::regex_search(top, m, version) && m[1].str().find("${") == std::string::npos)
            return m[1].str();
    }
    for (const char* name : {"build.gradle", "build.gradle.kts"}) {
        if (auto gradle = read_file(root / name)) {
            static const std::regex version(R"((^|\n)\s*version\s*=?\s*['"]([^'"]+)['"])");
            std::smatch m;
            if (std::regex_search(*gradle, m, version))
                return m[2].str();
        }
    }
    return "0.0.0";
}

OpenApiDoc assemble_document(const std::vector<EndpointMethod>& endpoints, SchemaRegistry registry,
                             const DocumentMeta& meta, Diagnostics* diagnostics)
{
    OpenApiDoc doc;
    doc.title = document_title(meta.project, meta.profile);
    doc.service_version = meta.version;
    doc.profile = meta.profile;
    doc.components_schemas = std::move(registry);
    for (const auto& em : endpoints) {
        auto& ops = doc.paths[em.path];
        if (ops.contains(em.verb) && diagnostics) {
            std::string file = em.controller ? em.controller->source_file : std::string();
            diagnostics->push_back({std::string(diag::duplicate_method), Severity::warning,
                                    "duplicate method " + std::string(to_string(em.verb)) + " " + em.path +
                                        " in profile " + meta.profile + "; keeping the last handler",
                                    file, em.handler ? em.handler->line : 0});
        }
        OperationObject op;
        op.parameters = em.parameters;
        op.request_body = em.request_body;
        for (const auto& r : em.responses)
            op.responses[r.status] = r;
        ops[em.verb] = std::move(op);
    }
    return doc;
}

OpenApiDoc merge_documents(const std::vector<OpenApiDoc>& docs)
{
    std::vector<const OpenApiDoc*> inputs;
    for (const auto& d : docs)
        if (!d.empty() || docs.size() == 1)
            inputs.push_back(&d);
    if (inputs.empty())
        return docs.empty() ? OpenApiDoc{} : docs.front();
    if (inputs.size() == 1)
        return *inputs.front();

    std::set<std::string> profiles;
    for (const OpenApiDoc* d : inputs) {
        std::stringstream ss(d->profile);
        for (std::string p; std::getline(ss, p, '+');)
            profiles.insert(p);
    }

    OpenApiDoc out;
    out.oas_version = inputs.front()->oas_version;
    out.service_version = inputs.front()->service_version;
    out.profile = join(std::vector<std::string>(profiles.begin(), profiles.end()), "+");
    out.title = document_title(base_project(*inputs.front()), out.profile);

    std::vector<std::string> conflicts;
    std::map<std::pair<std::string, HttpVerb>, std::string> op_origin;
    std::map<std::string, std::string> schema_origin;
    for (const OpenApiDoc* d : inputs) {
        if (d->service_version != out.service_version)
            conflicts.push_back("info.version differs: " + out.service_version + " vs " + d->service_version +
                                " (" + d->profile + ")");
        for (const auto& [path, ops] : d->paths) {
            for (const auto& [verb, op] : ops) {
                auto& slot = out.paths[path];
                auto it = slot.find(verb);
                if (it == slot.end()) {
                    slot.emplace(verb, op);
                    op_origin[{path, verb}] = d->profile;
                } else if (!(it->second == op)) {
                    conflicts.push_back(std::string(to_string(verb)) + " " + path + " differs between profiles " +
                                        op_origin[{path, verb}] + " and " + d->profile);
                }
            }
        }
        const auto& reg = d->components_schemas;
        for (const auto& [name, node] : reg.schemas()) {
            auto ext = reg.external_notes().find(name);
            std::optional<std::string> pkg;
            if (ext != reg.external_notes().end())
                pkg = ext->second;
            if (const SchemaNode* existing = out.components_schemas.find(name)) {
                auto oext = out.components_schemas.external_notes().find(name);
                std::optional<std::string> opkg;
                if (oext != out.components_schemas.external_notes().end())
                    opkg = oext->second;
                if (!(*existing == node) || opkg != pkg)
                    conflicts.push_back("schema " + name + " differs between profiles " + schema_origin[name] +
                                        " and " + d->profile);
                continue;
            }
            out.components_schemas.define(name, node, pkg);
            schema_origin[name] = d->profile;
        }
    }
    if (!conflicts.empty())
        throw MergeConflict(std::move(conflicts));
    return out;
}

Json to_json(const OpenApiDoc& doc)
{
    Json j = Json::object();
    j["openapi"] = doc.oas_version;
    j["info"]["title"] = doc.title;
    j["info"]["version"] = doc.service_version;
    j["x-profile"] = doc.profile;
    Json paths = Json::object();
    for (const auto& [path, ops] : doc.paths) {
        Json item = Json::object();
        for (const auto& [verb, op] : ops)
            item[std::string(to_string(verb))] = operation_json(op);
        paths[path] = std::move(item);
    }
    j["paths"] = std::move(paths);
    Json schemas = Json::object();
    for (const auto& [name, _] : doc.components_schemas.schemas())
        schemas[name] = doc.components_schemas.entry_json(name);
    j["components"]["schemas"] = std::move(schemas);
    return j;
}

std::string to_yaml(const Json& value)
{
    YAML::Emitter out;
    out.SetIndent(2);
    emit_yaml(out, value);
    return std::string(out.c_str()) + "\n";
}

std::string serialize(const OpenApiDoc& doc, OutputFormat format)
{
    Json j = to_json(doc);
    if (format == OutputFormat::yaml)
        return to_yaml(j);
    return j.dump(2) + "\n";
}

OpenApiDoc from_json(const Json& j)
{
    if (!j.is_object())
        throw std::invalid_argument("description root must be an object");
    OpenApiDoc doc;
    doc.oas_version = j.value("openapi", std::string("3.0.3"));
    if (auto info = j.find("info"); info != j.end() && info->is_object()) {
        doc.title = info->value("title", std::string());
        doc.service_version = info->value("version", std::string("0.0.0"));
    }
    doc.profile = j.value("x-profile", std::string(kDefaultProfile));
    if (!j.contains("openapi"))
        throw std::invalid_argument("missing 'openapi' version field");
    if (auto paths = j.find("paths"); paths == j.end() || !paths->is_object())
        throw std::invalid_argument("'paths' must be an object");

    if (auto paths = j.find("paths"); paths != j.end() && paths->is_object()) {
        for (const auto& [path, item] : paths->items()) {
            auto& ops = doc.paths[path];
            if (!item.is_object())
                continue;
            for (const auto& [key, op_json] : item.items()) {
                auto verb = parse_verb(key);
                if (!verb || !op_json.is_object())
                    continue;
                OperationObject op;
                if (auto params = op_json.find("parameters"); params != op_json.end() && params->is_array()) {
                    for (const auto& pj : *params) {
                        ParameterDesc p;
                        p.name = pj.value("name", std::string());
                        p.location = parse_location(pj.value("in", std::string("query")))
                                         .value_or(ParameterLocation::query);
                        p.required = pj.value("required", p.location == ParameterLocation::path);
                        Json schema = pj.value("schema", Json::object());
                        if (schema.is_object() && schema.contains("pattern")) {
                            p.pattern = schema["pattern"].get<std::string>();
                            schema.erase("pattern");
                        }
                        p.schema = SchemaNode::from_json(schema);
                        op.parameters.push_back(std::move(p));
                    }
                }
                if (auto body = op_json.find("requestBody"); body != op_json.end() && body->is_object()) {
                    RequestBodyDesc rb;
                    if (const Json* s = first_media_schema(*body))
                        rb.schema = SchemaNode::from_json(*s);
                    rb.required = body->value("required", false);
                    rb.name = body->value("x-name", std::string());
                    op.request_body = std::move(rb);
                }
                if (auto responses = op_json.find("responses"); responses != op_json.end() && responses->is_object()) {
                    for (const auto& [status, rj] : responses->items()) {
                        ResponseDesc r;
                        r.status = status;
                        r.description = rj.is_object() ? rj.value("description", std::string()) : std::string();
                        if (rj.is_object())
                            if (const Json* s = first_media_schema(rj))
                                r.schema = SchemaNode::from_json(*s);
                        op.responses.emplace(status, std::move(r));
                    }
                }
                ops[*verb] = std::move(op);
            }
        }
    }
    if (auto comps = j.find("components"); comps != j.end() && comps->is_object())
        if (auto schemas = comps->find("schemas"); schemas != comps->end() && schemas->is_object())
            for (const auto& [name, sj] : schemas->items())
                doc.components_schemas.add_parsed(name, sj);
    return doc;
}

OpenApiDoc parse_document(std::string_view text)
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        try {
            return from_json(Json::parse(text));
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("invalid JSON description: ") + e.what());
        }
    }
    try {
        return from_json(yaml_to_json(YAML::Load(std::string(text))));
    } catch (const YAML::Exception& e) {
        throw std::invalid_argument(std::string("invalid YAML description: ") + e.what());
    }
}

} // namespace oasforge
