// SPDX-License-Identifier: Apache-2.0
#include "oasforge/endpoint_analyzer.hpp"

#include "oasforge/http_status.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace oasforge {

namespace {

constexpr std::array<std::string_view, 7> kVerbNames{"get", "post", "put", "delete", "patch", "head", "options"};

const std::map<std::string_view, HttpVerb> kVerbMappings{
    {"GetMapping", HttpVerb::get},       {"PostMapping", HttpVerb::post},
    {"PutMapping", HttpVerb::put},       {"DeleteMapping", HttpVerb::delete_},
    {"PatchMapping", HttpVerb::patch},
};

const std::set<std::string_view> kServletTypes{
    "HttpServletRequest", "HttpServletResponse", "ServletRequest",    "ServletResponse",
    "HttpSession",        "WebRequest",          "NativeWebRequest",  "ServerHttpRequest",
    "ServerHttpResponse", "ServerWebExchange",   "Principal",         "Authentication",
    "BindingResult",      "Errors",              "Model",             "ModelMap",
    "RedirectAttributes", "SessionStatus",       "UriComponentsBuilder", "InputStream",
    "OutputStream",       "Reader",              "Writer",            "HttpMethod",
    "TimeZone",           "SecurityContext",     "ModelAndView",      "HttpEntity",
};

const std::set<std::string_view> kUnsupportedAnnotations{
    "CookieValue", "RequestPart", "MatrixVariable", "RequestAttribute", "SessionAttribute",
};

const std::set<std::string_view> kMapLikeParameters{
    "Map", "HashMap", "LinkedHashMap", "MultiValueMap", "LinkedMultiValueMap", "HttpHeaders",
};

// Child -> parent for exceptions that live outside analyzed sources.
const std::map<std::string_view, std::string_view> kJdkExceptionParents{
    {"Exception", "Throwable"},
    {"Error", "Throwable"},
    {"RuntimeException", "Exception"},
    {"IOException", "Exception"},
    {"UncheckedIOException", "RuntimeException"},
    {"FileNotFoundException", "IOException"},
    {"InterruptedException", "Exception"},
    {"ReflectiveOperationException", "Exception"},
    {"ClassNotFoundException", "ReflectiveOperationException"},
    {"CloneNotSupportedException", "Exception"},
    {"TimeoutException", "Exception"},
    {"ExecutionException", "Exception"},
    {"URISyntaxException", "Exception"},
    {"ParseException", "Exception"},
    {"SQLException", "Exception"},
    {"GeneralSecurityException", "Exception"},
    {"IllegalArgumentException", "RuntimeException"},
    {"NumberFormatException", "IllegalArgumentException"},
    {"IllegalStateException", "RuntimeException"},
    {"UnsupportedOperationException", "RuntimeException"},
    {"NullPointerException", "RuntimeException"},
    {"ArithmeticException", "RuntimeException"},
    {"ClassCastException", "RuntimeException"},
    {"IndexOutOfBoundsException", "RuntimeException"},
    {"ArrayIndexOutOfBoundsException", "IndexOutOfBoundsException"},
    {"StringIndexOutOfBoundsException", "IndexOutOfBoundsException"},
    {"ConcurrentModificationException", "RuntimeException"},
    {"NoSuchElementException", "RuntimeException"},
    {"SecurityException", "RuntimeException"},
    {"DateTimeException", "RuntimeException"},
    {"DateTimeParseException", "DateTimeException"},
    {"PersistenceException", "RuntimeException"},
    {"EntityNotFoundException", "PersistenceException"},
    {"EntityExistsException", "PersistenceException"},
    {"NoResultException", "PersistenceException"},
    {"NonUniqueResultException", "PersistenceException"},
    {"OptimisticLockException", "PersistenceException"},
    {"ValidationException", "RuntimeException"},
    {"ConstraintViolationException", "ValidationException"},
    {"OutOfMemoryError", "Error"},
    {"StackOverflowError", "Error"},
    {"AssertionError", "Error"},
};

std::string last_segment(std::string_view dotted)
{
    auto dot = dotted.rfind('.');
    return std::string(dot == std::string_view::npos ? dotted : dotted.substr(dot + 1));
}

/// Source spelling of an unresolvable constant expression.
std::string raw_text(const AttributeValue& v)
{
    if (v.kind == AttributeValue::Kind::concat) {
        std::string out;
        for (const auto& item : v.items)
            out += raw_text(item);
        return out;
    }
    return v.text;
}

std::string method_signature(const MethodDecl& m)
{
    std::string sig = m.name + "(";
    for (std::size_t i = 0; i < m.parameters.size(); ++i) {
        if (i)
            sig += ",";
        sig += m.parameters[i].type.display();
    }
    return sig + ")";
}

struct Mapping {
    const AnnotationUse* annotation = nullptr;
    std::optional<HttpVerb> fixed_verb;
};

std::optional<Mapping> mapping_of(const Annotations& annotations)
{
    for (const auto& a : annotations) {
        if (is_annotation(a, "RequestMapping"))
            return Mapping{&a, std::nullopt};
        for (const auto& [name, verb] : kVerbMappings)
            if (is_annotation(a, name))
                return Mapping{&a, verb};
    }
    return std::nullopt;
}

std::vector<HttpVerb> declared_verbs(const AnnotationUse& a)
{
    std::vector<HttpVerb> out;
    if (const AttributeValue* m = a.attribute("method"))
        for (const AttributeValue* e : m->elements())
            if (auto v = parse_verb(last_segment(e->text)); v && std::ranges::find(out, *v) == out.end())
                out.push_back(*v);
    std::ranges::sort(out);
    return out;
}

std::optional<bool> boolean_attribute(const AnnotationUse& a, std::string_view name)
{
    const AttributeValue* v = a.attribute(name);
    if (!v || v->kind != AttributeValue::Kind::boolean)
        return std::nullopt;
    return v->text == "true";
}

/// Status named by a response-status annotation, if readable.
std::optional<std::string> annotated_status(const AnnotationUse* a)
{
    if (!a)
        return std::nullopt;
    const AttributeValue* v = a->first_attribute({"value", "code"});
    if (!v)
        return std::nullopt;
    if (v->kind == AttributeValue::Kind::integer && is_status_code(v->text))
        return v->text;
    return status_code_for_name(last_segment(v->text));
}

bool is_template_variable(const TypeRef& t)
{
    return t.form == TypeRef::Form::type_variable || t.form == TypeRef::Form::wildcard;
}

struct TemplateSplit {
    std::string clean;
    std::vector<PathConstraint> constraints;
    bool balanced = true;
};

TemplateSplit strip_templates(std::string_view segment)
{
    TemplateSplit out;
    std::size_t i = 0;
    while (i < segment.size()) {
        char c = segment[i];
        if (c == '}') {
            return {std::string(segment), {}, false};
        }
        if (c != '{') {
            out.clean += c;
            ++i;
            continue;
        }
        int depth = 0;
        std::size_t close = std::string_view::npos;
        for (std::size_t j = i; j < segment.size(); ++j) {
            if (segment[j] == '\\') {
                ++j;
                continue;
            }
            if (segment[j] == '{')
                ++depth;
            else if (segment[j] == '}' && --depth == 0) {
                close = j;
                break;
            }
        }
        if (close == std::string_view::npos)
            return {std::string(segment), {}, false};
        std::string_view inner = segment.substr(i + 1, close - i - 1);
        auto colon = inner.find(':');
        if (colon == std::string_view::npos) {
            out.clean += segment.substr(i, close - i + 1);
        } else {
            std::string name(inner.substr(0, colon));
            out.clean += "{" + name + "}";
            out.constraints.push_back({name, std::string(inner.substr(colon + 1))});
        }
        i = close + 1;
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Verbs, locations, paths

std::string_view to_string(HttpVerb verb) noexcept
{
    return kVerbNames[static_cast<std::size_t>(verb)];
}

std::optional<HttpVerb> parse_verb(std::string_view name) noexcept
{
    std::string lower;
    for (char c : name)
        lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (std::size_t i = 0; i < kVerbNames.size(); ++i)
        if (kVerbNames[i] == lower)
            return static_cast<HttpVerb>(i);
    return std::nullopt;
}

std::string_view to_string(ParameterLocation location) noexcept
{
    switch (location) {
    case ParameterLocation::path: return "path";
    case ParameterLocation::query: return "query";
    case ParameterLocation::header: return "header";
    }
    return "query";
}

std::optional<ParameterLocation> parse_location(std::string_view name) noexcept
{
    if (name == "path")
        return ParameterLocation::path;
    if (name == "query")
        return ParameterLocation::query;
    if (name == "header")
        return ParameterLocation::header;
    return std::nullopt;
}

SplitSegment split_path_pattern(std::string_view segment)
{
    TemplateSplit split = strip_templates(segment);
    SplitSegment out{std::move(split.clean), std::nullopt, split.balanced};
    if (!split.constraints.empty())
        out.constraint = split.constraints.front();
    return out;
}

PathPattern normalize_path(std::string_view raw)
{
    PathPattern out;
    std::vector<std::string> segments;
    std::string current;
    int depth = 0;
    auto flush = [&] {
        if (!current.empty())
            segments.push_back(std::move(current));
        current.clear();
    };
    for (std::size_t i = 0; i < raw.size(); ++i) {
        char c = raw[i];
        if (c == '\\' && depth > 0 && i + 1 < raw.size()) {
            current += c;
            current += raw[++i];
            continue;
        }
        if (c == '{')
            ++depth;
        else if (c == '}' && depth > 0)
            --depth;
        if (c == '/' && depth == 0)
            flush();
        else
            current += c;
    }
    flush();
    if (depth != 0)
        out.balanced = false;

    for (const auto& segment : segments) {
        TemplateSplit split = strip_templates(segment);
        out.balanced = out.balanced && split.balanced;
        out.path += "/" + split.clean;
        for (auto& c : split.constraints)
            out.constraints.push_back(std::move(c));
    }
    if (out.path.empty())
        out.path = "/";
    return out;
}

std::string clean_path(std::string_view raw)
{
    return normalize_path(raw).path;
}

std::vector<std::string> path_variables(std::string_view path)
{
    std::vector<std::string> out;
    std::size_t pos = 0;
    while ((pos = path.find('{', pos)) != std::string_view::npos) {
        auto close = path.find('}', pos);
        if (close == std::string_view::npos)
            break;
        std::string name(path.substr(pos + 1, close - pos - 1));
        if (!name.empty() && name.front() == '*')
            name.erase(0, 1);
        out.push_back(std::move(name));
        pos = close + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exceptions

std::optional<int> exception_distance(const std::string& exception, const std::string& handled,
                                      const SourceModel& model)
{
    const bool handled_in_model = model.find(handled) != nullptr;
    const std::string handled_simple = last_segment(handled);
    std::string current = exception;
    std::set<std::string> seen;
    for (int distance = 0; !current.empty() && seen.insert(current).second; ++distance) {
        const ClassDecl* cls = model.find(current);
        if (current == handled || (!handled_in_model && !cls && last_segment(current) == handled_simple))
            return distance;
        if (cls) {
            current = cls->superclass ? cls->superclass->raw_name : std::string();
        } else {
            auto it = kJdkExceptionParents.find(last_segment(current));
            current = it == kJdkExceptionParents.end() ? std::string() : std::string(it->second);
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// EndpointAnalyzer

EndpointAnalyzer::EndpointAnalyzer(const SourceModel& model, const ProfileUnit& unit, SchemaRegistry& registry,
                                   Diagnostics& diagnostics)
    : model_(model), unit_(unit), registry_(registry), diagnostics_(diagnostics)
{
}

void EndpointAnalyzer::report(std::string_view code, Severity severity, std::string message,
                              const std::string& file, int line)
{
    diagnostics_.push_back({std::string(code), severity, std::move(message), file, line});
}

namespace {

struct HandlerSite {
    const MethodDecl* body = nullptr;
    const ClassDecl* body_owner = nullptr;
    const MethodDecl* mapped = nullptr;
    const ClassDecl* mapped_owner = nullptr;
    Mapping mapping;
};

} // namespace

std::vector<EndpointMethod> EndpointAnalyzer::extract_endpoints()
{
    std::vector<EndpointMethod> out;
    for (const ClassDecl* controller : unit_.controller_set.controllers) {
        const auto chain = all_supertypes(*controller, model_);

        // Base paths and verbs of the first class-level request mapping.
        std::vector<std::string> bases{""};
        std::vector<HttpVerb> class_verbs;
        for (const ClassDecl* c : chain) {
            const AnnotationUse* rm = c->annotation("RequestMapping");
            if (!rm)
                continue;
            class_verbs = declared_verbs(*rm);
            if (const AttributeValue* v = rm->first_attribute({"value", "path"})) {
                std::vector<std::string> resolved;
                for (const AttributeValue* e : v->elements()) {
                    if (auto s = resolve_string_constant(*e, *c, model_)) {
                        resolved.push_back(*s);
                    } else {
                        report(diag::unresolved_constant, Severity::warning,
                               "cannot resolve path constant '" + raw_text(*e) + "' on " + c->qualified_name,
                               c->source_file, rm->line);
                        resolved.push_back(raw_text(*e));
                    }
                }
                if (!resolved.empty())
                    bases = std::move(resolved);
            }
            break;
        }

        std::vector<std::string> order;
        std::map<std::string, HandlerSite> sites;
        for (const ClassDecl* c : chain) {
            for (const auto& m : c->methods) {
                if (m.is_static)
                    continue;
                std::string sig = method_signature(m);
                auto [it, inserted] = sites.try_emplace(sig);
                if (inserted) {
                    order.push_back(sig);
                    it->second.body = &m;
                    it->second.body_owner = c;
                }
                if (!it->second.mapped)
                    if (auto mapping = mapping_of(m.annotations)) {
                        it->second.mapped = &m;
                        it->second.mapped_owner = c;
                        it->second.mapping = *mapping;
                    }
            }
        }

        for (const auto& sig : order) {
            const HandlerSite& site = sites.at(sig);
            if (!site.mapped)
                continue;
            const AnnotationUse& a = *site.mapping.annotation;

            std::vector<HttpVerb> verbs;
            if (site.mapping.fixed_verb)
                verbs = {*site.mapping.fixed_verb};
            else
                verbs = declared_verbs(a);
            if (verbs.empty())
                verbs = class_verbs;
            if (verbs.empty())
                verbs.assign(kAllVerbs.begin(), kAllVerbs.end());

            std::vector<std::string> method_paths;
            if (const AttributeValue* v = a.first_attribute({"value", "path"})) {
                for (const AttributeValue* e : v->elements()) {
                    if (auto s = resolve_string_constant(*e, *site.mapped_owner, model_)) {
                        method_paths.push_back(*s);
                    } else {
                        report(diag::unresolved_constant, Severity::warning,
                               "cannot resolve path constant '" + raw_text(*e) + "' on " +
                                   site.mapped_owner->qualified_name + "." + site.mapped->name,
                               site.mapped_owner->source_file, a.line ? a.line : site.mapped->line);
                        method_paths.push_back(raw_text(*e));
                    }
                }
            }
            if (method_paths.empty())
                method_paths.emplace_back();

            // Parameter annotations may live on the mapped declaration only.
            MethodDecl merged = *site.body;
            for (std::size_t i = 0; i < merged.parameters.size() && i < site.mapped->parameters.size(); ++i)
                if (merged.parameters[i].annotations.empty())
                    merged.parameters[i].annotations = site.mapped->parameters[i].annotations;
            if (!find_annotation(merged.annotations, "ResponseStatus"))
                if (const AnnotationUse* rs = find_annotation(site.mapped->annotations, "ResponseStatus"))
                    merged.annotations.push_back(*rs);

            auto responses = extract_responses(merged, *site.body_owner, *controller);
            for (const auto& base : bases) {
                for (const auto& mp : method_paths) {
                    PathPattern pattern = normalize_path(base + "/" + mp);
                    if (!pattern.balanced)
                        report(diag::unbalanced_path, Severity::warning,
                               "unbalanced braces in path '" + base + "/" + mp + "'", site.body_owner->source_file,
                               site.mapped->line);
                    auto [parameters, body] = extract_parameters(merged, *site.body_owner, pattern);
                    for (HttpVerb verb : verbs) {
                        EndpointMethod em;
                        em.path = pattern.path;
                        em.verb = verb;
                        em.handler = site.body;
                        em.controller = controller;
                        em.parameters = parameters;
                        em.request_body = body;
                        em.responses = responses;
                        out.push_back(std::move(em));
                    }
                }
            }
        }
    }
    return out;
}

std::pair<std::vector<ParameterDesc>, std::optional<RequestBodyDesc>>
EndpointAnalyzer::extract_parameters(const MethodDecl& handler, const ClassDecl& owner, const PathPattern& path)
{
    std::vector<ParameterDesc> params;
    std::optional<RequestBodyDesc> body;
    const auto variables = path_variables(path.path);
    const std::string where = owner.qualified_name + "." + handler.name;

    auto schema_of = [&](const TypeRef& type, const std::string& name, int line) {
        TypeRef base = type;
        while (base.array_depth > 0)
            base = base.element_type();
        if (is_template_variable(base)) {
            report(diag::unschematizable_parameter, Severity::warning,
                   "parameter '" + name + "' of " + where + " has no concrete type", owner.source_file, line);
            return SchemaNode::unspecified();
        }
        return schema_for_type(type, model_, registry_);
    };
    auto add = [&](ParameterDesc p, int line) {
        bool duplicate = std::ranges::any_of(
            params, [&](const ParameterDesc& q) { return q.name == p.name && q.location == p.location; });
        if (duplicate) {
            report(diag::duplicate_parameter, Severity::warning,
                   "duplicate " + std::string(to_string(p.location)) + " parameter '" + p.name + "' in " + where,
                   owner.source_file, line);
            return;
        }
        params.push_back(std::move(p));
    };
    auto explicit_name = [&](const AnnotationUse& a, const std::string& fallback) {
        if (const AttributeValue* v = a.first_attribute({"name", "value"}))
            if (auto s = resolve_string_constant(*v, owner, model_); s && !s->empty())
                return *s;
        return fallback;
    };

    for (const auto& p : handler.parameters) {
        const int line = p.line ? p.line : handler.line;
        const std::string simple = p.type.simple_name();
        const AnnotationUse* path_var = find_annotation(p.annotations, "PathVariable");
        const AnnotationUse* query = find_annotation(p.annotations, "RequestParam");
        const AnnotationUse* header = find_annotation(p.annotations, "RequestHeader");
        const AnnotationUse* request_body = find_annotation(p.annotations, "RequestBody");
        const AnnotationUse* model_attr = find_annotation(p.annotations, "ModelAttribute");

        if (request_body) {
            if (body) {
                report(diag::duplicate_parameter, Severity::warning,
                       "second request body '" + p.name + "' in " + where + " ignored", owner.source_file, line);
                continue;
            }
            body = RequestBodyDesc{schema_of(p.type, p.name, line),
                                   boolean_attribute(*request_body, "required").value_or(true), p.name};
            continue;
        }
        if (model_attr) {
            for (auto& q : expand_model_attribute(p.type, owner, line))
                add(std::move(q), line);
            continue;
        }
        const AnnotationUse* binding = path_var ? path_var : query ? query : header;
        if (!binding) {
            if (kServletTypes.contains(simple)) {
                report(diag::servlet_parameter, Severity::info,
                       "framework parameter '" + p.name + "' (" + simple + ") of " + where + " skipped",
                       owner.source_file, line);
            } else if (std::ranges::any_of(p.annotations, [](const AnnotationUse& a) {
                           return kUnsupportedAnnotations.contains(a.simple_name);
                       })) {
                report(diag::unsupported_parameter, Severity::warning,
                       "parameter '" + p.name + "' of " + where + " uses an unsupported binding", owner.source_file,
                       line);
            } else {
                report(diag::unannotated_parameter, Severity::warning,
                       "parameter '" + p.name + "' of " + where + " has no binding annotation; skipped",
                       owner.source_file, line);
            }
            continue;
        }
        if (kMapLikeParameters.contains(simple)) {
            report(diag::unsupported_parameter, Severity::warning,
                   "map-typed parameter '" + p.name + "' of " + where + " binds all values; skipped",
                   owner.source_file, line);
            continue;
        }

        ParameterDesc desc;
        desc.name = explicit_name(*binding, p.name);
        if (path_var) {
            desc.location = ParameterLocation::path;
            if (std::ranges::find(variables, desc.name) == variables.end()) {
                report(diag::unknown_path_variable, Severity::warning,
                       "path variable '" + desc.name + "' of " + where + " is not in '" + path.path + "'",
                       owner.source_file, line);
                continue;
            }
            desc.required = true;
            for (const auto& c : path.constraints)
                if (c.name == desc.name)
                    desc.pattern = c.regex;
        } else {
            desc.location = query ? ParameterLocation::query : ParameterLocation::header;
            desc.required = boolean_attribute(*binding, "required").value_or(true);
            if (binding->attribute("defaultValue") || simple == "Optional")
                desc.required = false;
        }
        desc.schema = schema_of(p.type, desc.name, line);
        add(std::move(desc), line);
    }
    return {std::move(params), std::move(body)};
}

std::vector<ParameterDesc> EndpointAnalyzer::expand_model_attribute(const TypeRef& type, const ClassDecl& owner,
                                                                    int line)
{
    const ClassDecl* cls = type.resolved ? model_.find(type.raw_name) : nullptr;
    if (!cls || type.array_depth > 0) {
        report(diag::unresolved_model_attribute, Severity::warning,
               "model attribute type '" + type.display() + "' is not part of the analyzed sources", owner.source_file,
               line);
        return {};
    }
    std::vector<ParameterDesc> out;
    for (const ClassDecl* c : supertype_chain(*cls, model_)) {
        for (const auto& f : c->fields) {
            if (f.is_static)
                continue;
            ParameterDesc p;
            p.name = f.name;
            p.location = ParameterLocation::query;
            p.required = false;
            p.schema = schema_for_type(f.type, model_, registry_);
            out.push_back(std::move(p));
        }
    }
    return out;
}

std::vector<ResponseDesc> EndpointAnalyzer::extract_responses(const MethodDecl& handler, const ClassDecl& owner,
                                                              const ClassDecl& controller)
{
    std::set<std::string> statuses = handler.body_facts.returned_status_literals;
    const AnnotationUse* rs = find_annotation(handler.annotations, "ResponseStatus");
    if (!rs)
        rs = controller.annotation("ResponseStatus");
    if (auto s = annotated_status(rs))
        statuses.insert(*s);
    if (statuses.empty())
        statuses.insert("200");
    if (handler.body_facts.computed_statuses > 0)
        report(diag::computed_status, Severity::info,
               std::to_string(handler.body_facts.computed_statuses) + " computed response status(es) in " +
                   owner.qualified_name + "." + handler.name + " ignored",
               owner.source_file, handler.line);

    std::optional<SchemaNode> schema;
    TypeRef payload = unwrap_response_wrapper(handler.return_type);
    const bool has_payload_status = std::ranges::any_of(
        statuses, [](const std::string& s) { return s.starts_with('2') && s != "204"; });
    if (has_payload_status && !payload.is_void() && !handler.body_facts.returns_null_only)
        schema = schema_for_type(payload, model_, registry_);

    std::set<std::string> exceptions(handler.declared_throws.begin(), handler.declared_throws.end());
    exceptions.insert(handler.body_facts.thrown_exception_types.begin(),
                      handler.body_facts.thrown_exception_types.end());
    for (const auto& exc : exceptions)
        statuses.insert(resolve_exception_status(exc, controller, owner.source_file, handler.line));

    std::vector<ResponseDesc> out;
    for (const auto& status : statuses) {
        ResponseDesc r{status, std::nullopt, reason_phrase(status)};
        if (status.starts_with('2') && status != "204")
            r.schema = schema;
        out.push_back(std::move(r));
    }
    return out;
}

std::string EndpointAnalyzer::resolve_exception_status(const std::string& exception, const ClassDecl& local,
                                                       const std::string& file, int line)
{
    struct Candidate {
        const MethodDecl* method = nullptr;
        const ClassDecl* owner = nullptr;
        int distance = 0;
    };
    auto best_in = [&](const std::vector<const ClassDecl*>& classes) {
        std::optional<Candidate> best;
        for (const ClassDecl* c : classes) {
            for (const auto& m : c->methods) {
                const AnnotationUse* eh = find_annotation(m.annotations, "ExceptionHandler");
                if (!eh)
                    continue;
                std::vector<std::string> handled;
                if (const AttributeValue* v = eh->first_attribute({"value"}))
                    for (const AttributeValue* e : v->elements())
                        if (e->kind == AttributeValue::Kind::class_literal)
                            handled.push_back(e->type.raw_name);
                if (handled.empty())
                    for (const auto& p : m.parameters)
                        if (exception_distance(p.type.raw_name, "java.lang.Throwable", model_))
                            handled.push_back(p.type.raw_name);
                for (const auto& h : handled)
                    if (auto d = exception_distance(exception, h, model_); d && (!best || *d < best->distance))
                        best = Candidate{&m, c, *d};
            }
        }
        return best;
    };

    auto match = best_in(all_supertypes(local, model_));
    if (!match)
        match = best_in(unit_.controller_set.advices);
    if (!match) {
        report(diag::unresolved_exception, Severity::info,
               "no exception handler for " + exception + " in " + local.qualified_name + "; using 500", file, line);
        return "500";
    }
    if (auto s = annotated_status(find_annotation(match->method->annotations, "ResponseStatus")))
        return *s;
    const auto& literals = match->method->body_facts.returned_status_literals;
    if (literals.size() == 1)
        return *literals.begin();
    report(diag::unreadable_exception_status, Severity::warning,
           "handler " + match->owner->qualified_name + "." + match->method->name + " for " + exception +
               " sets no statically readable status; using 500",
           match->owner->source_file, match->method->line);
    return "500";
}

std::vector<EndpointMethod> extract_endpoints(const ProfileUnit& unit, const SourceModel& model,
                                              SchemaRegistry& registry, Diagnostics& diagnostics)
{
    return EndpointAnalyzer(model, unit, registry, diagnostics).extract_endpoints();
}

} // namespace oasforge
