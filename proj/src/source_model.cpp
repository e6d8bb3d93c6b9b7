// SPDX-License-Identifier: Apache-2.0
#include "oasforge/source_model.hpp"

#include "java_parser.hpp"
#include "oasforge/logging.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <fstream>
#include <functional>
#include <iterator>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

namespace oasforge {

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Value types

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

std::string last_segment(std::string_view dotted)
{
    auto dot = dotted.rfind('.');
    return std::string(dot == std::string_view::npos ? dotted : dotted.substr(dot + 1));
}

constexpr std::string_view kFrameworkPackages[] = {
    "org.springframework.", "javax.validation.", "jakarta.validation.",
};

// Simple names that resolve implicitly through java.lang.
const std::set<std::string, std::less<>>& java_lang()
{
    static const std::set<std::string, std::less<>> names{
        "ArithmeticException", "ArrayIndexOutOfBoundsException", "Boolean", "Byte",
        "CharSequence", "Character", "Class", "ClassCastException", "ClassNotFoundException",
        "CloneNotSupportedException", "Comparable", "Double", "Enum", "Error", "Exception",
        "Float", "IllegalArgumentException", "IllegalStateException", "IndexOutOfBoundsException",
        "Integer", "InterruptedException", "Iterable", "Long", "NullPointerException", "Number",
        "NumberFormatException", "Object", "Record", "ReflectiveOperationException",
        "RuntimeException", "SecurityException", "Short", "String", "StringBuilder", "Throwable",
        "UnsupportedOperationException", "Void",
    };
    return names;
}

} // namespace

SupertypeCycleError::SupertypeCycleError(std::vector<std::string> cycle)
    : std::runtime_error("supertype cycle: " + join(cycle, " -> ")), cycle_(std::move(cycle))
{
}

TypeRef TypeRef::named(std::string name, std::vector<TypeRef> args)
{
    TypeRef t;
    t.raw_name = std::move(name);
    t.type_arguments = std::move(args);
    return t;
}

TypeRef TypeRef::primitive(std::string name)
{
    TypeRef t;
    t.raw_name = std::move(name);
    t.form = Form::primitive;
    return t;
}

std::string TypeRef::simple_name() const
{
    return last_segment(raw_name);
}

bool TypeRef::is_void() const noexcept
{
    return array_depth == 0 &&
           ((form == Form::primitive && raw_name == "void") ||
            (form == Form::named && (raw_name == "Void" || raw_name == "java.lang.Void")));
}

TypeRef TypeRef::element_type() const
{
    TypeRef t = *this;
    if (t.array_depth > 0)
        --t.array_depth;
    return t;
}

std::string TypeRef::display() const
{
    std::string out = raw_name;
    if (form == Form::wildcard && !type_arguments.empty())
        return "? extends " + type_arguments.front().display();
    if (!type_arguments.empty()) {
        out += '<';
        for (std::size_t i = 0; i < type_arguments.size(); ++i) {
            if (i)
                out += ", ";
            out += type_arguments[i].display();
        }
        out += '>';
    }
    for (int i = 0; i < array_depth; ++i)
        out += "[]";
    return out;
}

AttributeValue AttributeValue::string_literal(std::string value)
{
    AttributeValue v;
    v.kind = Kind::string;
    v.text = std::move(value);
    return v;
}

AttributeValue AttributeValue::ref(std::string dotted)
{
    AttributeValue v;
    v.kind = Kind::reference;
    v.text = std::move(dotted);
    return v;
}

std::vector<const AttributeValue*> AttributeValue::elements() const
{
    std::vector<const AttributeValue*> out;
    if (kind == Kind::array) {
        for (const auto& item : items)
            out.push_back(&item);
    } else {
        out.push_back(this);
    }
    return out;
}

bool operator==(const AttributeValue& a, const AttributeValue& b)
{
    if (std::tie(a.kind, a.text, a.items, a.type) != std::tie(b.kind, b.text, b.items, b.type))
        return false;
    if (!a.nested || !b.nested)
        return !a.nested && !b.nested;
    return *a.nested == *b.nested;
}

const AttributeValue* AnnotationUse::attribute(std::string_view name) const
{
    auto it = attributes.find(std::string(name));
    return it == attributes.end() ? nullptr : &it->second;
}

const AttributeValue* AnnotationUse::first_attribute(std::initializer_list<std::string_view> names) const
{
    for (auto name : names)
        if (const auto* v = attribute(name))
            return v;
    return nullptr;
}

bool is_annotation(const AnnotationUse& use, std::string_view simple_name)
{
    if (use.simple_name != simple_name)
        return false;
    if (use.qualified_name.empty())
        return true;
    return std::any_of(std::begin(kFrameworkPackages), std::end(kFrameworkPackages),
                       [&](std::string_view pkg) { return use.qualified_name.starts_with(pkg); });
}

const AnnotationUse* find_annotation(const Annotations& list, std::string_view simple_name)
{
    auto it = std::find_if(list.begin(), list.end(),
                           [&](const AnnotationUse& a) { return is_annotation(a, simple_name); });
    return it == list.end() ? nullptr : &*it;
}

const AnnotationUse* ClassDecl::annotation(std::string_view name) const
{
    return find_annotation(annotations, name);
}

bool operator==(const ClassDecl& a, const ClassDecl& b)
{
    auto key = [](const ClassDecl& c) {
        return std::tie(c.qualified_name, c.simple_name, c.kind, c.annotations, c.superclass,
                        c.interfaces, c.fields, c.methods, c.enum_constants, c.string_constants,
                        c.type_parameters, c.package_name, c.outer_class, c.is_abstract,
                        c.source_file, c.line);
    };
    if (key(a) != key(b))
        return false;
    if (!a.imports || !b.imports)
        return !a.imports && !b.imports;
    return *a.imports == *b.imports;
}

// ---------------------------------------------------------------------------
// Model queries

SourceModel::SourceModel(std::vector<ClassDecl> classes, Diagnostics diagnostics)
    : diagnostics_(std::move(diagnostics))
{
    for (auto& c : classes) {
        std::string name = c.qualified_name;
        if (!classes_.emplace(name, std::move(c)).second)
            throw std::invalid_argument("duplicate class " + name);
    }
}

const ClassDecl* SourceModel::find(std::string_view qualified_name) const
{
    auto it = classes_.find(std::string(qualified_name));
    return it == classes_.end() ? nullptr : &it->second;
}

namespace {

// Scope walk shared by build-time resolution and later queries.
// `inherited` enables member types of supertypes (off while supertypes
// themselves are being resolved).
std::optional<std::string> lookup_class(const SourceModel& model, std::string_view name,
                                        const ClassDecl& scope, bool inherited)
{
    auto dot = name.find('.');
    if (dot != std::string_view::npos) {
        std::string head(name.substr(0, dot));
        std::string_view rest = name.substr(dot + 1);
        if (auto outer = lookup_class(model, head, scope, inherited)) {
            std::string candidate = *outer + "." + std::string(rest);
            if (model.find(candidate))
                return candidate;
        }
        if (model.find(name))
            return std::string(name);
        return std::nullopt;
    }

    std::string simple(name);
    for (const ClassDecl* c = &scope; c; c = c->outer_class.empty() ? nullptr : model.find(c->outer_class)) {
        if (c->simple_name == simple)
            return c->qualified_name;
        std::string nested = c->qualified_name + "." + simple;
        if (model.find(nested))
            return nested;
        if (inherited) {
            for (const ClassDecl* super : all_supertypes(*c, model)) {
                std::string member = super->qualified_name + "." + simple;
                if (model.find(member))
                    return member;
            }
        }
    }
    if (!scope.imports)
        return model.find(simple) ? std::optional(simple) : std::nullopt;
    const ImportContext& imp = *scope.imports;
    if (auto it = imp.single.find(simple); it != imp.single.end()) {
        if (model.find(it->second))
            return it->second;
        return std::nullopt;
    }
    std::string same_package = imp.package_name.empty() ? simple : imp.package_name + "." + simple;
    if (model.find(same_package))
        return same_package;
    for (const auto& prefix : imp.on_demand) {
        std::string candidate = prefix + "." + simple;
        if (model.find(candidate))
            return candidate;
    }
    return std::nullopt;
}

} // namespace

std::optional<std::string> SourceModel::resolve_class(std::string_view name, const ClassDecl& scope) const
{
    return lookup_class(*this, name, scope, true);
}

TypeRef SourceModel::resolve_type_name(std::string_view name, const ClassDecl& scope) const
{
    if (auto qn = resolve_class(name, scope)) {
        TypeRef t = TypeRef::named(*qn);
        t.resolved = true;
        return t;
    }
    std::string spelled(name);
    if (scope.imports) {
        std::string head = spelled.substr(0, spelled.find('.'));
        if (auto it = scope.imports->single.find(head); it != scope.imports->single.end())
            return TypeRef::named(it->second + spelled.substr(head.size()));
    }
    if (java_lang().contains(spelled))
        return TypeRef::named("java.lang." + spelled);
    return TypeRef::named(spelled);
}

std::vector<std::string> direct_supertypes(const ClassDecl& cls)
{
    std::vector<std::string> out;
    if (cls.superclass)
        out.push_back(cls.superclass->raw_name);
    for (const auto& i : cls.interfaces)
        out.push_back(i.raw_name);
    return out;
}

std::vector<const ClassDecl*> supertype_chain(const ClassDecl& cls, const SourceModel& model)
{
    std::vector<const ClassDecl*> chain{&cls};
    std::vector<std::string> seen{cls.qualified_name};
    const ClassDecl* current = &cls;
    while (current->superclass) {
        const ClassDecl* next = model.find(current->superclass->raw_name);
        if (!next)
            break;
        if (std::find(seen.begin(), seen.end(), next->qualified_name) != seen.end()) {
            seen.push_back(next->qualified_name);
            throw SupertypeCycleError(std::move(seen));
        }
        seen.push_back(next->qualified_name);
        chain.push_back(next);
        current = next;
    }
    return chain;
}

std::vector<const ClassDecl*> all_supertypes(const ClassDecl& cls, const SourceModel& model)
{
    std::vector<const ClassDecl*> out{&cls};
    std::set<std::string> seen{cls.qualified_name};
    std::deque<const ClassDecl*> queue{&cls};
    while (!queue.empty()) {
        const ClassDecl* c = queue.front();
        queue.pop_front();
        for (const auto& name : direct_supertypes(*c)) {
            const ClassDecl* super = model.find(name);
            if (super && seen.insert(name).second) {
                out.push_back(super);
                queue.push_back(super);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Constants

namespace {

using ConstantLookup = std::function<std::optional<std::string>(const ClassDecl&, const std::string&)>;

std::optional<std::string> member_constant(const ClassDecl& owner, const std::string& name,
                                           const SourceModel& model, const ConstantLookup& lookup)
{
    for (const ClassDecl* c : all_supertypes(owner, model))
        if (auto v = lookup(*c, name))
            return v;
    return std::nullopt;
}

std::optional<std::string> evaluate_constant(const AttributeValue& value, const ClassDecl& context,
                                             const SourceModel& model, const ConstantLookup& lookup)
{
    switch (value.kind) {
    case AttributeValue::Kind::string:
    case AttributeValue::Kind::boolean: return value.text;
    case AttributeValue::Kind::integer: {
        std::string digits = value.text;
        std::erase(digits, '_');
        if (!digits.empty() && (digits.back() == 'L' || digits.back() == 'l'))
            digits.pop_back();
        return digits;
    }
    case AttributeValue::Kind::concat: {
        std::string out;
        for (const auto& part : value.items) {
            auto v = evaluate_constant(part, context, model, lookup);
            if (!v)
                return std::nullopt;
            out += *v;
        }
        return out;
    }
    case AttributeValue::Kind::reference: break;
    default: return std::nullopt;
    }

    const std::string& ref = value.text;
    auto dot = ref.rfind('.');
    if (dot != std::string::npos) {
        auto owner = model.resolve_class(std::string_view(ref).substr(0, dot), context);
        if (!owner)
            return std::nullopt;
        return member_constant(*model.find(*owner), ref.substr(dot + 1), model, lookup);
    }
    for (const ClassDecl* c = &context; c; c = c->outer_class.empty() ? nullptr : model.find(c->outer_class))
        if (auto v = member_constant(*c, ref, model, lookup))
            return v;
    if (context.imports) {
        const ImportContext& imp = *context.imports;
        if (auto it = imp.static_single.find(ref); it != imp.static_single.end())
            if (const ClassDecl* owner = model.find(it->second))
                if (auto v = member_constant(*owner, ref, model, lookup))
                    return v;
        for (const auto& owner_name : imp.static_on_demand)
            if (const ClassDecl* owner = model.find(owner_name))
                if (auto v = member_constant(*owner, ref, model, lookup))
                    return v;
    }
    for (const auto& [_, c] : model.classes())
        if (auto v = lookup(c, ref))
            return v;
    return std::nullopt;
}

} // namespace

std::optional<std::string> resolve_string_constant(const AttributeValue& value, const ClassDecl& context,
                                                   const SourceModel& model)
{
    ConstantLookup lookup = [](const ClassDecl& c, const std::string& name) -> std::optional<std::string> {
        auto it = c.string_constants.find(name);
        if (it == c.string_constants.end())
            return std::nullopt;
        return it->second;
    };
    return evaluate_constant(value, context, model, lookup);
}

// ---------------------------------------------------------------------------
// Building

class ModelBuilder {
public:
    explicit ModelBuilder(Diagnostics diagnostics) { model_.diagnostics_ = std::move(diagnostics); }

    void add(std::vector<ClassDecl> classes)
    {
        for (auto& c : classes) {
            auto [it, inserted] = model_.classes_.emplace(c.qualified_name, c);
            if (!inserted) {
                warn(diag::duplicate_class,
                     "class " + c.qualified_name + " also declared in " + it->second.source_file +
                         "; keeping the first",
                     c.source_file, c.line);
            }
        }
    }

    SourceModel finish()
    {
        auto& classes = model_.classes_;
        for (auto& [_, c] : classes) {
            if (c.superclass)
                resolve_supertype(*c.superclass, c);
            for (auto& i : c.interfaces)
                resolve_supertype(i, c);
        }
        break_cycles();
        for (auto& [_, c] : classes)
            resolve_members(c);
        compute_constants();
        return std::move(model_);
    }

private:
    void warn(std::string_view code, std::string message, const std::string& file, int line)
    {
        model_.diagnostics_.push_back({std::string(code), Severity::warning, std::move(message), file, line});
    }

    static bool is_type_variable(const std::string& name, const ClassDecl& scope, const SourceModel& model,
                                 const std::vector<std::string>& method_params)
    {
        if (name.find('.') != std::string::npos)
            return false;
        if (std::find(method_params.begin(), method_params.end(), name) != method_params.end())
            return true;
        for (const ClassDecl* c = &scope; c; c = c->outer_class.empty() ? nullptr : model.find(c->outer_class))
            if (std::find(c->type_parameters.begin(), c->type_parameters.end(), name) != c->type_parameters.end())
                return true;
        return false;
    }

    void resolve_supertype(TypeRef& t, const ClassDecl& scope)
    {
        for (auto& arg : t.type_arguments)
            resolve_type(arg, scope, {});
        if (auto qn = lookup_class(model_, t.raw_name, scope, false)) {
            t.raw_name = *qn;
            t.resolved = true;
        } else {
            t.raw_name = model_.resolve_type_name(t.raw_name, scope).raw_name;
        }
    }

    void resolve_type(TypeRef& t, const ClassDecl& scope, const std::vector<std::string>& method_params)
    {
        for (auto& arg : t.type_arguments)
            resolve_type(arg, scope, method_params);
        if (t.form != TypeRef::Form::named)
            return;
        if (is_type_variable(t.raw_name, scope, model_, method_params)) {
            t.form = TypeRef::Form::type_variable;
            return;
        }
        TypeRef r = model_.resolve_type_name(t.raw_name, scope);
        t.raw_name = std::move(r.raw_name);
        t.resolved = r.resolved;
    }

    std::string resolve_name(const std::string& name, const ClassDecl& scope)
    {
        return model_.resolve_type_name(name, scope).raw_name;
    }

    void resolve_annotations(Annotations& list, const ClassDecl& scope)
    {
        for (auto& a : list)
            resolve_annotation(a, scope);
    }

    void resolve_annotation(AnnotationUse& a, const ClassDecl& scope)
    {
        if (a.qualified_name.empty()) {
            TypeRef r = model_.resolve_type_name(a.simple_name, scope);
            if (r.raw_name.find('.') != std::string::npos && !r.raw_name.starts_with("java.lang."))
                a.qualified_name = r.raw_name;
        }
        for (auto& [_, v] : a.attributes)
            resolve_value(v, scope);
    }

    void resolve_value(AttributeValue& v, const ClassDecl& scope)
    {
        for (auto& item : v.items)
            resolve_value(item, scope);
        if (v.kind == AttributeValue::Kind::class_literal)
            resolve_type(v.type, scope, {});
        if (v.nested) {
            auto copy = std::make_shared<AnnotationUse>(*v.nested);
            resolve_annotation(*copy, scope);
            v.nested = std::move(copy);
        }
    }

    void resolve_members(ClassDecl& c)
    {
        resolve_annotations(c.annotations, c);
        for (auto& f : c.fields) {
            resolve_type(f.type, c, {});
            resolve_annotations(f.annotations, c);
            if (f.initializer)
                resolve_value(*f.initializer, c);
        }
        for (auto& m : c.methods) {
            resolve_annotations(m.annotations, c);
            resolve_type(m.return_type, c, m.type_parameters);
            for (auto& p : m.parameters) {
                resolve_type(p.type, c, m.type_parameters);
                resolve_annotations(p.annotations, c);
            }
            for (auto& t : m.declared_throws)
                t = resolve_name(t, c);
            std::set<std::string> thrown;
            for (const auto& t : m.body_facts.thrown_exception_types)
                thrown.insert(resolve_name(t, c));
            m.body_facts.thrown_exception_types = std::move(thrown);
        }
    }

    // Drops the superclass link that closes each cycle.
    void break_cycles()
    {
        for (auto& [name, start] : model_.classes_) {
            std::vector<std::string> path{name};
            ClassDecl* current = &start;
            while (current->superclass) {
                auto it = model_.classes_.find(current->superclass->raw_name);
                if (it == model_.classes_.end())
                    break;
                if (std::find(path.begin(), path.end(), it->first) != path.end()) {
                    path.push_back(it->first);
                    warn(diag::supertype_cycle, "supertype cycle " + join(path, " -> ") + "; dropping link from " +
                                                    current->qualified_name,
                         current->source_file, current->line);
                    current->superclass.reset();
                    break;
                }
                path.push_back(it->first);
                current = &it->second;
            }
        }
        // Interfaces are walked with visited sets everywhere, so only
        // self-references need pruning.
        for (auto& [name, c] : model_.classes_)
            std::erase_if(c.interfaces, [&](const TypeRef& t) { return t.raw_name == name; });
    }

    // String plus the primitive kinds that Java folds into string concatenation.
    static bool is_constant_type(const TypeRef& t)
    {
        static const std::set<std::string, std::less<>> kinds{
            "java.lang.String", "String", "int", "long", "short", "byte", "boolean",
            "java.lang.Integer", "java.lang.Long", "Integer", "Long"};
        return t.array_depth == 0 && (t.form == TypeRef::Form::named || t.form == TypeRef::Form::primitive) &&
               kinds.contains(t.raw_name);
    }

    void compute_constants()
    {
        // Memoized evaluation over field initializers; `active` breaks
        // self-referential constant definitions.
        std::map<std::pair<std::string, std::string>, std::optional<std::string>> memo;
        std::set<std::pair<std::string, std::string>> active;
        ConstantLookup lookup = [&](const ClassDecl& c, const std::string& name) -> std::optional<std::string> {
            auto key = std::make_pair(c.qualified_name, name);
            if (auto it = memo.find(key); it != memo.end())
                return it->second;
            auto field = std::find_if(c.fields.begin(), c.fields.end(), [&](const FieldDecl& f) {
                return f.name == name && f.is_static && f.is_final && f.initializer && is_constant_type(f.type);
            });
            if (field == c.fields.end() || !active.insert(key).second)
                return std::nullopt;
            auto value = evaluate_constant(*field->initializer, c, model_, lookup);
            active.erase(key);
            memo[key] = value;
            return value;
        };
        std::vector<std::tuple<std::string, std::string, std::string>> found;
        for (const auto& [qn, c] : model_.classes_)
            for (const auto& f : c.fields)
                if (auto v = lookup(c, f.name))
                    found.emplace_back(qn, f.name, *v);
        for (auto& [qn, name, value] : found)
            model_.classes_.at(qn).string_constants.emplace(std::move(name), std::move(value));
    }

    SourceModel model_;
};

namespace {

struct ParseOutcome {
    std::vector<ClassDecl> classes;
    std::optional<Diagnostic> error;
};

ParseOutcome parse_one(const SourceFile& file)
{
    try {
        return {java::parse_compilation_unit(file.text, file.path).classes, std::nullopt};
    } catch (const java::SyntaxError& e) {
        return {{}, Diagnostic{std::string(diag::parse_error), Severity::warning,
                               std::string("skipping file: ") + e.what(), file.path, e.line()}};
    }
}

std::vector<ParseOutcome> parse_all(const std::vector<SourceFile>& files)
{
    std::vector<ParseOutcome> out(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < files.size(); i = next++)
            out[i] = parse_one(files[i]);
    };
    unsigned n = std::clamp<unsigned>(std::thread::hardware_concurrency(), 1, 8);
    n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(files.size() / 8, 1)));
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < n; ++i)
        pool.emplace_back(worker);
    worker();
    return out;
}

bool skipped_directory(const fs::path& dir)
{
    static const std::set<std::string, std::less<>> names{
        "target", "build", "out", "node_modules", "generated", "generated-sources",
    };
    std::string name = dir.filename().string();
    return name.starts_with('.') || names.contains(name);
}

} // namespace

SourceModel parse_sources(std::vector<SourceFile> files)
{
    std::sort(files.begin(), files.end(),
              [](const SourceFile& a, const SourceFile& b) { return a.path < b.path; });
    auto outcomes = parse_all(files);
    Diagnostics diagnostics;
    std::size_t parsed = 0;
    for (const auto& o : outcomes) {
        if (o.error)
            diagnostics.push_back(*o.error);
        else
            ++parsed;
    }
    if (parsed == 0) {
        std::string message = files.empty() ? "no Java source files found" : "no parsable Java source files";
        for (const auto& d : diagnostics)
            message += "\n  " + d.render();
        throw InputError(message);
    }
    ModelBuilder builder(std::move(diagnostics));
    for (auto& o : outcomes)
        builder.add(std::move(o.classes));
    return builder.finish();
}

SourceModel parse_project(const fs::path& root)
{
    std::error_code ec;
    if (!fs::is_directory(root, ec))
        throw InputError("input root does not exist or is not a directory: " + root.string());
    std::vector<SourceFile> files;
    for (auto it = fs::recursive_directory_iterator(root, fs::directory_options::skip_permission_denied, ec);
         it != fs::recursive_directory_iterator(); it.increment(ec)) {
        if (ec)
            break;
        const auto& path = it->path();
        if (it->is_directory(ec)) {
            // Test sources and generated code are not part of the served API.
            auto rel = path.lexically_relative(root).generic_string();
            if (skipped_directory(path) || rel.ends_with("src/test") || rel == "src/test")
                it.disable_recursion_pending();
            continue;
        }
        if (path.extension() != ".java" || path.filename() == "module-info.java")
            continue;
        std::ifstream in(path, std::ios::binary);
        std::ostringstream text;
        text << in.rdbuf();
        files.push_back({path.lexically_relative(root).generic_string(), text.str()});
    }
    log::debug("parsing " + std::to_string(files.size()) + " source files under " + root.string());
    return parse_sources(std::move(files));
}

} // namespace oasforge
