// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "oasforge/diagnostics.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oasforge {

/// Fatal problem with the analyzer input (missing root, nothing parsable).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by supertype_chain when a class (transitively) extends itself.
class SupertypeCycleError : public std::runtime_error {
public:
    SupertypeCycleError(std::vector<std::string> cycle);
    const std::vector<std::string>& cycle() const noexcept { return cycle_; }

private:
    std::vector<std::string> cycle_;
};

/// A type as written in a declaration, with its name resolved against the
/// model where possible.
struct TypeRef {
    enum class Form : std::uint8_t { named, primitive, type_variable, wildcard };

    /// Qualified when resolvable (in the model or through an import), simple otherwise.
    std::string raw_name;
    std::vector<TypeRef> type_arguments;
    int array_depth = 0;
    /// True when raw_name names a class of the model.
    bool resolved = false;
    Form form = Form::named;

    static TypeRef named(std::string name, std::vector<TypeRef> args = {});
    static TypeRef primitive(std::string name);

    std::string simple_name() const;
    bool is_primitive() const noexcept { return form == Form::primitive && array_depth == 0; }
    bool is_void() const noexcept;
    /// The same type with one array dimension removed.
    TypeRef element_type() const;
    /// Java-like spelling, e.g. `Map<String, List<Item>>[]`.
    std::string display() const;

    friend bool operator==(const TypeRef&, const TypeRef&) = default;
};

struct AnnotationUse;

/// Value of an annotation attribute or of a constant field initializer.
struct AttributeValue {
    enum class Kind : std::uint8_t {
        string,        ///< literal; `text` holds the unescaped value
        integer,       ///< `text` holds the literal digits
        boolean,       ///< `text` is "true" or "false"
        reference,     ///< constant or enum reference, `text` is the dotted name
        class_literal, ///< `Foo.class`, `type` holds the resolved class
        annotation,    ///< nested annotation in `nested`
        array,         ///< `{a, b}` elements in `items`
        concat,        ///< `a + b` operands in `items`
        other,         ///< anything else; `text` is the raw source
    };

    Kind kind = Kind::other;
    std::string text;
    std::vector<AttributeValue> items;
    TypeRef type;
    std::shared_ptr<const AnnotationUse> nested;

    static AttributeValue string_literal(std::string value);
    static AttributeValue ref(std::string dotted);

    /// Elements when this is an array, otherwise the value itself.
    std::vector<const AttributeValue*> elements() const;

    friend bool operator==(const AttributeValue& a, const AttributeValue& b);
};

struct AnnotationUse {
    std::string simple_name;
    /// Fully qualified name when the import is known; empty otherwise.
    std::string qualified_name;
    /// The implicit single attribute is stored under "value".
    std::map<std::string, AttributeValue> attributes;
    int line = 0;

    const AttributeValue* attribute(std::string_view name) const;
    /// First present attribute among `names` (alias lookup, e.g. value/path).
    const AttributeValue* first_attribute(std::initializer_list<std::string_view> names) const;

    friend bool operator==(const AnnotationUse&, const AnnotationUse&) = default;
};

using Annotations = std::vector<AnnotationUse>;

/// True when `use` is the framework annotation `simple_name`: the simple
/// name matches and, if the import is known, it comes from an allowlisted
/// framework package.
bool is_annotation(const AnnotationUse& use, std::string_view simple_name);

/// First annotation in `list` matching `simple_name` per is_annotation.
const AnnotationUse* find_annotation(const Annotations& list, std::string_view simple_name);

struct FieldDecl {
    std::string name;
    TypeRef type;
    Annotations annotations;
    bool is_static = false;
    bool is_final = false;
    /// Present only when the initializer is a constant-shaped expression.
    std::optional<AttributeValue> initializer;
    int line = 0;

    friend bool operator==(const FieldDecl&, const FieldDecl&) = default;
};

struct ParameterDecl {
    std::string name;
    TypeRef type;
    Annotations annotations;
    int line = 0;

    friend bool operator==(const ParameterDecl&, const ParameterDecl&) = default;
};

/// Facts mined from one method body. Intra-procedural only: callee bodies
/// never contribute.
struct BodyFacts {
    std::set<std::string> thrown_exception_types;
    /// Three-digit codes of literal statuses in response-entity constructions.
    std::set<std::string> returned_status_literals;
    bool returns_null_only = false;
    /// Response-entity statuses that were computed rather than literal.
    int computed_statuses = 0;

    friend bool operator==(const BodyFacts&, const BodyFacts&) = default;
};

struct MethodDecl {
    std::string name;
    Annotations annotations;
    std::vector<ParameterDecl> parameters;
    TypeRef return_type;
    std::vector<std::string> declared_throws;
    BodyFacts body_facts;
    std::vector<std::string> type_parameters;
    bool has_body = false;
    bool is_static = false;
    int line = 0;

    friend bool operator==(const MethodDecl&, const MethodDecl&) = default;
};

enum class ClassKind : std::uint8_t { class_, interface_, enum_, record_ };

/// Import scope of one compilation unit.
struct ImportContext {
    std::string package_name;
    std::map<std::string, std::string> single;        ///< simple name -> qualified
    std::vector<std::string> on_demand;               ///< `import a.b.*`
    std::map<std::string, std::string> static_single; ///< member -> owning class
    std::vector<std::string> static_on_demand;        ///< `import static a.B.*`

    friend bool operator==(const ImportContext&, const ImportContext&) = default;
};

struct ClassDecl {
    std::string qualified_name;
    std::string simple_name;
    ClassKind kind = ClassKind::class_;
    Annotations annotations;
    std::optional<TypeRef> superclass;
    std::vector<TypeRef> interfaces;
    std::vector<FieldDecl> fields;
    std::vector<MethodDecl> methods;
    std::vector<std::string> enum_constants;
    std::map<std::string, std::string> string_constants;
    std::vector<std::string> type_parameters;
    std::string package_name;
    /// Qualified name of the enclosing class for nested types.
    std::string outer_class;
    bool is_abstract = false;
    std::string source_file;
    int line = 0;
    std::shared_ptr<const ImportContext> imports;

    const AnnotationUse* annotation(std::string_view simple_name) const;

    friend bool operator==(const ClassDecl& a, const ClassDecl& b);
};

/// One source file handed to the parser.
struct SourceFile {
    std::string path;
    std::string text;
};

/// Resolved, immutable view of a parsed source tree.
class SourceModel {
public:
    SourceModel() = default;
    /// Indexes already-resolved classes as-is (no cycle breaking, no
    /// re-resolution). parse_project/parse_sources are the normal entry points.
    SourceModel(std::vector<ClassDecl> classes, Diagnostics diagnostics = {});

    const std::map<std::string, ClassDecl>& classes() const noexcept { return classes_; }
    const Diagnostics& parse_diagnostics() const noexcept { return diagnostics_; }

    const ClassDecl* find(std::string_view qualified_name) const;

    /// Resolves a (possibly dotted) type name as seen from inside `scope`
    /// using Java scoping: type variables aside, nested types of the scope
    /// and its outers, single imports, the package, on-demand imports, then
    /// fully qualified names. Returns the qualified name of a model class.
    std::optional<std::string> resolve_class(std::string_view name, const ClassDecl& scope) const;

    /// Like resolve_class but falls back to the import-qualified or simple
    /// spelling for classes outside the model.
    TypeRef resolve_type_name(std::string_view name, const ClassDecl& scope) const;

    friend bool operator==(const SourceModel&, const SourceModel&) = default;

private:
    friend class ModelBuilder;

    std::map<std::string, ClassDecl> classes_;
    Diagnostics diagnostics_;
};

/// Parses every `.java` file below `root`. Unparsable files are skipped and
/// recorded in parse_diagnostics.
/// @throws InputError when root is missing or nothing parses.
SourceModel parse_project(const std::filesystem::path& root);

/// Same as parse_project for in-memory sources; paths are only used in
/// diagnostics. Throws InputError when no file parses.
SourceModel parse_sources(std::vector<SourceFile> files);

/// Resolves literals, static final String constants and `+` concatenations.
/// Returns nullopt for anything else.
std::optional<std::string> resolve_string_constant(const AttributeValue& value,
                                                   const ClassDecl& context,
                                                   const SourceModel& model);

/// `cls`, its superclass, and so on while supertypes remain in the model.
/// @throws SupertypeCycleError on a cyclic chain.
std::vector<const ClassDecl*> supertype_chain(const ClassDecl& cls, const SourceModel& model);

/// Qualified supertype names of `cls` (superclass first, then interfaces),
/// whether or not they belong to the model.
std::vector<std::string> direct_supertypes(const ClassDecl& cls);

/// Superclasses and interfaces in breadth-first order, each once, `cls` first.
std::vector<const ClassDecl*> all_supertypes(const ClassDecl& cls, const SourceModel& model);

} // namespace oasforge
