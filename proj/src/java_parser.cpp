// SPDX-License-Identifier: Apache-2.0
#include "java_parser.hpp"

#include "oasforge/http_status.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <utility>

namespace oasforge::java {

namespace {

constexpr auto kModifiers = std::to_array<std::string_view>({
    "public", "protected", "private", "static", "final", "abstract", "native",
    "synchronized", "transient", "volatile", "strictfp", "default", "sealed",
});

constexpr auto kPrimitives = std::to_array<std::string_view>({
    "boolean", "byte", "char", "short", "int", "long", "float", "double", "void",
});

// Words that can never name a type or a declaration.
constexpr auto kReserved = std::to_array<std::string_view>({
    "class", "interface", "enum", "return", "new", "throw", "if", "else", "for",
    "while", "do", "switch", "case", "break", "continue", "try", "catch", "finally",
    "package", "import", "throws", "extends", "implements", "this", "super", "null",
    "true", "false", "instanceof", "assert", "goto", "const",
});

template <std::size_t N>
bool contains(const std::array<std::string_view, N>& set, std::string_view word)
{
    return std::find(set.begin(), set.end(), word) != set.end();
}

std::string last_segment(const std::string& dotted)
{
    auto dot = dotted.rfind('.');
    return dot == std::string::npos ? dotted : dotted.substr(dot + 1);
}

std::string quote(const std::string& s, char q)
{
    std::string out(1, q);
    for (char c : s) {
        if (c == q || c == '\\')
            out += '\\';
        out += c;
    }
    out += q;
    return out;
}

std::string join_tokens(const std::vector<Token>& t, std::size_t b, std::size_t e)
{
    std::string out;
    bool prev_word = false;
    for (std::size_t k = b; k < e; ++k) {
        const Token& tok = t[k];
        bool word = tok.kind != Token::Kind::punct;
        if (word && prev_word)
            out += ' ';
        if (tok.kind == Token::Kind::string)
            out += quote(tok.text, '"');
        else if (tok.kind == Token::Kind::character)
            out += quote(tok.text, '\'');
        else
            out += tok.text;
        prev_word = word;
    }
    return out;
}

bool is_open(const Token& t) { return t.is("(") || t.is("[") || t.is("{"); }
bool is_close(const Token& t) { return t.is(")") || t.is("]") || t.is("}"); }

// Index of the token closing the group opened at `open`, or `end`.
std::size_t matching_close(const std::vector<Token>& t, std::size_t open, std::size_t end)
{
    int depth = 0;
    for (std::size_t k = open; k < end; ++k) {
        if (is_open(t[k]))
            ++depth;
        else if (is_close(t[k]) && --depth == 0)
            return k;
    }
    return end;
}

// Comma-separated ranges inside the parenthesized group starting at `open`.
std::vector<std::pair<std::size_t, std::size_t>> call_arguments(const std::vector<Token>& t,
                                                                std::size_t open, std::size_t end)
{
    std::vector<std::pair<std::size_t, std::size_t>> args;
    std::size_t close = matching_close(t, open, end);
    if (close >= end || close == open + 1)
        return args;
    int depth = 0;
    std::size_t from = open + 1;
    for (std::size_t k = open + 1; k < close; ++k) {
        if (is_open(t[k]))
            ++depth;
        else if (is_close(t[k]))
            --depth;
        else if (depth == 0 && t[k].is(",")) {
            args.emplace_back(from, k);
            from = k + 1;
        }
    }
    args.emplace_back(from, close);
    return args;
}

std::optional<AttributeValue> parse_operand(const std::vector<Token>& t, std::size_t b, std::size_t e)
{
    while (e - b >= 2 && t[b].is("(") && matching_close(t, b, e) == e - 1) {
        ++b;
        --e;
    }
    if (b >= e)
        return std::nullopt;
    const Token& first = t[b];
    if (e - b == 1) {
        switch (first.kind) {
        case Token::Kind::string:
        case Token::Kind::character: return AttributeValue::string_literal(first.text);
        case Token::Kind::integer: {
            AttributeValue v;
            v.kind = AttributeValue::Kind::integer;
            v.text = first.text;
            return v;
        }
        case Token::Kind::identifier:
            if (first.text == "true" || first.text == "false") {
                AttributeValue v;
                v.kind = AttributeValue::Kind::boolean;
                v.text = first.text;
                return v;
            }
            if (first.text == "null" || contains(kReserved, first.text))
                return std::nullopt;
            return AttributeValue::ref(first.text);
        default: return std::nullopt;
        }
    }
    if (e - b == 2 && first.is("-") && t[b + 1].kind == Token::Kind::integer) {
        AttributeValue v;
        v.kind = AttributeValue::Kind::integer;
        v.text = "-" + t[b + 1].text;
        return v;
    }
    // Dotted name, optionally ending in `.class`.
    if (!first.is_ident())
        return std::nullopt;
    std::string name = first.text;
    std::size_t k = b + 1;
    while (k + 1 < e && t[k].is(".") && t[k + 1].is_ident()) {
        if (t[k + 1].text == "class") {
            if (k + 2 != e)
                return std::nullopt;
            AttributeValue v;
            v.kind = AttributeValue::Kind::class_literal;
            v.text = name;
            v.type = contains(kPrimitives, name) ? TypeRef::primitive(name) : TypeRef::named(name);
            return v;
        }
        name += '.';
        name += t[k + 1].text;
        k += 2;
    }
    if (k != e)
        return std::nullopt;
    return AttributeValue::ref(std::move(name));
}

struct Modifiers {
    Annotations annotations;
    bool is_static = false;
    bool is_final = false;
    bool is_abstract = false;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, std::string path)
        : t_(std::move(tokens)), path_(std::move(path))
    {
    }

    ParsedUnit run()
    {
        unit_.imports = std::make_shared<ImportContext>();
        Modifiers mods = parse_modifiers();
        if (accept("package")) {
            unit_.imports->package_name = qualified_name();
            expect(";");
            mods = parse_modifiers();
        }
        while (is("import")) {
            if (!mods.annotations.empty())
                fail("annotations before import");
            parse_import();
            mods = parse_modifiers();
        }
        while (!at_end()) {
            if (accept(";")) {
                mods = parse_modifiers();
                continue;
            }
            parse_type_decl(std::move(mods), nullptr);
            mods = parse_modifiers();
        }
        if (!mods.annotations.empty())
            fail("dangling annotation");
        return std::move(unit_);
    }

private:
    const Token& cur() const { return t_[i_]; }
    const Token& at(std::size_t ahead) const { return t_[std::min(i_ + ahead, t_.size() - 1)]; }
    bool at_end() const { return cur().kind == Token::Kind::eof; }
    bool is(std::string_view p) const { return cur().is(p); }

    bool accept(std::string_view p)
    {
        if (!is(p))
            return false;
        ++i_;
        return true;
    }

    void expect(std::string_view p)
    {
        if (!accept(p))
            fail("expected '" + std::string(p) + "'");
    }

    [[noreturn]] void fail(const std::string& message) const
    {
        std::string near = at_end() ? "end of file" : "'" + cur().text + "'";
        throw SyntaxError(message + " near " + near, cur().line);
    }

    bool is_name() const
    {
        return cur().is_ident() && !contains(kReserved, cur().text) &&
               !contains(kPrimitives, cur().text);
    }

    std::string ident()
    {
        if (!is_name())
            fail("expected identifier");
        return t_[i_++].text;
    }

    std::string qualified_name()
    {
        std::string name = ident();
        while (is(".") && at(1).is_ident() && !at(1).is("class")) {
            ++i_;
            name += '.';
            name += ident();
        }
        return name;
    }

    void skip_balanced()
    {
        std::size_t close = matching_close(t_, i_, t_.size() - 1);
        if (close >= t_.size() - 1)
            fail("unbalanced '" + cur().text + "'");
        i_ = close + 1;
    }

    void parse_import()
    {
        expect("import");
        bool is_static = accept("static");
        std::string name = ident();
        bool on_demand = false;
        while (accept(".")) {
            if (accept("*")) {
                on_demand = true;
                break;
            }
            name += '.';
            name += ident();
        }
        expect(";");
        auto& imp = *unit_.imports;
        if (on_demand) {
            (is_static ? imp.static_on_demand : imp.on_demand).push_back(name);
            return;
        }
        auto dot = name.rfind('.');
        if (dot == std::string::npos)
            return;
        if (is_static)
            imp.static_single.emplace(name.substr(dot + 1), name.substr(0, dot));
        else
            imp.single.emplace(name.substr(dot + 1), name);
    }

    Modifiers parse_modifiers()
    {
        Modifiers m;
        while (true) {
            if (is("@") && !at(1).is("interface")) {
                m.annotations.push_back(parse_annotation());
            } else if (is("non") && at(1).is("-") && at(2).is("sealed")) {
                i_ += 3;
            } else if (cur().is_ident() && contains(kModifiers, cur().text)) {
                // `default:` only appears inside bodies, never here.
                const std::string& word = cur().text;
                m.is_static |= word == "static";
                m.is_final |= word == "final";
                m.is_abstract |= word == "abstract";
                ++i_;
            } else {
                return m;
            }
        }
    }

    AnnotationUse parse_annotation()
    {
        AnnotationUse a;
        a.line = cur().line;
        expect("@");
        std::string name = qualified_name();
        a.simple_name = last_segment(name);
        if (name.find('.') != std::string::npos)
            a.qualified_name = name;
        if (accept("(")) {
            if (!is(")")) {
                if (cur().is_ident() && at(1).is("=")) {
                    do {
                        std::string key = ident();
                        expect("=");
                        a.attributes.insert_or_assign(std::move(key), parse_element_value());
                    } while (accept(","));
                } else {
                    a.attributes.insert_or_assign("value", parse_element_value());
                }
            }
            expect(")");
        }
        return a;
    }

    AttributeValue parse_element_value()
    {
        AttributeValue v;
        if (is("@")) {
            v.kind = AttributeValue::Kind::annotation;
            auto nested = std::make_shared<AnnotationUse>(parse_annotation());
            v.text = nested->simple_name;
            v.nested = std::move(nested);
            return v;
        }
        if (accept("{")) {
            v.kind = AttributeValue::Kind::array;
            while (!is("}")) {
                v.items.push_back(parse_element_value());
                if (!accept(","))
                    break;
            }
            expect("}");
            return v;
        }
        std::size_t begin = i_;
        int depth = 0;
        while (!at_end()) {
            if (is_open(cur())) {
                ++depth;
            } else if (is_close(cur())) {
                if (depth == 0)
                    break;
                --depth;
            } else if (depth == 0 && (is(",") || is(";"))) {
                break;
            }
            ++i_;
        }
        if (i_ == begin)
            fail("expected annotation value");
        return parse_value_expression(t_, begin, i_);
    }

    TypeRef parse_type()
    {
        while (is("@"))
            parse_annotation();
        TypeRef t;
        if (cur().is_ident() && contains(kPrimitives, cur().text)) {
            t = TypeRef::primitive(t_[i_++].text);
        } else if (accept("?")) {
            t.form = TypeRef::Form::wildcard;
            t.raw_name = "?";
            if (accept("extends"))
                t.type_arguments.push_back(parse_type());
            else if (accept("super"))
                parse_type();
            return t;
        } else {
            std::string name = ident();
            std::vector<TypeRef> args;
            if (is("<"))
                args = parse_type_args();
            while (is(".") && at(1).is_ident() && !at(1).is("class") && !at(1).is("this")) {
                ++i_;
                while (is("@"))
                    parse_annotation();
                name += '.';
                name += ident();
                if (is("<"))
                    args = parse_type_args();
            }
            t = TypeRef::named(std::move(name), std::move(args));
        }
        while (true) {
            std::size_t save = i_;
            while (is("@"))
                parse_annotation();
            if (is("[") && at(1).is("]")) {
                i_ += 2;
                ++t.array_depth;
            } else {
                i_ = save;
                break;
            }
        }
        return t;
    }

    std::vector<TypeRef> parse_type_args()
    {
        expect("<");
        std::vector<TypeRef> args;
        if (accept(">"))
            return args;
        do {
            args.push_back(parse_type());
        } while (accept(","));
        expect(">");
        return args;
    }

    std::vector<std::string> parse_type_params()
    {
        expect("<");
        std::vector<std::string> names;
        do {
            while (is("@"))
                parse_annotation();
            names.push_back(ident());
            if (accept("extends")) {
                parse_type();
                while (accept("&"))
                    parse_type();
            }
        } while (accept(","));
        expect(">");
        return names;
    }

    std::vector<TypeRef> parse_type_list()
    {
        std::vector<TypeRef> out;
        do {
            out.push_back(parse_type());
        } while (accept(","));
        return out;
    }

    std::vector<ParameterDecl> parse_params()
    {
        expect("(");
        std::vector<ParameterDecl> params;
        if (accept(")"))
            return params;
        do {
            Modifiers pm = parse_modifiers();
            TypeRef type = parse_type();
            while (is("@"))
                parse_annotation();
            if (accept("..."))
                ++type.array_depth;
            if (accept("this"))
                continue;
            ParameterDecl p;
            p.line = cur().line;
            p.name = ident();
            if (is(".") && at(1).is("this")) {
                i_ += 2;
                continue;
            }
            while (is("[") && at(1).is("]")) {
                i_ += 2;
                ++type.array_depth;
            }
            p.type = std::move(type);
            p.annotations = std::move(pm.annotations);
            params.push_back(std::move(p));
        } while (accept(","));
        expect(")");
        return params;
    }

    bool at_type_keyword() const
    {
        return is("class") || is("interface") || is("enum") || (is("@") && at(1).is("interface")) ||
               (is("record") && at(1).is_ident() && (at(2).is("(") || at(2).is("<")));
    }

    void parse_type_decl(Modifiers mods, const ClassDecl* outer)
    {
        ClassDecl c;
        c.line = cur().line;
        if (accept("class")) {
            c.kind = ClassKind::class_;
        } else if (accept("interface")) {
            c.kind = ClassKind::interface_;
        } else if (is("@") && at(1).is("interface")) {
            i_ += 2;
            c.kind = ClassKind::interface_;
        } else if (accept("enum")) {
            c.kind = ClassKind::enum_;
        } else if (is("record") && at(1).is_ident()) {
            ++i_;
            c.kind = ClassKind::record_;
        } else {
            fail("expected type declaration");
        }
        const auto& pkg = unit_.imports->package_name;
        c.simple_name = ident();
        if (outer) {
            c.qualified_name = outer->qualified_name + "." + c.simple_name;
            c.outer_class = outer->qualified_name;
        } else {
            c.qualified_name = pkg.empty() ? c.simple_name : pkg + "." + c.simple_name;
        }
        c.package_name = pkg;
        c.annotations = std::move(mods.annotations);
        c.is_abstract = mods.is_abstract || c.kind == ClassKind::interface_;
        c.source_file = path_;
        c.imports = unit_.imports;
        if (is("<"))
            c.type_parameters = parse_type_params();
        if (c.kind == ClassKind::record_)
            parse_record_components(c);
        if (accept("extends")) {
            if (c.kind == ClassKind::interface_)
                c.interfaces = parse_type_list();
            else
                c.superclass = parse_type();
        }
        if (accept("implements")) {
            auto more = parse_type_list();
            c.interfaces.insert(c.interfaces.end(), more.begin(), more.end());
        }
        if (accept("permits"))
            parse_type_list();
        expect("{");
        if (c.kind == ClassKind::enum_)
            parse_enum_constants(c);
        while (!accept("}")) {
            if (at_end())
                fail("unterminated class body of " + c.simple_name);
            parse_member(c);
        }
        unit_.classes.push_back(std::move(c));
    }

    void parse_record_components(ClassDecl& c)
    {
        for (const auto& p : parse_params()) {
            FieldDecl f;
            f.name = p.name;
            f.type = p.type;
            f.annotations = p.annotations;
            f.is_final = true;
            f.line = p.line;
            c.fields.push_back(std::move(f));
        }
    }

    void parse_enum_constants(ClassDecl& c)
    {
        while (!is(";") && !is("}")) {
            parse_modifiers();
            c.enum_constants.push_back(ident());
            if (is("("))
                skip_balanced();
            if (is("{"))
                skip_balanced();
            if (!accept(","))
                break;
        }
        accept(";");
    }

    void parse_member(ClassDecl& c)
    {
        if (accept(";"))
            return;
        if (is("{")) {
            skip_balanced();
            return;
        }
        if (is("static") && at(1).is("{")) {
            ++i_;
            skip_balanced();
            return;
        }
        Modifiers m = parse_modifiers();
        if (at_type_keyword()) {
            parse_type_decl(std::move(m), &c);
            return;
        }
        std::vector<std::string> type_params;
        if (is("<"))
            type_params = parse_type_params();
        if (cur().is_ident() && cur().text == c.simple_name && (at(1).is("(") || at(1).is("{"))) {
            // Constructor, or compact canonical constructor of a record.
            ++i_;
            if (is("("))
                parse_params();
            if (accept("throws"))
                parse_type_list();
            if (!is("{"))
                fail("expected constructor body");
            skip_balanced();
            return;
        }
        TypeRef type = parse_type();
        int line = cur().line;
        std::string name = ident();
        if (is("(")) {
            parse_method(c, std::move(m), std::move(type), std::move(name), std::move(type_params), line);
            return;
        }
        bool in_interface = c.kind == ClassKind::interface_;
        while (true) {
            FieldDecl f;
            f.name = std::move(name);
            f.type = type;
            f.annotations = m.annotations;
            f.is_static = m.is_static || in_interface;
            f.is_final = m.is_final || in_interface;
            f.line = line;
            while (is("[") && at(1).is("]")) {
                i_ += 2;
                ++f.type.array_depth;
            }
            if (accept("=")) {
                std::size_t begin = i_;
                i_ = initializer_end();
                if (i_ == begin)
                    fail("expected initializer");
                auto value = parse_value_expression(t_, begin, i_);
                if (value.kind != AttributeValue::Kind::other)
                    f.initializer = std::move(value);
            }
            c.fields.push_back(std::move(f));
            if (!accept(","))
                break;
            line = cur().line;
            name = ident();
        }
        expect(";");
    }

    // End of a field initializer: `;` or a declarator-separating `,` at depth 0.
    // A comma only separates declarators when followed by `name =|,|;|[`,
    // which keeps `new HashMap<K, V>()` in one piece.
    std::size_t initializer_end() const
    {
        int depth = 0;
        for (std::size_t k = i_; k < t_.size() - 1; ++k) {
            const Token& tok = t_[k];
            if (is_open(tok)) {
                ++depth;
            } else if (is_close(tok)) {
                if (--depth < 0)
                    return k;
            } else if (depth == 0 && tok.is(";")) {
                return k;
            } else if (depth == 0 && tok.is(",") && t_[k + 1].is_ident()) {
                const Token& after = t_[std::min(k + 2, t_.size() - 1)];
                if (after.is("=") || after.is(",") || after.is(";") || after.is("["))
                    return k;
            }
        }
        return t_.size() - 1;
    }

    void parse_method(ClassDecl& c, Modifiers m, TypeRef return_type, std::string name,
                      std::vector<std::string> type_params, int line)
    {
        MethodDecl md;
        md.name = std::move(name);
        md.annotations = std::move(m.annotations);
        md.type_parameters = std::move(type_params);
        md.is_static = m.is_static;
        md.line = line;
        md.parameters = parse_params();
        while (is("[") && at(1).is("]")) {
            i_ += 2;
            ++return_type.array_depth;
        }
        md.return_type = std::move(return_type);
        if (accept("throws")) {
            for (auto& t : parse_type_list())
                md.declared_throws.push_back(std::move(t.raw_name));
        }
        if (accept("default")) {
            parse_element_value();
            expect(";");
        } else if (is("{")) {
            std::size_t open = i_;
            skip_balanced();
            md.body_facts = mine_body(t_, open + 1, i_ - 1);
            md.has_body = true;
        } else {
            expect(";");
        }
        c.methods.push_back(std::move(md));
    }

    std::vector<Token> t_;
    std::string path_;
    std::size_t i_ = 0;
    ParsedUnit unit_;
};

// Status expressed by one argument of a response-entity construction.
std::optional<std::string> literal_status(const std::vector<Token>& t, std::size_t b, std::size_t e)
{
    if (e - b == 1) {
        if (t[b].kind == Token::Kind::integer)
            return is_status_code(t[b].text) ? std::optional(t[b].text) : std::nullopt;
        // A bare constant from a static import of HttpStatus.
        if (t[b].is_ident())
            return status_code_for_name(t[b].text);
        return std::nullopt;
    }
    // [qualifier.]HttpStatus.NAME
    if (e - b >= 3 && t[e - 2].is(".") && t[e - 3].is("HttpStatus") && t[e - 1].is_ident())
        return status_code_for_name(t[e - 1].text);
    // HttpStatus.valueOf(201) / HttpStatusCode.valueOf(201)
    if (e - b >= 6 && t[e - 1].is(")") && t[e - 3].is("(") && t[e - 4].is("valueOf") &&
        t[e - 2].kind == Token::Kind::integer &&
        (t[e - 6].is("HttpStatus") || t[e - 6].is("HttpStatusCode")))
        return is_status_code(t[e - 2].text) ? std::optional(t[e - 2].text) : std::nullopt;
    return std::nullopt;
}

std::optional<std::string_view> shorthand_status(std::string_view method)
{
    static constexpr std::pair<std::string_view, std::string_view> table[] = {
        {"ok", "200"},           {"of", "200"},         {"ofNullable", "200"},
        {"created", "201"},      {"accepted", "202"},   {"noContent", "204"},
        {"badRequest", "400"},   {"notFound", "404"},   {"unprocessableEntity", "422"},
        {"internalServerError", "500"},
    };
    for (auto [name, code] : table)
        if (name == method)
            return code;
    return std::nullopt;
}

} // namespace

AttributeValue parse_value_expression(const std::vector<Token>& t, std::size_t b, std::size_t e)
{
    std::vector<std::pair<std::size_t, std::size_t>> operands;
    int depth = 0;
    std::size_t from = b;
    for (std::size_t k = b; k < e; ++k) {
        if (is_open(t[k]))
            ++depth;
        else if (is_close(t[k]))
            --depth;
        else if (depth == 0 && t[k].is("+") && k != b) {
            operands.emplace_back(from, k);
            from = k + 1;
        }
    }
    operands.emplace_back(from, e);

    AttributeValue concat;
    concat.kind = AttributeValue::Kind::concat;
    for (auto [ob, oe] : operands) {
        auto v = parse_operand(t, ob, oe);
        if (!v) {
            AttributeValue other;
            other.text = join_tokens(t, b, e);
            return other;
        }
        concat.items.push_back(std::move(*v));
    }
    if (concat.items.size() == 1)
        return std::move(concat.items.front());
    return concat;
}

BodyFacts mine_body(const std::vector<Token>& t, std::size_t begin, std::size_t end)
{
    BodyFacts facts;
    int returns = 0;
    int null_returns = 0;
    auto note_status = [&](std::optional<std::string> code) {
        if (code)
            facts.returned_status_literals.insert(std::move(*code));
        else
            ++facts.computed_statuses;
    };
    for (std::size_t k = begin; k < end; ++k) {
        const Token& tok = t[k];
        if (tok.is("return")) {
            ++returns;
            if (k + 2 < end && t[k + 1].is("null") && t[k + 2].is(";"))
                ++null_returns;
        } else if (tok.is("throw") && k + 2 < end && t[k + 1].is("new") && t[k + 2].is_ident()) {
            std::string name = t[k + 2].text;
            std::size_t j = k + 3;
            while (j + 1 < end && t[j].is(".") && t[j + 1].is_ident()) {
                name += '.';
                name += t[j + 1].text;
                j += 2;
            }
            facts.thrown_exception_types.insert(std::move(name));
        } else if (tok.is("new") && k + 1 < end && t[k + 1].is_ident()) {
            std::size_t j = k + 1;
            while (j + 2 < end && t[j + 1].is(".") && t[j + 2].is_ident())
                j += 2;
            if (!t[j].is("ResponseEntity"))
                continue;
            ++j;
            if (j < end && t[j].is("<")) {
                int angle = 0;
                for (; j < end; ++j) {
                    if (t[j].is("<"))
                        ++angle;
                    else if (t[j].is(">") && --angle == 0)
                        break;
                }
                ++j;
            }
            if (j >= end || !t[j].is("("))
                continue;
            auto args = call_arguments(t, j, end);
            if (!args.empty())
                note_status(literal_status(t, args.back().first, args.back().second));
        } else if (tok.is("ResponseEntity") && k + 3 < end && t[k + 1].is(".") && t[k + 2].is_ident() &&
                   t[k + 3].is("(") && !(k > begin && t[k - 1].is("new"))) {
            const std::string& method = t[k + 2].text;
            if (method == "status") {
                auto args = call_arguments(t, k + 3, end);
                if (args.size() == 1)
                    note_status(literal_status(t, args[0].first, args[0].second));
                else
                    ++facts.computed_statuses;
            } else if (auto code = shorthand_status(method)) {
                facts.returned_status_literals.emplace(*code);
            }
        }
    }
    facts.returns_null_only = returns > 0 && returns == null_returns;
    return facts;
}

ParsedUnit parse_compilation_unit(std::string_view source, const std::string& path)
{
    return Parser(tokenize(source), path).run();
}

} // namespace oasforge::java
