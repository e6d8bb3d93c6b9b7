// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "java_lexer.hpp"
#include "oasforge/source_model.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace oasforge::java {

/// Declarations of one compilation unit with names exactly as written.
/// Nested types are flattened into `classes` with `outer_class` set.
struct ParsedUnit {
    std::shared_ptr<ImportContext> imports;
    std::vector<ClassDecl> classes;
};

/// Parses declarations; method bodies are only mined for BodyFacts.
/// @throws SyntaxError on malformed input.
ParsedUnit parse_compilation_unit(std::string_view source, const std::string& path);

/// Mines throw sites, response-entity statuses and null returns from the
/// tokens in [begin, end). Exception names are left as written.
BodyFacts mine_body(const std::vector<Token>& tokens, std::size_t begin, std::size_t end);

/// Parses a standalone annotation element value or constant initializer.
AttributeValue parse_value_expression(const std::vector<Token>& tokens, std::size_t begin,
                                      std::size_t end);

} // namespace oasforge::java
