// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "oasforge/openapi.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace oasforge {

struct GenerationOptions {
    /// Restricts output to these profiles; empty means every profile.
    std::vector<std::string> profiles;
    bool merge = false;
    /// Analyze profile units concurrently.
    bool parallel = true;
};

struct GenerationStats {
    std::size_t classes = 0;
    std::size_t controllers = 0;
    std::size_t advices = 0;
    std::size_t operations = 0;
    std::size_t schemas = 0;
    double seconds = 0;
};

struct GenerationResult {
    std::string project;
    /// One document per profile unit, "default" first.
    std::vector<OpenApiDoc> documents;
    std::optional<OpenApiDoc> merged;
    /// Parse and analysis diagnostics, duplicates removed, in discovery order.
    Diagnostics diagnostics;
    GenerationStats stats;
};

/// Parses `root` and produces its descriptions.
/// @throws InputError, MergeConflict (only with options.merge).
GenerationResult generate_project(const std::filesystem::path& root, const GenerationOptions& options = {});

/// Same as generate_project for an already parsed model.
GenerationResult generate_model(const SourceModel& model, const std::string& project, const std::string& version,
                                const GenerationOptions& options = {});

} // namespace oasforge
