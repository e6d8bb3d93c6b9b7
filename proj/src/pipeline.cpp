// SPDX-License-Identifier: Apache-2.0
#include "oasforge/pipeline.hpp"

#include "oasforge/logging.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

namespace oasforge {

namespace {

struct UnitOutput {
    OpenApiDoc doc;
    Diagnostics diagnostics;
};

UnitOutput analyze_unit(const SourceModel& model, const ProfileUnit& unit, const DocumentMeta& meta)
{
    UnitOutput out;
    SchemaRegistry registry;
    auto endpoints = extract_endpoints(unit, model, registry, out.diagnostics);
    out.doc = assemble_document(endpoints, std::move(registry), meta, &out.diagnostics);
    return out;
}

void append_unique(Diagnostics& into, const Diagnostics& from, std::set<std::string>& seen)
{
    for (const auto& d : from)
        if (seen.insert(std::string(to_string(d.severity)) + "|" + d.render()).second)
            into.push_back(d);
}

} // namespace

GenerationResult generate_model(const SourceModel& model, const std::string& project, const std::string& version,
                                const GenerationOptions& options)
{
    const auto started = std::chrono::steady_clock::now();
    GenerationResult result;
    result.project = project;

    Diagnostics discovery;
    ControllerSet rest = discover_rest_classes(model);
    auto units = group_by_profile(rest, model, &discovery);
    if (!options.profiles.empty()) {
        std::set<std::string> wanted(options.profiles.begin(), options.profiles.end());
        for (const auto& p : wanted)
            if (std::ranges::none_of(units, [&](const ProfileUnit& u) { return u.profile_name == p; }))
                log::warn("profile '" + p + "' does not occur in " + project);
        std::erase_if(units, [&](const ProfileUnit& u) { return !wanted.contains(u.profile_name); });
    }

    std::vector<UnitOutput> outputs(units.size());
    auto run = [&](std::size_t i) {
        DocumentMeta meta{project, version, units[i].profile_name};
        outputs[i] = analyze_unit(model, units[i], meta);
    };
    const std::size_t workers =
        options.parallel ? std::min<std::size_t>(units.size(), std::max(1u, std::thread::hardware_concurrency())) : 1;
    if (workers <= 1) {
        for (std::size_t i = 0; i < units.size(); ++i)
            run(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < units.size();)
                    run(i);
            });
    }

    std::set<std::string> seen;
    append_unique(result.diagnostics, model.parse_diagnostics(), seen);
    append_unique(result.diagnostics, discovery, seen);
    for (auto& out : outputs) {
        append_unique(result.diagnostics, out.diagnostics, seen);
        result.stats.operations += out.doc.operation_count();
        result.documents.push_back(std::move(out.doc));
    }

    if (options.merge)
        result.merged = merge_documents(result.documents);

    std::set<std::string> schema_names;
    for (const auto& d : result.documents)
        for (const auto& [name, _] : d.components_schemas.schemas())
            schema_names.insert(name);
    result.stats.schemas = schema_names.size();
    result.stats.classes = model.classes().size();
    result.stats.controllers = rest.controllers.size();
    result.stats.advices = rest.advices.size();
    result.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

GenerationResult generate_project(const std::filesystem::path& root, const GenerationOptions& options)
{
    const auto started = std::chrono::steady_clock::now();
    SourceModel model = parse_project(root);
    std::string project = std::filesystem::weakly_canonical(root).filename().string();
    if (project.empty())
        project = "project";
    GenerationResult result = generate_model(model, project, project_version(root), options);
    result.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

} // namespace oasforge
