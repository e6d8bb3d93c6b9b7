// SPDX-License-Identifier: Apache-2.0
#include "oasforge/cli.hpp"

#include "oasforge/eval.hpp"
#include "oasforge/logging.hpp"
#include "oasforge/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

namespace fs = std::filesystem;

namespace oasforge::cli {

namespace {

struct GenerateConfig {
    fs::path input;
    fs::path output;
    std::string format = "json";
    bool merge = false;
    std::vector<std::string> profiles;
    bool fail_on_diagnostics = false;
};

struct EvaluateConfig {
    fs::path oas;
    fs::path gt;
    fs::path report_json;
};

bool same_directory(const fs::path& a, const fs::path& b)
{
    std::error_code ec;
    return fs::weakly_canonical(a, ec) == fs::weakly_canonical(b, ec);
}

void write_file(const fs::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << content;
    if (!out)
        throw std::runtime_error("failed writing " + path.string());
}

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// "svc-default.openapi.json" -> "svc-default"; "svc-default.json" -> "svc-default".
std::string description_stem(const fs::path& p)
{
    std::string name = p.filename().string();
    for (std::string_view suffix : {".openapi.json", ".openapi.yaml", ".openapi.yml", ".json", ".yaml", ".yml"})
        if (name.size() > suffix.size() && name.ends_with(suffix))
            return name.substr(0, name.size() - suffix.size());
    return p.stem().string();
}

std::map<std::string, fs::path> files_by_stem(const fs::path& dir, bool descriptions)
{
    std::map<std::string, fs::path> out;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file())
            continue;
        std::string name = entry.path().filename().string();
        bool wanted = descriptions ? name.find(".openapi.") != std::string::npos : name.ends_with(".json");
        if (wanted)
            out.emplace(description_stem(entry.path()), entry.path());
    }
    return out;
}

int run_generate(const GenerateConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (!fs::is_directory(cfg.input)) {
        err << "error: input directory " << cfg.input.string() << " does not exist\n";
        return kExitFailure;
    }
    if (same_directory(cfg.input, cfg.output)) {
        err << "error: output directory must differ from the input root\n";
        return kExitFailure;
    }
    GenerationOptions options;
    options.merge = cfg.merge;
    options.profiles = cfg.profiles;
    const OutputFormat format = cfg.format == "yaml" ? OutputFormat::yaml : OutputFormat::json;
    const std::string ext = format == OutputFormat::yaml ? "yaml" : "json";

    GenerationResult result = generate_project(cfg.input, options);
    const Severity threshold = log::level();
    for (const auto& d : result.diagnostics)
        if (d.severity <= threshold)
            err << d.render() << "\n";

    fs::create_directories(cfg.output);
    std::vector<fs::path> written;
    for (const auto& doc : result.documents) {
        fs::path file = cfg.output / (result.project + "-" + doc.profile + ".openapi." + ext);
        write_file(file, serialize(doc, format));
        written.push_back(file);
    }
    if (result.merged) {
        fs::path file = cfg.output / (result.project + "-merged.openapi." + ext);
        write_file(file, serialize(*result.merged, format));
        written.push_back(file);
    }

    out << "project:     " << result.project << "\n";
    out << "profiles:   ";
    for (const auto& doc : result.documents)
        out << " " << doc.profile;
    out << "\n";
    out << "controllers: " << result.stats.controllers << " (" << result.stats.advices << " advices)\n";
    out << "operations:  " << result.stats.operations << "\n";
    out << "schemas:     " << result.stats.schemas << "\n";
    out << "diagnostics: " << result.diagnostics.size() << "\n";
    for (const auto& f : written)
        out << "wrote " << f.string() << "\n";

    if (cfg.fail_on_diagnostics && !result.diagnostics.empty())
        return kExitDiagnostics;
    return kExitOk;
}

int run_evaluate(const EvaluateConfig& cfg, std::ostream& out, std::ostream& err)
{
    std::vector<std::pair<fs::path, fs::path>> pairs;
    if (fs::is_directory(cfg.oas) != fs::is_directory(cfg.gt)) {
        err << "error: --oas and --gt must both be files or both be directories\n";
        return kExitFailure;
    }
    if (fs::is_directory(cfg.oas)) {
        auto descriptions = files_by_stem(cfg.oas, true);
        auto truths = files_by_stem(cfg.gt, false);
        for (const auto& [stem, gt] : truths) {
            auto it = descriptions.find(stem);
            if (it == descriptions.end()) {
                err << "warning: no description for ground truth " << gt.string() << "\n";
                continue;
            }
            pairs.emplace_back(it->second, gt);
        }
        for (const auto& [stem, d] : descriptions)
            if (!truths.contains(stem))
                err << "warning: no ground truth for " << d.string() << "\n";
    } else {
        if (!fs::exists(cfg.oas) || !fs::exists(cfg.gt)) {
            err << "error: " << (fs::exists(cfg.oas) ? cfg.gt : cfg.oas).string() << " does not exist\n";
            return kExitFailure;
        }
        pairs.emplace_back(cfg.oas, cfg.gt);
    }
    if (pairs.empty()) {
        err << "error: nothing to evaluate\n";
        return kExitFailure;
    }

    std::vector<EvalReport> reports;
    for (const auto& [oas, gt] : pairs) {
        OpenApiDoc doc = parse_document(read_file(oas));
        reports.push_back(evaluate(flatten_for_eval(doc), load_ground_truth(gt), description_stem(oas)));
    }
    out << render_table(reports);
    if (!cfg.report_json.empty()) {
        if (cfg.report_json.has_parent_path())
            fs::create_directories(cfg.report_json.parent_path());
        write_file(cfg.report_json, report_json(reports).dump(2) + "\n");
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Generates OpenAPI descriptions from Spring Boot sources", "oas-forge"};
    app.require_subcommand(1);

    GenerateConfig gen;
    auto* generate = app.add_subcommand("generate", "Write one description per Spring profile");
    generate->add_option("--input,-i", gen.input, "Project source root")->required();
    generate->add_option("--output,-o", gen.output, "Output directory")->required();
    generate->add_option("--format,-f", gen.format, "Output format")->check(CLI::IsMember({"json", "yaml"}));
    generate->add_flag("--merge", gen.merge, "Also write the merged description");
    generate->add_option("--profiles", gen.profiles, "Only these profiles (comma separated)")->delimiter(',');
    generate->add_flag("--fail-on-diagnostics", gen.fail_on_diagnostics, "Exit with 2 when diagnostics occurred");

    EvaluateConfig ev;
    auto* evaluate_cmd = app.add_subcommand("evaluate", "Score descriptions against ground truth");
    evaluate_cmd->add_option("--oas", ev.oas, "Description file or directory")->required();
    evaluate_cmd->add_option("--gt", ev.gt, "Ground-truth file or directory")->required();
    evaluate_cmd->add_option("--report-json", ev.report_json, "Write the report as JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run 'oas-forge --help' for usage\n";
        return kExitFailure;
    }

    try {
        if (generate->parsed())
            return run_generate(gen, out, err);
        return run_evaluate(ev, out, err);
    } catch (const MergeConflict& e) {
        err << "error: " << e.what() << "\n";
    } catch (const GroundTruthError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitFailure;
}

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace oasforge::cli
