// SPDX-License-Identifier: Apache-2.0
#include "oasforge/endpoint_analyzer.hpp"
#include "oasforge/eval.hpp"
#include "oasforge/pipeline.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace oasforge;

namespace {

OutputFormat format_of(const std::string& name)
{
    if (name == "json")
        return OutputFormat::json;
    if (name == "yaml")
        return OutputFormat::yaml;
    throw py::value_error("format must be 'json' or 'yaml'");
}

py::dict generate(const std::string& input, std::vector<std::string> profiles, bool merge, const std::string& format)
{
    const OutputFormat fmt = format_of(format);
    GenerationOptions options;
    options.profiles = std::move(profiles);
    options.merge = merge;
    GenerationResult result;
    {
        py::gil_scoped_release unlocked;
        result = generate_project(input, options);
    }
    py::dict documents;
    for (const auto& doc : result.documents)
        documents[py::str(doc.profile)] = serialize(doc, fmt);
    py::list diagnostics;
    for (const auto& d : result.diagnostics)
        diagnostics.append(d.render());
    py::dict out;
    out["project"] = result.project;
    out["documents"] = documents;
    out["merged"] = result.merged ? py::object(py::str(serialize(*result.merged, fmt))) : py::none();
    out["diagnostics"] = diagnostics;
    out["operations"] = result.stats.operations;
    out["schemas"] = result.stats.schemas;
    return out;
}

std::string merge(const std::vector<std::string>& texts, const std::string& format)
{
    std::vector<OpenApiDoc> docs;
    for (const auto& t : texts)
        docs.push_back(parse_document(t));
    return serialize(merge_documents(docs), format_of(format));
}

std::string evaluate_text(const std::string& description, const std::string& ground_truth, const std::string& label)
{
    auto report = evaluate(flatten_for_eval(parse_document(description)), parse_ground_truth(ground_truth), label);
    return report_json({report}).dump();
}

std::string flatten_text(const std::string& description)
{
    return ground_truth_json(flatten_for_eval(parse_document(description))).dump();
}

py::tuple split(const std::string& segment)
{
    auto s = split_path_pattern(segment);
    py::object name = py::none(), regex = py::none();
    if (s.constraint) {
        name = py::str(s.constraint->name);
        regex = py::str(s.constraint->regex);
    }
    return py::make_tuple(s.clean_segment, name, regex, s.balanced);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "OpenAPI generation for Spring Boot source trees";

    static py::exception<MergeConflict> merge_error(m, "MergeConflict", PyExc_ValueError);
    static py::exception<GroundTruthError> gt_error(m, "GroundTruthError", PyExc_ValueError);
    static py::exception<InputError> input_error(m, "InputError", PyExc_OSError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const MergeConflict& e) {
            py::set_error(merge_error, e.what());
        } catch (const GroundTruthError& e) {
            py::set_error(gt_error, e.what());
        } catch (const InputError& e) {
            py::set_error(input_error, e.what());
        }
    });

    m.def("generate", &generate, py::arg("input"), py::arg("profiles") = std::vector<std::string>{},
          py::arg("merge") = false, py::arg("format") = "json",
          "Analyze a source tree; returns project name, serialized documents per profile, merged text and diagnostics.");
    m.def("merge", &merge, py::arg("documents"), py::arg("format") = "json",
          "Merge serialized descriptions of one project.");
    m.def("evaluate", &evaluate_text, py::arg("description"), py::arg("ground_truth"), py::arg("label") = "",
          "Score a description against ground-truth JSON; returns the report as JSON text.");
    m.def("flatten", &flatten_text, py::arg("description"),
          "Flat method/parameter/response sets of a description, in ground-truth JSON form.");
    m.def("split_path_pattern", &split, py::arg("segment"));
    m.def("normalize_path", [](const std::string& raw) { return clean_path(raw); }, py::arg("raw"));
    m.def("serialize", [](const std::string& text, const std::string& format) {
        return serialize(parse_document(text), format_of(format));
    }, py::arg("description"), py::arg("format") = "json", "Re-serialize a JSON or YAML description.");
}
