// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "oasforge/openapi.hpp"

#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace oasforge {

using MethodKey = std::pair<std::string, std::string>;                  ///< (path, VERB)
using ParameterKey = std::tuple<std::string, std::string, std::string>; ///< (path, VERB, name)
using ResponseKey = std::tuple<std::string, std::string, std::string>;  ///< (path, VERB, status)

/// Flat method/parameter/response sets; also the ground-truth shape.
struct FlatSets {
    std::set<MethodKey> methods;
    std::set<ParameterKey> parameters;
    std::set<ResponseKey> responses;

    friend bool operator==(const FlatSets&, const FlatSets&) = default;
};

using GroundTruth = FlatSets;

/// Malformed ground-truth file; line is 1-based, 0 when unknown.
class GroundTruthError : public std::runtime_error {
public:
    GroundTruthError(const std::string& message, std::string source, int line);
    const std::string& source() const noexcept { return source_; }
    int line() const noexcept { return line_; }

private:
    std::string source_;
    int line_;
};

/// Parses `{"methods":[{path,verb}], "parameters":[{path,verb,name}],
/// "responses":[{path,verb,status}]}`. Paths are normalized like the
/// analyzer's, verbs upper-cased, statuses may be strings or integers.
/// @throws GroundTruthError on malformed input or duplicate rows.
GroundTruth parse_ground_truth(std::string_view text, const std::string& source = "<memory>");
GroundTruth load_ground_truth(const std::filesystem::path& file);

/// Writes `gt` in the format read by parse_ground_truth.
Json ground_truth_json(const GroundTruth& gt);

/// Methods, named parameters plus request-body fields (following allOf and
/// `$ref`), and response statuses of `doc`.
/// @throws std::runtime_error on a dangling `$ref`.
FlatSets flatten_for_eval(const OpenApiDoc& doc);

struct CategoryScore {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;

    double precision() const noexcept { return tp + fp == 0 ? 0.0 : double(tp) / double(tp + fp); }
    double recall() const noexcept { return tp + fn == 0 ? 0.0 : double(tp) / double(tp + fn); }
    CategoryScore& operator+=(const CategoryScore& o) noexcept;

    friend bool operator==(const CategoryScore&, const CategoryScore&) = default;
};

struct EvalReport {
    std::string label;
    CategoryScore methods;
    CategoryScore parameters;
    CategoryScore responses;

    friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

EvalReport evaluate(const FlatSets& predicted, const GroundTruth& gt, std::string label = {});

/// Micro-averaged "Overall" row over `reports`.
EvalReport overall(const std::vector<EvalReport>& reports);

/// Table with one row per report plus Overall.
std::string render_table(const std::vector<EvalReport>& reports);
Json report_json(const std::vector<EvalReport>& reports);

} // namespace oasforge
