// SPDX-License-Identifier: Apache-2.0
#include "oasforge/eval.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

namespace oasforge {

namespace {

constexpr std::array<std::string_view, 3> kCategories{"methods", "parameters", "responses"};

/// Character iterator that counts the newlines it has stepped over.
class LineCountingIterator {
public:
    using iterator_category = std::input_iterator_tag;
    using value_type = char;
    using difference_type = std::ptrdiff_t;
    using pointer = const char*;
    using reference = const char&;

    LineCountingIterator() = default;
    LineCountingIterator(const char* p, int* line) : p_(p), line_(line) {}

    reference operator*() const { return *p_; }
    LineCountingIterator& operator++()
    {
        if (line_ && *p_ == '\n')
            ++*line_;
        ++p_;
        return *this;
    }
    LineCountingIterator operator++(int)
    {
        auto copy = *this;
        ++*this;
        return copy;
    }
    friend bool operator==(const LineCountingIterator& a, const LineCountingIterator& b) { return a.p_ == b.p_; }

private:
    const char* p_ = nullptr;
    int* line_ = nullptr;
};

/// Records the line on which each row object of the three arrays starts.
struct RowLineRecorder : nlohmann::json_sax<Json> {
    explicit RowLineRecorder(const int* line) : line_(line) {}

    bool null() override { return true; }
    bool boolean(bool) override { return true; }
    bool number_integer(number_integer_t) override { return true; }
    bool number_unsigned(number_unsigned_t) override { return true; }
    bool number_float(number_float_t, const string_t&) override { return true; }
    bool string(string_t&) override { return true; }
    bool binary(binary_t&) override { return true; }
    bool start_object(std::size_t) override
    {
        if (depth_ == 2 && !current_key_.empty())
            lines[current_key_].push_back(*line_);
        ++depth_;
        return true;
    }
    bool end_object() override
    {
        --depth_;
        return true;
    }
    bool start_array(std::size_t) override
    {
        ++depth_;
        return true;
    }
    bool end_array() override
    {
        --depth_;
        return true;
    }
    bool key(string_t& k) override
    {
        if (depth_ == 1)
            current_key_ = k;
        return true;
    }
    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override { return false; }

    std::map<std::string, std::vector<int>> lines;

private:
    const int* line_;
    int depth_ = 0;
    std::string current_key_;
};

int line_at(std::string_view text, std::size_t byte)
{
    byte = std::min(byte, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::string upper(std::string s)
{
    for (auto& c : s)
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

std::string verb_key(HttpVerb v)
{
    return upper(std::string(to_string(v)));
}

/// Field names of a request body schema, or nullopt when it is not an object.
std::optional<std::vector<std::string>> body_fields(const SchemaNode& schema, const SchemaRegistry& reg,
                                                    std::set<std::string>& visiting)
{
    switch (schema.kind) {
    case SchemaNode::Kind::ref: {
        const SchemaNode* target = reg.find(schema.ref_name);
        if (!target)
            throw std::runtime_error("dangling $ref to '" + schema.ref_name + "'");
        if (reg.external_notes().contains(schema.ref_name) || !visiting.insert(schema.ref_name).second)
            return std::nullopt;
        auto out = body_fields(*target, reg, visiting);
        visiting.erase(schema.ref_name);
        return out;
    }
    case SchemaNode::Kind::all_of: {
        std::vector<std::string> out;
        bool any = false;
        for (const auto& part : schema.children)
            if (auto fields = body_fields(part, reg, visiting)) {
                any = true;
                out.insert(out.end(), fields->begin(), fields->end());
            }
        if (!any)
            return std::nullopt;
        return out;
    }
    case SchemaNode::Kind::object: {
        std::vector<std::string> out;
        for (const auto& [name, _] : schema.properties)
            out.push_back(name);
        return out;
    }
    case SchemaNode::Kind::array: return body_fields(schema.items(), reg, visiting);
    default: return std::nullopt;
    }
}

std::string format_ratio(double v)
{
    char buf[16];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

Json score_json(const CategoryScore& s)
{
    Json j = Json::object();
    j["tp"] = s.tp;
    j["fp"] = s.fp;
    j["fn"] = s.fn;
    j["precision"] = s.precision();
    j["recall"] = s.recall();
    return j;
}

template <typename Key>
CategoryScore score(const std::set<Key>& predicted, const std::set<Key>& truth)
{
    CategoryScore s;
    for (const auto& k : predicted)
        (truth.contains(k) ? s.tp : s.fp)++;
    for (const auto& k : truth)
        if (!predicted.contains(k))
            ++s.fn;
    return s;
}

} // namespace

GroundTruthError::GroundTruthError(const std::string& message, std::string source, int line)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + message),
      source_(std::move(source)), line_(line)
{
}

GroundTruth parse_ground_truth(std::string_view text, const std::string& source)
{
    Json root;
    try {
        root = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw GroundTruthError(std::string("invalid JSON: ") + e.what(), source, line_at(text, e.byte));
    }
    if (!root.is_object())
        throw GroundTruthError("ground truth must be a JSON object", source, 1);

    int line = 1;
    RowLineRecorder recorder(&line);
    LineCountingIterator first(text.data(), &line);
    LineCountingIterator last(text.data() + text.size(), nullptr);
    Json::sax_parse(first, last, &recorder);

    GroundTruth gt;
    for (std::string_view category : kCategories) {
        auto it = root.find(std::string(category));
        if (it == root.end())
            continue;
        if (!it->is_array())
            throw GroundTruthError("'" + std::string(category) + "' must be an array", source, 0);
        const auto& lines = recorder.lines[std::string(category)];
        for (std::size_t i = 0; i < it->size(); ++i) {
            const Json& row = (*it)[i];
            const int row_line = i < lines.size() ? lines[i] : 0;
            if (!row.is_object())
                throw GroundTruthError(std::string(category) + " entries must be objects", source, row_line);
            auto field = [&](const char* name) -> std::string {
                auto f = row.find(name);
                if (f == row.end())
                    throw GroundTruthError("missing key '" + std::string(name) + "' in " + std::string(category) +
                                               " entry",
                                           source, row_line);
                if (f->is_number_integer())
                    return std::to_string(f->get<long long>());
                if (!f->is_string() || f->get<std::string>().empty())
                    throw GroundTruthError("key '" + std::string(name) + "' must be a non-empty string", source,
                                           row_line);
                return f->get<std::string>();
            };
            std::string path = clean_path(field("path"));
            std::string verb = upper(field("verb"));
            if (!parse_verb(verb))
                throw GroundTruthError("unknown verb '" + verb + "'", source, row_line);
            bool inserted = false;
            if (category == "methods") {
                inserted = gt.methods.emplace(path, verb).second;
            } else if (category == "parameters") {
                inserted = gt.parameters.emplace(path, verb, field("name")).second;
            } else {
                std::string status = field("status");
                if (status.size() != 3 || !std::ranges::all_of(status, [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                    throw GroundTruthError("status '" + status + "' is not a three-digit code", source, row_line);
                inserted = gt.responses.emplace(path, verb, status).second;
            }
            if (!inserted)
                throw GroundTruthError("duplicate " + std::string(category) + " entry", source, row_line);
        }
    }
    return gt;
}

GroundTruth load_ground_truth(const std::filesystem::path& file)
{
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw GroundTruthError("cannot read file", file.string(), 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_ground_truth(ss.str(), file.string());
}

Json ground_truth_json(const GroundTruth& gt)
{
    Json j = Json::object();
    j["methods"] = Json::array();
    for (const auto& [path, verb] : gt.methods)
        j["methods"].push_back({{"path", path}, {"verb", verb}});
    j["parameters"] = Json::array();
    for (const auto& [path, verb, name] : gt.parameters)
        j["parameters"].push_back({{"path", path}, {"verb", verb}, {"name", name}});
    j["responses"] = Json::array();
    for (const auto& [path, verb, status] : gt.responses)
        j["responses"].push_back({{"path", path}, {"verb", verb}, {"status", status}});
    return j;
}

FlatSets flatten_for_eval(const OpenApiDoc& doc)
{
    FlatSets out;
    const auto& reg = doc.components_schemas;
    for (const auto& name : reg.referenced_names())
        if (!reg.contains(name))
            throw std::runtime_error("dangling $ref to '" + name + "'");
    for (const auto& [raw_path, ops] : doc.paths) {
        std::string path = clean_path(raw_path);
        for (const auto& [verb, op] : ops) {
            std::string v = verb_key(verb);
            out.methods.emplace(path, v);
            for (const auto& p : op.parameters)
                out.parameters.emplace(path, v, p.name);
            if (op.request_body) {
                std::set<std::string> visiting;
                if (auto fields = body_fields(op.request_body->schema, reg, visiting)) {
                    for (const auto& f : *fields)
                        out.parameters.emplace(path, v, f);
                } else {
                    const auto& name = op.request_body->name;
                    out.parameters.emplace(path, v, name.empty() ? "body" : name);
                }
            }
            for (const auto& [status, _] : op.responses)
                out.responses.emplace(path, v, status);
        }
    }
    return out;
}

CategoryScore& CategoryScore::operator+=(const CategoryScore& o) noexcept
{
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
}

EvalReport evaluate(const FlatSets& predicted, const GroundTruth& gt, std::string label)
{
    return {std::move(label), score(predicted.methods, gt.methods), score(predicted.parameters, gt.parameters),
            score(predicted.responses, gt.responses)};
}

EvalReport overall(const std::vector<EvalReport>& reports)
{
    EvalReport total{"Overall", {}, {}, {}};
    for (const auto& r : reports) {
        total.methods += r.methods;
        total.parameters += r.parameters;
        total.responses += r.responses;
    }
    return total;
}

std::string render_table(const std::vector<EvalReport>& reports)
{
    std::vector<EvalReport> rows = reports;
    rows.push_back(overall(reports));
    std::size_t width = 7;
    for (const auto& r : rows)
        width = std::max(width, r.label.size());

    std::ostringstream out;
    auto pad = [](std::string s, std::size_t w) {
        s.resize(std::max(s.size(), w), ' ');
        return s;
    };
    out << pad("Project", width) << " | " << pad("Methods", 19) << " | " << pad("Parameters", 19) << " | "
        << "Responses\n";
    out << pad("", width) << " | " << pad("P     R     n", 19) << " | " << pad("P     R     n", 19) << " | "
        << "P     R     n\n";
    out << std::string(width, '-') << "-+-" << std::string(19, '-') << "-+-" << std::string(19, '-') << "-+-"
        << std::string(19, '-') << "\n";
    auto cell = [&](const CategoryScore& s) {
        return pad(format_ratio(s.precision()) + "  " + format_ratio(s.recall()) + "  " + std::to_string(s.tp + s.fn),
                   19);
    };
    for (const auto& r : rows)
        out << pad(r.label, width) << " | " << cell(r.methods) << " | " << cell(r.parameters) << " | "
            << cell(r.responses) << "\n";
    return out.str();
}

Json report_json(const std::vector<EvalReport>& reports)
{
    Json rows = Json::array();
    auto row = [](const EvalReport& r) {
        Json j = Json::object();
        j["project"] = r.label;
        j["methods"] = score_json(r.methods);
        j["parameters"] = score_json(r.parameters);
        j["responses"] = score_json(r.responses);
        return j;
    };
    for (const auto& r : reports)
        rows.push_back(row(r));
    Json j = Json::object();
    j["projects"] = std::move(rows);
    j["overall"] = row(overall(reports));
    return j;
}

} // namespace oasforge
