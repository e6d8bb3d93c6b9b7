// SPDX-License-Identifier: Apache-2.0
#include "oasforge/cli.hpp"
#include "oasforge/eval.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <sstream>

using namespace oasforge;
using namespace oasforge::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> listing(const fs::path& dir)
{
    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(dir))
        names.push_back(e.path().filename().string());
    std::ranges::sort(names);
    return names;
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("generate on a single-profile fixture writes one file")
    {
        auto out = scratch_dir("cli");
        auto r = run({"generate", "--input", project_dir("path_regex").string(), "--output", out.string()});
        CHECK(r.code == cli::kExitOk);
        CHECK(listing(out) == std::vector<std::string>{"path_regex-default.openapi.json"});
        CHECK(read_text(out / "path_regex-default.openapi.json") ==
              read_text(golden_dir() / "path_regex-default.openapi.json"));
        CHECK(r.out.find("operations:  3") != std::string::npos);
        fs::remove_all(out);
    }

    TEST_CASE("generate on the two-profile fixture names files by profile")
    {
        auto out = scratch_dir("cli");
        auto r = run({"generate", "--input", project_dir("profile_split").string(), "--output", out.string(),
                      "--profiles", "external,internal"});
        CHECK(r.code == cli::kExitOk);
        CHECK(listing(out) ==
              std::vector<std::string>{"profile_split-external.openapi.json", "profile_split-internal.openapi.json"});
        fs::remove_all(out);
    }

    TEST_CASE("yaml output and merged file")
    {
        auto out = scratch_dir("cli");
        auto r = run({"generate", "-i", project_dir("request_body").string(), "-o", out.string(), "--format", "yaml",
                      "--merge"});
        CHECK(r.code == cli::kExitOk);
        CHECK(listing(out) ==
              std::vector<std::string>{"request_body-default.openapi.yaml", "request_body-merged.openapi.yaml"});
        CHECK(read_text(out / "request_body-default.openapi.yaml").starts_with("openapi: 3.0.3"));
        fs::remove_all(out);
    }

    TEST_CASE("merging conflicting profiles fails")
    {
        auto out = scratch_dir("cli");
        auto r = run({"generate", "--input", project_dir("profile_split").string(), "--output", out.string(),
                      "--merge"});
        CHECK(r.code == cli::kExitFailure);
        CHECK(r.err.find("merge conflict") != std::string::npos);
        fs::remove_all(out);
    }

    TEST_CASE("fail-on-diagnostics returns 2 only when diagnostics occurred")
    {
        auto out = scratch_dir("cli");
        auto noisy = run({"generate", "--input", project_dir("syntax_error").string(), "--output", out.string(),
                          "--fail-on-diagnostics"});
        CHECK(noisy.code == cli::kExitDiagnostics);
        CHECK(noisy.err.find("PARSE_ERROR: ") != std::string::npos);
        auto quiet = run({"generate", "--input", project_dir("path_regex").string(), "--output", out.string(),
                          "--fail-on-diagnostics"});
        CHECK(quiet.code == cli::kExitOk);
        CHECK(run({"generate", "--input", project_dir("syntax_error").string(), "--output", out.string()}).code ==
              cli::kExitOk);
        fs::remove_all(out);
    }

    TEST_CASE("usage errors exit 1")
    {
        CHECK(run({}).code == cli::kExitFailure);
        CHECK(run({"generate", "--input", "x"}).code == cli::kExitFailure);
        CHECK(run({"generate", "--bogus"}).code == cli::kExitFailure);
        CHECK(run({"generate", "--input", "/does/not/exist", "--output", "/tmp/x"}).code == cli::kExitFailure);
        CHECK(run({"generate", "--input", project_dir("path_regex").string(), "--output", "/tmp/x", "--format",
                   "xml"})
                  .code == cli::kExitFailure);
        auto same = run({"generate", "--input", project_dir("path_regex").string(), "--output",
                         project_dir("path_regex").string()});
        CHECK(same.code == cli::kExitFailure);
        CHECK(run({"evaluate", "--oas", "/nope.json", "--gt", "/nope.json"}).code == cli::kExitFailure);
        CHECK(run({"--help"}).code == cli::kExitOk);
    }

    TEST_CASE("evaluate prints a three-category table and writes a JSON report")
    {
        auto out = scratch_dir("cli");
        REQUIRE(run({"generate", "--input", project_dir("profile_split").string(), "--output", out.string()}).code ==
                0);
        auto report = out / "report" / "eval.json";
        auto r = run({"evaluate", "--oas", (out / "profile_split-external.openapi.json").string(), "--gt",
                      (fixtures_dir() / "gt" / "profile_split-external.json").string(), "--report-json",
                      report.string()});
        CHECK(r.code == cli::kExitOk);
        CHECK(r.out.find("Methods") != std::string::npos);
        CHECK(r.out.find("Parameters") != std::string::npos);
        CHECK(r.out.find("Responses") != std::string::npos);
        auto j = Json::parse(read_text(report));
        CHECK(j["overall"]["methods"]["precision"] == 1.0);
        CHECK(j["overall"]["parameters"]["recall"] == 1.0);

        auto gt_dir = scratch_dir("cli-gt");
        fs::copy_file(fixtures_dir() / "gt" / "profile_split-external.json", gt_dir / "profile_split-external.json");
        auto dir = run({"evaluate", "--oas", out.string(), "--gt", gt_dir.string()});
        CHECK(dir.code == cli::kExitOk);
        CHECK(dir.out.find("profile_split-external") != std::string::npos);
        CHECK(dir.err.find("no ground truth") != std::string::npos);

        write_text(gt_dir / "bad.json", "{\"methods\": [\n{\"path\": 1}]}");
        auto bad = run({"evaluate", "--oas", (out / "profile_split-external.openapi.json").string(), "--gt",
                        (gt_dir / "bad.json").string()});
        CHECK(bad.code == cli::kExitFailure);
        CHECK(bad.err.find("bad.json:2") != std::string::npos);
        fs::remove_all(out);
        fs::remove_all(gt_dir);
    }
}
