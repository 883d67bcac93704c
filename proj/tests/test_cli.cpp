#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hookcontent/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = hcf::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("count commands")
    {
        auto r = run({"count", "ssyt", "--shape", "2,1", "--letters", "2", "--oracle"});
        CHECK(r.code == hcf::cli::kOk);
        CHECK(r.out == "2\noracle 2 agree\n");

        r = run({"count", "syt", "--shape", "2,2"});
        CHECK(r.code == hcf::cli::kOk);
        CHECK(r.out == "2\n");

        r = run({"count", "ballots", "--multi", "--n", "2,1", "--steps", "2"});
        CHECK(r.out == "2\n");

        r = run({"--format", "json", "count", "ballots", "--single", "--n", "2,1", "--steps", "3", "--oracle"});
        CHECK(r.code == hcf::cli::kOk);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j.dump().find("\"2\"") != std::string::npos);
    }

    TEST_CASE("bad input is a parse error")
    {
        CHECK(run({"count", "ssyt", "--shape", "1,2", "--letters", "2"}).code == hcf::cli::kParseError);
        CHECK(run({"count", "ssyt", "--shape", "x", "--letters", "2"}).code == hcf::cli::kParseError);
        CHECK(run({"frobnicate"}).code == hcf::cli::kParseError);
        CHECK(run({"--format", "yaml", "count", "syt", "--shape", "1"}).code == hcf::cli::kParseError);
    }

    TEST_CASE("budget overrun has its own exit code")
    {
        const auto r = run({"--budget", "10", "count", "ssyt", "--shape", "4,4", "--letters", "6", "--oracle"});
        CHECK(r.code == hcf::cli::kBudgetExceeded);
        CHECK_FALSE(r.err.empty());
    }

    TEST_CASE("verify commands pass")
    {
        CHECK(run({"verify", "lemma2", "--n-max", "2"}).code == hcf::cli::kOk);
        CHECK(run({"verify", "theorem1", "--max-cells", "4", "--max-steps", "3"}).code == hcf::cli::kOk);
        CHECK(run({"verify", "theorem2", "--max-cells", "5"}).code == hcf::cli::kOk);
        CHECK(run({"verify", "hooks", "--max-cells", "5"}).code == hcf::cli::kOk);
        CHECK(run({"verify", "hlf-identity", "--n-max", "3"}).code == hcf::cli::kOk);

        const auto r = run({"--format", "json", "verify", "hooks", "--max-cells", "3"});
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j.at("pass") == true);
        CHECK(j.at("failures") == "0");
    }

    TEST_CASE("json output is byte-identical across runs")
    {
        const std::vector<std::string> args = {"--format", "json", "verify", "theorem2", "--max-cells", "4"};
        CHECK(run(args).out == run(args).out);
        const std::vector<std::string> table = {"--format", "json", "table", "--max-cells", "3"};
        CHECK(run(table).out == run(table).out);
    }

    TEST_CASE("table output")
    {
        auto r = run({"--format", "csv", "table", "--max-cells", "2", "--max-letters", "2"});
        CHECK(r.out == "shape,N,ssyt,syt\n1,1,1,1\n1,2,2,1\n2,1,1,1\n2,2,3,1\n\"1,1\",1,0,1\n\"1,1\",2,1,1\n");

        r = run({"--format", "csv", "table", "--max-cells", "0"});
        CHECK(r.out == "shape,N,ssyt,syt\n");

        r = run({"--format", "json", "table", "--max-cells", "1", "--max-letters", "1", "--oracle"});
        const auto j = nlohmann::json::parse(r.out);
        REQUIRE(j.size() == 1);
        CHECK(j[0].at("ssyt") == "1");
    }

    TEST_CASE("--out writes to a file")
    {
        const auto path = std::filesystem::temp_directory_path() / "hookc_cli_test_out.txt";
        std::filesystem::remove(path);
        const auto r = run({"--out", path.string(), "count", "syt", "--shape", "3,2"});
        CHECK(r.code == hcf::cli::kOk);
        CHECK(r.out.empty());
        std::ifstream in(path);
        std::string line;
        std::getline(in, line);
        CHECK(line == "5");
        std::filesystem::remove(path);
    }
}
