#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "paradoxkit/json.hpp"

using paradoxkit::io::Json;

namespace {

struct Result {
    int code = -1;
    std::string out, err;
    Json report;
};

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Result run(const std::string& args)
{
    const auto err_path = std::filesystem::temp_directory_path() / "paradoxkit_cli_stderr.txt";
    const std::string cmd = std::string("\"") + PARADOXKIT_CLI + "\" " + args + " 2>\"" + err_path.string() + "\"";
    Result r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err_path);
    if (!r.out.empty())
        r.report = Json::parse(r.out);
    return r;
}

std::string data(const char* name) { return std::string("\"") + PARADOXKIT_TEST_DATA + "/" + name + "\""; }

// Enough of JSON Schema for report-v1: type, enum, required, properties,
// additionalProperties: false, items.
bool matches_type(const Json& v, const std::string& t)
{
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "number") return v.is_number();
    if (t == "integer") return v.is_number_integer();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

void validate(const Json& v, const Json& schema, const std::string& path, std::vector<std::string>& errors)
{
    if (schema.contains("type")) {
        bool ok = false;
        if (schema["type"].is_array()) {
            for (const auto& t : schema["type"])
                ok = ok || matches_type(v, t.get<std::string>());
        } else {
            ok = matches_type(v, schema["type"].get<std::string>());
        }
        if (!ok) {
            errors.push_back(path + ": wrong type");
            return;
        }
    }
    if (schema.contains("enum") && std::find(schema["enum"].begin(), schema["enum"].end(), v) == schema["enum"].end())
        errors.push_back(path + ": not in enum");
    if (v.is_object()) {
        if (schema.contains("required"))
            for (const auto& k : schema["required"])
                if (!v.contains(k.get<std::string>()))
                    errors.push_back(path + ": missing " + k.get<std::string>());
        const Json props = schema.value("properties", Json::object());
        for (const auto& [k, sub] : v.items()) {
            if (props.contains(k))
                validate(sub, props[k], path + "/" + k, errors);
            else if (schema.value("additionalProperties", true) == false)
                errors.push_back(path + ": unexpected " + k);
        }
    }
    if (v.is_array() && schema.contains("items"))
        for (std::size_t i = 0; i < v.size(); ++i)
            validate(v[i], schema["items"], path + "/" + std::to_string(i), errors);
}

void check_schema(const Result& r)
{
    static const Json schema = Json::parse(slurp(PARADOXKIT_SCHEMA));
    std::vector<std::string> errors;
    validate(r.report, schema, "", errors);
    INFO(r.out);
    CHECK(errors.empty());
    for (const auto& e : errors)
        MESSAGE(e);
    // fail carries a finding
    if (r.report["outcome"] == "fail")
        CHECK_FALSE(r.report["details"]["findings"].empty());
}

} // namespace

TEST_CASE("passing runs exit 0 with a valid report")
{
    for (const char* args : {"words verify --depth 3", "freeness exhaustive --depth 6", "freeness certify",
                             "sphere fixed-points --depth 2", "sphere absorb --depth 1 --iters 3",
                             "smp verify --deg 3 --coef 2", "measures demo --which finite-group",
                             "measures demo --which density", "measures demo --which thm42",
                             "measures demo --which ergodic", "cauchy demo --rank 3"}) {
        INFO(args);
        const auto r = run(args);
        CHECK(r.code == 0);
        CHECK(r.report["outcome"] == "pass");
        check_schema(r);
        CHECK(r.err.find(": pass") != std::string::npos);
    }
}

TEST_CASE("exhaustive report says certified")
{
    const auto r = run("freeness exhaustive --depth 6");
    CHECK(r.report["command"] == "freeness exhaustive");
    CHECK(r.report["parameters"]["depth"] == 6);
    CHECK(r.out.find("certified") != std::string::npos);
}

TEST_CASE("failing runs exit 1")
{
    for (const char* args : {"freeness exhaustive --depth 4 --generators order4", "sphere absorb --depth 1 --iters 4 --bad-angle",
                             "paradox contradiction --f2"}) {
        INFO(args);
        const auto r = run(args);
        CHECK(r.code == 1);
        CHECK(r.report["outcome"] == "fail");
        check_schema(r);
    }
    const auto order4 = run("freeness exhaustive --depth 4 --generators order4");
    CHECK(order4.out.find("aaaa") != std::string::npos);
}

TEST_CASE("contradiction from input files")
{
    const auto toy = run("paradox contradiction --input " + data("toy_cells.json"));
    CHECK(toy.code == 0);
    check_schema(toy);
    const auto f2 = run("paradox contradiction --f2 --invariant");
    CHECK(f2.code == 0);
    const auto swap = run("paradox contradiction --input " + data("swap_model.json"));
    CHECK(swap.code == 1);
    check_schema(swap);
}

TEST_CASE("usage errors exit 64")
{
    for (const char* args : {"freeness exhaustive --depth 0", "words verify --depth -2", "freeness exhaustive",
                             "words verify --depth 3 --bogus", "nosuch", "measures demo --which nothing",
                             "paradox contradiction", "freeness certify --base 0,0,0"}) {
        INFO(args);
        CHECK(run(args).code == 64);
    }
}

TEST_CASE("malformed input reports a location")
{
    const auto r = run("paradox contradiction --input " + data("malformed.json"));
    CHECK(r.code == 64);
    CHECK(r.err.find("malformed.json:4:") != std::string::npos);
    const auto cell = run("paradox contradiction --input " + data("bad_cell.json"));
    CHECK(cell.code == 64);
    CHECK(cell.err.find("/pieces_b/0/0") != std::string::npos);
    CHECK(run("paradox contradiction --input /nonexistent/x.json").code == 64);
}

TEST_CASE("same seed, same bytes")
{
    for (const char* args : {"--seed 7 measures demo --which thm42", "--seed 7 measures demo --which ergodic",
                             "--seed 3 smp verify --deg 3 --coef 2", "--seed 5 cauchy demo --rank 4",
                             "freeness certify"}) {
        INFO(args);
        CHECK(run(args).out == run(args).out);
    }
    CHECK(run("--seed 1 measures demo --which thm42").out != run("--seed 2 measures demo --which thm42").out);
}

TEST_CASE("timing is opt-in")
{
    CHECK(run("words verify --depth 2").report["timing_ms"].is_null());
    CHECK(run("--timing words verify --depth 2").report["timing_ms"].is_number());
}
