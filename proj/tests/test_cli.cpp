// Black-box checks of the command-line tool: exit codes, JSON shape against
// the shipped schema files, and run-to-run determinism.
// argv[1] = tool binary, argv[2] = repository root (for schemas/).
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "edgewalk/simulate.hpp"

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string g_tool;
std::string g_root;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, bool keep_stderr = false) {
    std::string cmd = g_tool + " " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json load_schema(const std::string& name) {
    std::ifstream in(g_root + "/schemas/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}

// Minimal structural validator covering the subset of JSON Schema the
// shipped files use: type, enum, properties/required/additionalProperties,
// and items.
std::string validate(const json& schema, const json& value, const std::string& path) {
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        bool ok = (t == "object" && value.is_object()) || (t == "array" && value.is_array()) ||
                  (t == "string" && value.is_string()) || (t == "boolean" && value.is_boolean()) ||
                  (t == "integer" && value.is_number_integer()) ||
                  (t == "number" && value.is_number());
        if (!ok) return path + ": expected " + t;
    }
    if (schema.contains("enum")) {
        bool hit = false;
        for (const auto& option : schema["enum"])
            if (option == value) hit = true;
        if (!hit) return path + ": not in enum";
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>()))
                    return path + ": missing required key '" + key.get<std::string>() + "'";
        const json props = schema.value("properties", json::object());
        for (auto it = value.begin(); it != value.end(); ++it) {
            std::string sub = path + "." + it.key();
            if (props.contains(it.key())) {
                if (auto err = validate(props[it.key()], it.value(), sub); !err.empty())
                    return err;
            } else if (schema.contains("additionalProperties")) {
                const json& ap = schema["additionalProperties"];
                if (ap.is_boolean() && !ap.get<bool>()) return sub + ": unexpected key";
                if (ap.is_object())
                    if (auto err = validate(ap, it.value(), sub); !err.empty()) return err;
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (std::size_t i = 0; i < value.size(); ++i)
            if (auto err = validate(schema["items"], value[i], path + "[" + std::to_string(i) + "]");
                !err.empty())
                return err;
    }
    return {};
}

void check_schema(const std::string& schema_name, const json& value) {
    std::string err = validate(load_schema(schema_name), value, "$");
    INFO(err);
    CHECK(err.empty());
}

const char* kPaperTimes = "'1,sqrt(2),sqrt(3),sqrt(5),sqrt(7)'";

} // namespace

TEST_CASE("simulate: schema, values, determinism") {
    std::string args = std::string("simulate --graph h-junction --times ") + kPaperTimes +
                       " --start A --horizon 20";
    RunResult r = run(args);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    check_schema("simulate.schema.json", j);

    // cross-check against a direct library run
    using namespace edgewalk;
    MetricTree h = make_h_junction({TimeSpec::parse("1"), TimeSpec::parse("sqrt(2)"),
                                    TimeSpec::parse("sqrt(3)"), TimeSpec::parse("sqrt(5)"),
                                    TimeSpec::parse("sqrt(7)")});
    SimulationReport rep = simulate(h, h.vertex("A"), 20.0);
    CHECK(j["total_points"] == rep.total_points);
    CHECK(j["births"]["A"] == births_at(rep, h.vertex("A")));
    CHECK(j["births"]["B"] == births_at(rep, h.vertex("B")));
    CHECK(j["initial_departures"] == 3);

    RunResult again = run(args);
    CHECK(again.exit_code == 0);
    CHECK(again.out == r.out); // byte-identical rerun
}

TEST_CASE("formula: schema and term list") {
    RunResult r = run(std::string("formula --graph h-junction --times ") + kPaperTimes +
                      " --root A --grid 10:10:30");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    check_schema("formula.schema.json", j);
    CHECK(j["terms"].size() == 7);
    CHECK(j["counts"].size() == 3);
}

TEST_CASE("game: schema and outcome") {
    RunResult r = run(std::string("game --graph h-junction --times ") + kPaperTimes + " --root A");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    check_schema("game.schema.json", j);
    CHECK(j["outcome"] == "first-player-wins");
    CHECK(j["z0"]["A"] == 0);
    CHECK(j["z0"]["L1"] == 1);
}

TEST_CASE("count: schema and agreement of the two strict counts") {
    RunResult r = run("count --coeffs 2,2.828 --bound 6");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    check_schema("count.schema.json", j);
    CHECK(j["weak"] == 7);
    CHECK(j["strict"] == 1);
    CHECK(j["strict"] == j["strict_inclusion_exclusion"]);
}

TEST_CASE("experiment: schema, pass flag, csv format") {
    RunResult r = run("experiment razn --grid 100:50:400 --format json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    check_schema("experiment.schema.json", j);
    CHECK(j["pass"] == true);
    CHECK(j["series"]["T"].size() == 7);

    RunResult csv = run("experiment razn --grid 10:10:60 --format csv");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out.rfind("T,value\n", 0) == 0);

    RunResult sym = run("experiment symraz --grid 100:50:450 --format json");
    REQUIRE(sym.exit_code == 0);
    json js = json::parse(sym.out);
    check_schema("experiment.schema.json", js);
    CHECK(js["pass"] == true);
}

TEST_CASE("graph files load, with comments") {
    std::string path = g_root + "/build/cli_test_graph.txt";
    {
        std::ofstream out(path);
        out << "# two-edge path\nB1 A 1 # unit edge\nA B2 sqrt(2)\n";
    }
    RunResult r = run("simulate --graph " + path + " --start A --horizon 5");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["total_points"] == 5);
    CHECK(j["births"]["A"] == 3);
    std::remove(path.c_str());
}

TEST_CASE("exit codes") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("simulate --graph h-junction --start A").exit_code == 2);  // missing --horizon
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("simulate --graph h-junction --times 0,1,1,1,1 --start A --horizon 5").exit_code ==
          2);
    CHECK(run("simulate --graph /no/such/file --start A --horizon 5").exit_code == 2);
    CHECK(run("count --coeffs -1 --bound 5").exit_code == 2);
    CHECK(run("experiment bogus --grid 10:10:60").exit_code == 2);
    // commensurate basis: exact engine refuses with its own code
    CHECK(run(std::string("simulate --graph h-junction --times 1,1,1,1,1 --start A") +
              " --horizon 9").exit_code == 3);
}

TEST_CASE("epsilon plumbing") {
    // flag out of range
    CHECK(run(std::string("simulate --graph h-junction --times ") + kPaperTimes +
              " --start A --horizon 5 --epsilon 0.5").exit_code == 2);
    // environment fallback, same range rule
    std::string env_cmd = "EDGEWALK_EPSILON=0.5 " + g_tool +
                          " simulate --graph h-junction --start A --horizon 5 2>/dev/null";
    FILE* pipe = popen(env_cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[256];
    while (fread(buf, 1, sizeof buf, pipe) > 0) {
    }
    CHECK(WEXITSTATUS(pclose(pipe)) == 2);
}

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: test_cli <tool-binary> <repo-root>\n");
        return 1;
    }
    g_tool = argv[1];
    g_root = argv[2];
    doctest::Context ctx;
    // strip our positional args before handing the rest to doctest
    ctx.applyCommandLine(1, argv);
    return ctx.run();
}
