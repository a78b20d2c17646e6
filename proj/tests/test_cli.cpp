#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "json_schema.hpp"

namespace {

namespace fs = std::filesystem;

std::string binary_path() {
    const char* bin = std::getenv("AXISFIT_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "AXISFIT_BIN must point at the CLI binary");
    return bin;
}

std::string source_dir() {
    const char* dir = std::getenv("AXISFIT_SOURCE_DIR");
    REQUIRE_MESSAGE(dir != nullptr, "AXISFIT_SOURCE_DIR must point at the repo root");
    return dir;
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    fs::path out = fs::temp_directory_path() / "axisfit_cli_out.txt";
    std::string command = binary_path() + " " + args + " > " + out.string() + " 2>&1";
    int status = std::system(command.c_str());
    std::ifstream in(out);
    std::stringstream buffer;
    buffer << in.rdbuf();
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, buffer.str()};
}

std::string data(const std::string& name) { return source_dir() + "/tests/data/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
    fs::path path = fs::temp_directory_path() / name;
    std::ofstream out(path);
    out << text;
    return path.string();
}

}  // namespace

TEST_CASE("solve command returns the known optima as json") {
    nlohmann::json schema;
    {
        std::ifstream in(source_dir() + "/schema/result.schema.json");
        REQUIRE(in.good());
        schema = nlohmann::json::parse(in);
    }

    RunResult vd = run("solve --rule vd --input " + data("disagreement4.profile") +
                       " --all-optimal");
    REQUIRE(vd.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(vd.output);
    std::string error;
    CHECK_MESSAGE(schematest::validate(schema, doc, &error), error);
    CHECK(doc["optimal_cost"] == "4");
    REQUIRE(doc["optimal_axes"].size() == 1);
    CHECK(doc["optimal_axes"][0] == nlohmann::json({"a", "b", "c", "d"}));

    RunResult ft = run("solve --rule ft --input " + data("disagreement4.profile") +
                       " --all-optimal --threads 2");
    REQUIRE(ft.exit_code == 0);
    nlohmann::json ft_doc = nlohmann::json::parse(ft.output);
    CHECK(ft_doc["optimal_axes"].size() == 2);
    CHECK(ft_doc["optimal_cost"] == "6");

    // without --all-optimal only one representative is listed
    RunResult single = run("solve --rule ft --input " + data("disagreement4.profile"));
    nlohmann::json single_doc = nlohmann::json::parse(single.output);
    CHECK(single_doc["optimal_axes"].size() == 1);
}

TEST_CASE("cost command prints the published columns") {
    RunResult bc = run("cost --rule bc --input " + data("cost_gallery.profile") +
                       " --axis a,b,c,d,e");
    REQUIRE(bc.exit_code == 0);
    CHECK(bc.output.find("{b,c,d} : 0") != std::string::npos);
    CHECK(bc.output.find("{a,e} : 3") != std::string::npos);
    CHECK(bc.output.find("total 8") != std::string::npos);

    RunResult ms = run("cost --rule ms --input " + data("cost_gallery.profile") +
                       " --axis a,b,c,d,e");
    CHECK(ms.output.find("total 9") != std::string::npos);

    // interval-only profile costs zero
    std::string intervals = write_temp("intervals.profile", "1 : a,b\n2 : b,c\n");
    RunResult zero = run("cost --rule ft --input " + intervals + " --axis a,b,c");
    CHECK(zero.output.find("total 0") != std::string::npos);
}

TEST_CASE("cli error paths use the documented exit codes") {
    std::string malformed = write_temp("bad.profile", "x:\n");
    CHECK(run("solve --rule vd --input " + malformed).exit_code == 2);

    std::string wide;
    for (char c = 'a'; c <= 'm'; ++c) {
        wide += "1 : ";
        wide += c;
        wide += ",";
        wide += (c == 'm') ? 'a' : static_cast<char>(c + 1);
        wide += "\n";
    }
    std::string wide_path = write_temp("wide.profile", wide);
    CHECK(run("solve --rule vd --input " + wide_path).exit_code == 3);

    CHECK(run("solve --rule nope --input " + data("disagreement4.profile")).exit_code == 4);
    CHECK(run("axioms --axiom nope --rule vd --fixtures").exit_code == 4);

    CHECK(run("cost --rule vd --input " + data("disagreement4.profile") + " --axis a,b,c,x")
              .exit_code == 5);
    CHECK(run("cost --rule vd --input " + data("disagreement4.profile") + " --axis a,b,c")
              .exit_code == 5);

    CHECK(run("gen --model maverick --p 0.9 --m 5 --n 10 --out /tmp/axisfit_gen.profile")
              .exit_code == 6);
    CHECK(run("gen --model nope --m 5 --n 10 --out /tmp/axisfit_gen.profile").exit_code == 6);
}

TEST_CASE("gen writes deterministic profiles with a truth sidecar") {
    fs::path dir = fs::temp_directory_path();
    std::string out1 = (dir / "gen1.profile").string();
    std::string out2 = (dir / "gen2.profile").string();
    REQUIRE(run("gen --model maverick --p 0 --m 6 --n 25 --seed 7 --out " + out1).exit_code ==
            0);
    REQUIRE(run("gen --model maverick --p 0 --m 6 --n 25 --seed 7 --out " + out2).exit_code ==
            0);
    std::ifstream a(out1), b(out2);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(fs::exists(out1 + ".truth"));

    // p=0 keeps the profile linear
    RunResult linear = run("check-linear --input " + out1);
    REQUIRE(linear.exit_code == 0);
    CHECK(nlohmann::json::parse(linear.output)["linear"] == true);

    // noisy round-trip: 7 candidates, 100 ballots
    std::string noisy = (dir / "noisy.profile").string();
    REQUIRE(run("gen --model noisy --sigma 0.1 --r 0.4 --m 7 --n 100 --seed 5 --out " + noisy)
                .exit_code == 0);
    std::ifstream nf(noisy);
    int lines = 0;
    std::string line;
    while (std::getline(nf, line))
        if (!line.empty() && line[0] != '#') ++lines;
    CHECK(lines == 100);
}

TEST_CASE("experiment command emits the csv schema") {
    fs::path csv_path = fs::temp_directory_path() / "exp.csv";
    RunResult result = run(
        "experiment --models maverick:p=0.2 --rules vd,ft --m 5 --n 20 --replicates 3 --seed 3 "
        "--out " +
        csv_path.string());
    REQUIRE(result.exit_code == 0);
    std::ifstream in(csv_path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "model,params,rule,replicate,distance");
    int rows = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 6);
}

TEST_CASE("axioms command reports fixture verdicts as json") {
    nlohmann::json schema;
    {
        std::ifstream in(source_dir() + "/schema/axioms.schema.json");
        REQUIRE(in.good());
        schema = nlohmann::json::parse(in);
    }
    RunResult clearance = run("axioms --axiom clearance --rule vd --fixtures");
    REQUIRE(clearance.exit_code == 0);
    nlohmann::json report = nlohmann::json::parse(clearance.output);
    std::string error;
    CHECK_MESSAGE(schematest::validate(schema, report, &error), error);
    REQUIRE(report.size() == 1);
    CHECK(report[0]["holds"] == false);
    CHECK(report[0]["witness"]["axes"][0] == nlohmann::json({"b", "a", "c", "e", "d"}));

    RunResult ft = run("axioms --axiom clearance --rule ft --random 200 --seed 9");
    REQUIRE(ft.exit_code == 0);
    nlohmann::json ft_report = nlohmann::json::parse(ft.output);
    CHECK(ft_report[0]["holds"] == true);

    RunResult stability = run("axioms --axiom stability --rule mf --fixtures");
    REQUIRE(stability.exit_code == 0);
    CHECK(nlohmann::json::parse(stability.output)[0]["holds"] == false);
}

TEST_CASE("ilp export through the cli") {
    fs::path lp_path = fs::temp_directory_path() / "model.lp";
    RunResult result = run("solve --rule vd --input " + data("disagreement4.profile") +
                           " --export-ilp " + lp_path.string());
    REQUIRE(result.exit_code == 0);
    std::ifstream in(lp_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str().find("Minimize") != std::string::npos);
    CHECK(buffer.str().find("Subject To") != std::string::npos);

    CHECK(run("solve --rule ms --input " + data("disagreement4.profile") + " --export-ilp " +
              lp_path.string())
              .exit_code == 4);
}
