// End-to-end tests of the command-line tool: spawns the real binary and
// checks stdout and exit codes. The binary path comes in via CLI_EXE_PATH.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out; // stdout + stderr
};

RunResult run(const std::string& args) {
    const std::string command = std::string(CLI_EXE_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 512> buffer;
    while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
        result.out.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
}

const char* kTriangleShelling = R"({
  "vertices": ["a", "b", "c"],
  "simplices": [ { "simplex": ["a", "b", "c"], "word": "abcabc" } ]
})";

const char* kSphereComplex = R"({
  "vertices": ["a", "b", "c", "d"],
  "simplices": [
    { "simplex": ["b", "c", "d"] },
    { "simplex": ["c", "a", "d"] },
    { "simplex": ["a", "b", "d"] },
    { "simplex": ["b", "a", "c"] }
  ]
})";

const char* kEdgeFibration = R"({
  "total_vertices": ["A", "P", "B", "Q"],
  "total_simplices": [["A", "P", "B"], ["P", "B", "Q"], ["A", "P", "Q"], ["A", "B", "Q"]],
  "projection": { "A": "a", "P": "a", "B": "b", "Q": "b" },
  "fiber_orders": { "a": ["A", "P"], "b": ["B", "Q"] }
})";

} // namespace

TEST_CASE("curv prints the sample session values") {
    CHECK(run("curv bcabbccacb abc").out == "-1/8\n");
    CHECK(run("curv ddbbccdbc cbd").out == "5/18\n");
    CHECK(run("curv papaspaspsa aps").out == "1/24\n");
    CHECK(run("curv bcabbccacb abc").exit_code == 0);
}

TEST_CASE("curv accepts every method and spelled-out letters") {
    CHECK(run("curv bcabbccacb abc --method mnev").out == "-1/8\n");
    CHECK(run("curv bcabbccacb abc --method sections").out == "-1/8\n");
    CHECK(run("'curv' 'b c a b b c c a c b' 'a b c'").out == "-1/8\n");
    const RunResult all = run("curv bcabbccacb abc --method all");
    CHECK(all.exit_code == 0);
    CHECK(all.out == "mnev: -1/8\ntriangles: -1/8\nsections: -1/8\n");
}

TEST_CASE("curv rejects unusable input with exit 2") {
    CHECK(run("curv abab abc").exit_code == 2);      // missing letter
    CHECK(run("curv abcd abc").exit_code == 2);      // foreign letter
    CHECK(run("curv abcabc ab").exit_code == 2);     // two-letter alphabet
    CHECK(run("curv abcabc aab").exit_code == 2);    // repeated alphabet letter
    CHECK(run("curv abcabc abc --method fancy").exit_code == 2);
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate x y").exit_code == 2);
}

TEST_CASE("validate reports PASS or violations") {
    write_file("cli_triangle.json", kTriangleShelling);
    const RunResult good = run("validate cli_triangle.json");
    CHECK(good.exit_code == 0);
    CHECK(good.out == "PASS\n");

    write_file("cli_bad.json", R"({
      "vertices": ["a", "b", "c"],
      "simplices": [ { "simplex": ["a", "b", "c"], "word": "abc" } ]
    })");
    const RunResult bad = run("validate cli_bad.json");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK(bad.out.find("count-below-two") != std::string::npos);

    CHECK(run("validate missing_file.json").exit_code == 2);
    write_file("cli_garbage.json", "{ not json");
    CHECK(run("validate cli_garbage.json").exit_code == 2);
}

TEST_CASE("cochain prints one line per 2-simplex") {
    write_file("cli_triangle.json", kTriangleShelling);
    const RunResult result = run("cochain cli_triangle.json");
    CHECK(result.exit_code == 0);
    CHECK(result.out == "a b c -> -1/4\n");
}

TEST_CASE("product and chern close the loop over the sphere") {
    write_file("cli_sphere.json", kSphereComplex);
    CHECK(run("product cli_sphere.json 2 -o cli_sphere_shelling.json").exit_code == 0);
    const RunResult validated = run("validate cli_sphere_shelling.json");
    CHECK(validated.out == "PASS\n");
    const RunResult chern = run("chern cli_sphere_shelling.json");
    CHECK(chern.exit_code == 0);
    CHECK(chern.out == "0\n");

    // the product words on stdout parse back to (sorted vertices)^r
    const RunResult stdout_product = run("product cli_sphere.json 3");
    CHECK(stdout_product.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(stdout_product.out);
    bool found = false;
    for (const auto& record : doc.at("simplices"))
        if (record.at("simplex") == nlohmann::json({"b", "a", "c"})) {
            found = true;
            CHECK(record.at("word").size() == 9);
        }
    CHECK(found);

    CHECK(run("product cli_sphere.json 1").exit_code == 2);
}

TEST_CASE("chern refuses non-surfaces with exit 1") {
    write_file("cli_triangle.json", kTriangleShelling);
    const RunResult result = run("chern cli_triangle.json");
    CHECK(result.exit_code == 1);
    CHECK(result.out.find("error:") != std::string::npos);
}

TEST_CASE("extract reads a fibration and emits the shelling") {
    write_file("cli_fibration.json", kEdgeFibration);
    const RunResult result = run("extract cli_fibration.json");
    CHECK(result.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(result.out);
    CHECK(doc.at("simplices").size() == 1);
    CHECK(doc.at("simplices").at(0).at("word") == nlohmann::json({"a", "b", "a", "b"}));

    CHECK(run("extract cli_fibration.json -o cli_extracted.json").exit_code == 0);
    CHECK(run("validate cli_extracted.json").out == "PASS\n");

    // semantic failure: breaking one fiber order is a malformed fibration
    write_file("cli_fibration_bad.json", R"({
      "total_vertices": ["A", "P", "B", "Q"],
      "total_simplices": [["A", "P", "B"], ["P", "B", "Q"], ["A", "P", "Q"], ["A", "B", "Q"]],
      "projection": { "A": "a", "P": "a", "B": "b", "Q": "b" },
      "fiber_orders": { "a": ["A"], "b": ["B", "Q"] }
    })");
    CHECK(run("extract cli_fibration_bad.json").exit_code == 1);
}

TEST_CASE("crosscheck runs deterministically") {
    const RunResult small = run("crosscheck 25 12 7");
    CHECK(small.exit_code == 0);
    CHECK(small.out == "25/25 OK\n");
    CHECK(run("crosscheck 0 6 1").out == "0/0 OK\n");
    CHECK(run("crosscheck 10 12 99").out == run("crosscheck 10 12 99").out);
    CHECK(run("crosscheck 5 5 1").exit_code == 2); // max_len below 6
    CHECK(run("crosscheck 5 12 1 --min-count 3").exit_code == 0);
}
