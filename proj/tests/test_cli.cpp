#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "ramseg/arrangement_io.hpp"
#include "ramseg/catalog.hpp"
#include "ramseg/commands.hpp"
#include "ramseg/composer.hpp"

using namespace ramseg;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("ramseg-test-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

int exit_status(const std::string& args) {
    const std::string cmd = std::string(RAMSEG_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("verify targets") {
    auto r = run({"verify", "ma"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("[PASS] ma") != std::string::npos);

    r = run({"verify", "lemma1"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("clique number 2, witness {1,2}") != std::string::npos);
    CHECK(r.out.find("independence number 4, witness {1,3,5,7}") != std::string::npos);

    r = run({"verify", "mb", "--json"});
    CHECK(r.code == kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["check"] == "mb");
    CHECK(doc[0]["status"] == "pass");

    r = run({"verify", "m0"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("169 segments") != std::string::npos);

    CHECK(run({"verify", "nonsense"}).code == kExitUsage);
    CHECK(run({"verify"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"export", "ma", "--format", "png"}).code == kExitUsage);
    CHECK(run({"export", "cay", "--format", "svg"}).code == kExitUsage);
    CHECK(run({"export", "nothing", "--format", "json"}).code == kExitUsage);
    CHECK(run({"export", "ma", "--format", "json", "--epsilon", "1/0"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("stab command") {
    const auto ma_file = scratch("ma.json");
    REQUIRE(run({"export", "ma", "--format", "json", "--epsilon", "1/1174", "--out", ma_file.string()}).code == 0);
    auto r = run({"stab", ma_file.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("line: a = ", 0) == 0);

    const auto triangle = scratch("triangle.json");
    spit(triangle, R"({"segments": [
        {"left": ["-1/200", "0"], "right": ["1/200", "0"]},
        {"left": ["799/200", "0"], "right": ["801/200", "0"]},
        {"left": ["399/200", "3"], "right": ["401/200", "3"]}]})");
    r = run({"stab", triangle.string()});
    CHECK(r.code == kExitNegative);
    CHECK(r.out == "none\n");

    const auto single = scratch("single.json");
    spit(single, R"({"segments": [{"left": ["1", "2"], "right": ["3", "3"]}]})");
    r = run({"stab", single.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "line: a = 1, b = -2, c = 3\n");

    const auto broken = scratch("broken.json");
    spit(broken, R"({"segments": [{"left": ["1", "2"], "right": ["3", "x"]}]})");
    r = run({"stab", broken.string()});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("$.segments[0].right[1]") != std::string::npos);

    spit(broken, "{ not json");
    CHECK(run({"stab", broken.string()}).code == kExitUsage);
    CHECK(run({"stab", scratch("missing.json").string()}).code == kExitUsage);

    const auto symbolic = scratch("ma-symbolic.json");
    REQUIRE(run({"export", "ma", "--format", "json", "--out", symbolic.string()}).code == 0);
    CHECK(run({"stab", symbolic.string()}).code == kExitUsage);
    CHECK(run({"stab", symbolic.string(), "--epsilon", "1/2000"}).code == kExitOk);
}

TEST_CASE("export formats") {
    auto r = run({"export", "ma", "--format", "svg", "--epsilon", "1/1000"});
    CHECK(r.code == kExitOk);
    CHECK(count(r.out, "<line class=\"segment\"") == 13);
    CHECK(count(r.out, "<text class=\"label\"") == 13);
    CHECK(r.out.find("y stretched by factor") != std::string::npos);

    r = run({"export", "mb", "--format", "svg", "--stab"});
    CHECK(count(r.out, "<line class=\"stab\"") == 1);

    r = run({"export", "cay", "--format", "dot"});
    CHECK(r.code == kExitOk);
    CHECK(count(r.out, " -- ") == 26);
    CHECK(count(r.out, ";\n") == 13 + 26);

    r = run({"export", "cay-complement", "--format", "dot"});
    CHECK(count(r.out, " -- ") == 78 - 26);

    r = run({"export", "m0", "--format", "json"});
    CHECK(r.code == kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["segments"].size() == 169);
    bool all_strings = true;
    for (const auto& s : doc["segments"])
        for (const char* end : {"left", "right"})
            for (const auto& c : s[end]) all_strings &= c.is_string();
    CHECK(all_strings);
}

TEST_CASE("json round trip") {
    const auto m0 = build_m0().arrangement;
    const auto doc = parse_arrangement(arrangement_to_json(m0).dump());
    CHECK_FALSE(doc.symbolic);
    CHECK(doc.numeric() == m0);

    const auto sym = parse_arrangement(arrangement_to_json(build_mb()).dump());
    CHECK(sym.symbolic);
    CHECK(sym.segments == build_mb());
    CHECK_THROWS_AS(sym.numeric(), ParseError);
    CHECK(sym.numeric(Rational(1, 10)) == instantiate(build_mb(), Rational(1, 10)));

    const auto with_param = parse_arrangement(arrangement_to_json(instantiate(build_ma(), Rational(1, 999)),
                                                                  Rational(1, 999)).dump());
    CHECK(with_param.parameter == Rational(1, 999));

    CHECK_THROWS_AS(parse_arrangement(R"({"segments": [{"left": [[[1, "1"], [1, "2"]], "0"], "right": ["1", "0"]}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_arrangement(R"({"segments": [{"left": [[[1, "0"]], "0"], "right": ["1", "0"]}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_arrangement(R"({"segments": [{"left": ["1", "1"], "right": ["1", "1"]}]})").numeric(),
                    std::exception);
    CHECK_THROWS_AS(parse_arrangement(R"({"segments": []})"), ParseError);
}

TEST_CASE("compose command") {
    const auto dot = scratch("m0.dot");
    auto r = run({"compose", "--levels", "0", "--mode", "graph", "--out", dot.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("level 0: n = 169, k = 8, l = 8 [solved]") != std::string::npos);
    const std::string text = slurp(dot);
    CHECK(count(text, " -- ") == lex_product(cayley13(), complement(cayley13())).edge_count());

    const auto geometry = scratch("m0-geometry.json");
    r = run({"compose", "--levels", "0", "--mode", "geometry", "--out", geometry.string()});
    CHECK(r.code == kExitOk);
    CHECK(parse_arrangement(slurp(geometry)).numeric().size() == 169);

    r = run({"compose", "--levels", "2", "--mode", "graph", "--out", scratch("never.dot").string()});
    CHECK(r.code == kExitCap);
    CHECK(r.err.find("level 2") != std::string::npos);
    CHECK(run({"compose", "--levels", "2", "--mode", "geometry"}).code == kExitCap);
    CHECK(run({"compose", "--levels", "1", "--mode", "graph", "--cap", "1000"}).code == kExitCap);
    CHECK(run({"compose", "--mode", "sideways"}).code == kExitUsage);
}

TEST_CASE("outputs are byte-identical across runs") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"export", "ma", "--format", "svg", "--stab"},
          std::vector<std::string>{"export", "mb", "--format", "json", "--epsilon", "1/77"},
          std::vector<std::string>{"export", "m0", "--format", "json"},
          std::vector<std::string>{"export", "cay", "--format", "dot"}}) {
        const auto a = run(args), b = run(args);
        CHECK(a.code == kExitOk);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("installed binary exit codes") {
    CHECK(exit_status("verify ma") == 0);
    CHECK(exit_status("verify bogus") == 2);
    CHECK(exit_status("compose --levels 5 --mode graph") == 3);
    const auto triangle = scratch("triangle-bin.json");
    spit(triangle, R"({"segments": [
        {"left": ["0", "0"], "right": ["1/100", "0"]},
        {"left": ["4", "0"], "right": ["401/100", "0"]},
        {"left": ["2", "3"], "right": ["201/100", "3"]}]})");
    CHECK(exit_status("stab " + triangle.string()) == 1);
}
