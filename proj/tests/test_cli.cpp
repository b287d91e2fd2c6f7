#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "actk/problems.hpp"
#include "actk/tree_builder.hpp"

using namespace actk;
namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

const fs::path& work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "actk-cli-tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run(const std::string& args) {
    fs::path out = work_dir() / "out.txt";
    std::string cmd = std::string(ACTK_CLI_PATH) + " " + args + " > " + out.string() + " 2> " +
                      (work_dir() / "err.txt").string();
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    std::ifstream in(out);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

std::string write_file(const std::string& name, const std::string& text) {
    fs::path p = work_dir() / name;
    std::ofstream out(p);
    out << text;
    return p.string();
}

std::string distinctness_tree_file() {
    static std::string path = write_file("dist.tree.json", emit_tree_json(distinctness_tree(3).tree));
    return path;
}

}  // namespace

TEST_CASE("tree evaluation through files") {
    RunResult r = run("eval " + distinctness_tree_file() + " --point \"1,1,2\"");
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep.at("accepted") == false);

    RunResult r2 = run("eval " + distinctness_tree_file() + " --point \"1,-1/2,2\"");
    CHECK(json::parse(r2.out).at("accepted") == true);
}

TEST_CASE("validation report") {
    RunResult r = run("validate " + distinctness_tree_file());
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out).at("valid") == true);
}

TEST_CASE("homology of the unit disk closure") {
    std::string dnf = write_file("disk.dnf.json", R"({"inputs":2,"union":[{"conds":[
        {"poly":[{"coef":"1","exps":[2,0]},{"coef":"1","exps":[0,2]},{"coef":"-1","exps":[0,0]}],
         "sign":"le"}]}]})");
    RunResult r = run("betti " + dnf + " --box \"-2:2,-2:2\" --grid 4 --max-dim 1");
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep.at("betti") == json::array({1, 0}));
}

TEST_CASE("counting-bound inversion") {
    RunResult r = run("bound invert --b 1000000 --n 2 --C 1");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out).at("k") == 2);
}

TEST_CASE("extraction round trip agrees with direct evaluation") {
    RunResult ext = run("extract " + distinctness_tree_file());
    REQUIRE(ext.exit_code == 0);
    Dnf f = parse_dnf_json(ext.out);
    Tree t = distinctness_tree(3).tree;
    CHECK(sampled_mismatch_count(t, f, 500, 5) == 0);
}

TEST_CASE("reports are deterministic") {
    std::string a = run("example distinctness --n 3").out;
    std::string b = run("example distinctness --n 3").out;
    CHECK(a == b);
    CHECK(!a.empty());
}

TEST_CASE("exit codes distinguish input errors from resource guards") {
    CHECK(run("eval /nonexistent.json --point \"1\"").exit_code == 1);
    CHECK(run("eval " + distinctness_tree_file() + " --point \"1,2\"").exit_code == 1);

    // 2^5-fold squaring of x+1 expands to 33 terms; a limit of 10 trips the guard.
    TreeBuilder b(1);
    VertexId cur = b.add(ComputationVertex{ArithOp::Add, InputOperand{0}, ConstOperand{Rational(1)}, {}});
    VertexId first = cur;
    for (int i = 0; i < 5; ++i) {
        VertexId sq = b.add(ComputationVertex{ArithOp::Mul, VarOperand{cur}, VarOperand{cur}, {}});
        b.set_next(cur, sq);
        cur = sq;
    }
    VertexId br = b.add(BranchVertex{VarOperand{cur}, b.leaf(true), b.leaf(false), b.leaf(false)});
    b.set_next(cur, br);
    std::string path = write_file("square.tree.json", emit_tree_json(b.take(first)));
    CHECK(run("extract " + path + " --term-limit 10").exit_code == 2);
    CHECK(run("extract " + path).exit_code == 0);
}

TEST_CASE("schedule check subcommand") {
    RunResult good = run("families schedule-check --schedule \"1/10000,1/100,1/25,1/5\" --ratio 4");
    CHECK(json::parse(good.out).at("valid") == true);
    RunResult tight = run("families schedule-check --schedule \"1/10000,1/100,1/25,1/5\" --ratio 10");
    json rep = json::parse(tight.out);
    CHECK(rep.at("valid") == false);
    CHECK(rep.at("diagnostics").size() == 2);
}
