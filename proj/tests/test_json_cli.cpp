#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "hsh/json_io.hpp"
#include "hsh/tree.hpp"
#include "hsh/verify.hpp"

using namespace hsh;
namespace fs = std::filesystem;

namespace {

ParamTree random_tree(std::mt19937_64& rng, int depth)
{
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 3 : 1);
    switch (pick(rng)) {
    case 0: return ParamTree::leaf2();
    case 1: return ParamTree::leaf3();
    case 2: return ParamTree::split(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    default: return ParamTree::axis(random_tree(rng, depth - 1));
    }
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args)
{
    const std::string cmd = std::string(HSH_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
        r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch_dir()
{
    const auto dir = fs::temp_directory_path() / "hsh_cli_test";
    fs::create_directories(dir);
    return dir;
}

fs::path write_file(const std::string& name, const std::string& content)
{
    const auto p = scratch_dir() / name;
    std::ofstream(p) << content;
    return p;
}

int count_lines(const std::string& s)
{
    int n = 0;
    for (char c : s)
        n += c == '\n';
    return n;
}

} // namespace

TEST_CASE("documents round-trip through JSON")
{
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 60; ++trial) {
        const auto tree = random_tree(rng, 3);
        CHECK(tree_from_json(tree_to_json(tree)) == tree);

        std::uniform_int_distribution<int> uj(0, 5);
        const auto indices = enumerate_indices(tree, uj(rng));
        std::uniform_int_distribution<std::size_t> pick(0, indices.size() - 1);
        const auto& idx = indices[pick(rng)];
        CHECK(index_from_json(index_to_json(idx)) == idx);

        const auto p = random_point(tree, rng);
        const auto q = point_from_json(point_to_json(p));
        CHECK(q.kind == p.kind);
        CHECK(embed(tree, q) == embed(tree, p));
    }
}

TEST_CASE("parse errors carry the node path")
{
    CHECK_THROWS_WITH_AS(tree_from_json(R"({"split": {"left": {"leaf2": null}}})"),
                         "root: split needs \"left\" and \"right\" subtrees",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(index_from_json(R"({"J": 1, "left": {"m": 0}, "right": {"x": 2}})"),
                         "root.right: unknown index node kind", std::invalid_argument);
    CHECK_THROWS_AS(tree_from_json("not json at all"), std::invalid_argument);
    CHECK_THROWS_AS(point_from_json(R"({"theta": "one"})"), std::invalid_argument);
}

TEST_CASE("cli eval")
{
    const auto tree = write_file("t_leaf2.json", R"({"leaf2": null})");
    const auto index = write_file("i_m0.json", R"({"m": 0})");
    const auto point = write_file("p_phi.json", R"({"phi": 1.0})");
    const auto r = run_cli("eval --tree " + tree.string() + " --index " + index.string()
                           + " --point " + point.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 18) == "0.3989422804014326");

    // selection-rule-violating index evaluates to zero with exit 0
    const auto tree4 = write_file("t_s22.json",
                                  R"({"split": {"left": {"leaf2": null}, "right": {"leaf2": null}}})");
    const auto idx_bad = write_file("i_lambda.json",
                                    R"({"J": 1, "left": {"m": 0}, "right": {"m": 0}})");
    const auto pt4 = write_file("p_s22.json",
                                R"({"theta": 0.4, "left": {"phi": 0.1}, "right": {"phi": 0.2}})");
    const auto rz = run_cli("eval --tree " + tree4.string() + " --index " + idx_bad.string()
                            + " --point " + pt4.string());
    CHECK(rz.exit_code == 0);
    CHECK(rz.out == "0 0\n");

    // mismatched index shape
    const auto rm = run_cli("eval --tree " + tree4.string() + " --index " + index.string()
                            + " --point " + pt4.string());
    CHECK(rm.exit_code == 2);

    // malformed tree
    const auto bad = write_file("t_bad.json", "{\"leaf9\": null}");
    const auto rb = run_cli("eval --tree " + bad.string() + " --index " + index.string()
                            + " --point " + point.string());
    CHECK(rb.exit_code == 2);
}

TEST_CASE("cli degeneracy")
{
    const auto tree = write_file("t_axis3.json", R"({"axis": {"leaf3": null}})");
    const auto r = run_cli("degeneracy --tree " + tree.string() + " --jmax 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "J,count\n0,1\n1,4\n2,9\n3,16\n");
}

TEST_CASE("cli table row count")
{
    const auto tree = write_file("t_leaf3.json", R"({"leaf3": null})");
    const auto points = write_file("p_two.json",
                                   R"([{"theta": 0.5, "phi": 1.0}, {"theta": 1.5, "phi": 2.0}])");
    const auto r = run_cli("table --tree " + tree.string() + " --jmax 1 --points " + points.string());
    CHECK(r.exit_code == 0);
    // header plus (1 + 3) indices x 2 points
    CHECK(count_lines(r.out) == 1 + 8);
    CHECK(r.out.substr(0, 15) == "l,m,theta,phi,r");

    // identical invocations are byte-identical
    const auto r2 = run_cli("table --tree " + tree.string() + " --jmax 1 --points " + points.string());
    CHECK(r.out == r2.out);
}

TEST_CASE("cli verify")
{
    const auto r = run_cli("verify --catalog spherical3 --suite gram --jmax 4 --order 32");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"pass\": true") != std::string::npos);

    const auto rc = run_cli("verify --catalog wigner4 --suite character --jmax 2");
    CHECK(rc.exit_code == 0);

    const auto tree = write_file("t_axis3b.json", R"({"axis": {"leaf3": null}})");
    const auto rt = run_cli("verify --tree " + tree.string()
                            + " --suite gram --jmax 3 --order 24");
    CHECK(rt.exit_code == 0);

    // malformed tree file is an input error
    const auto bad = write_file("t_bad2.json", "[1, 2");
    const auto rb = run_cli("verify --tree " + bad.string() + " --suite gram");
    CHECK(rb.exit_code == 2);

    // character needs the wigner family
    const auto rx = run_cli("verify --catalog spherical3 --suite character");
    CHECK(rx.exit_code == 2);
}
