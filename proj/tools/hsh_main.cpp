// Command line front end: evaluate harmonics from JSON documents, tabulate
// bases, count degeneracies, and run the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsh/json_io.hpp"
#include "hsh/quadrature.hpp"
#include "hsh/tree.hpp"
#include "hsh/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_input_error = 2;

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fmt17(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

hsh::ParamTree load_tree(const std::string& path)
{
    return hsh::tree_from_json(slurp(path));
}

// Column names of the flattened index and point coordinates, depth-first.
void index_columns(const hsh::ParamTree& t, const std::string& prefix, std::vector<std::string>& out)
{
    switch (t.kind()) {
    case hsh::NodeKind::leaf2:
        out.push_back(prefix + "m");
        return;
    case hsh::NodeKind::leaf3:
        out.push_back(prefix + "l");
        out.push_back(prefix + "m");
        return;
    case hsh::NodeKind::split:
        out.push_back(prefix + "J");
        index_columns(t.left(), prefix + "left.", out);
        index_columns(t.right(), prefix + "right.", out);
        return;
    case hsh::NodeKind::axis:
        out.push_back(prefix + "J");
        index_columns(t.child(), prefix + "child.", out);
        return;
    }
}

void point_columns(const hsh::ParamTree& t, const std::string& prefix, std::vector<std::string>& out)
{
    switch (t.kind()) {
    case hsh::NodeKind::leaf2:
        out.push_back(prefix + "phi");
        return;
    case hsh::NodeKind::leaf3:
        out.push_back(prefix + "theta");
        out.push_back(prefix + "phi");
        return;
    case hsh::NodeKind::split:
        out.push_back(prefix + "theta");
        point_columns(t.left(), prefix + "left.", out);
        point_columns(t.right(), prefix + "right.", out);
        return;
    case hsh::NodeKind::axis:
        out.push_back(prefix + "theta");
        point_columns(t.child(), prefix + "child.", out);
        return;
    }
}

void index_values(const hsh::HshIndex& idx, std::vector<int>& out)
{
    switch (idx.kind) {
    case hsh::NodeKind::leaf2:
        out.push_back(idx.m);
        return;
    case hsh::NodeKind::leaf3:
        out.push_back(idx.rank);
        out.push_back(idx.m);
        return;
    case hsh::NodeKind::split:
        out.push_back(idx.rank);
        index_values(idx.children[0], out);
        index_values(idx.children[1], out);
        return;
    case hsh::NodeKind::axis:
        out.push_back(idx.rank);
        index_values(idx.children[0], out);
        return;
    }
}

void point_values(const hsh::HyperPoint& p, std::vector<double>& out)
{
    switch (p.kind) {
    case hsh::NodeKind::leaf2:
        out.push_back(p.phi);
        return;
    case hsh::NodeKind::leaf3:
        out.push_back(p.theta);
        out.push_back(p.phi);
        return;
    case hsh::NodeKind::split:
        out.push_back(p.theta);
        point_values(p.children[0], out);
        point_values(p.children[1], out);
        return;
    case hsh::NodeKind::axis:
        out.push_back(p.theta);
        point_values(p.children[0], out);
        return;
    }
}

int cmd_eval(const std::string& tree_file, const std::string& index_file,
             const std::string& point_file)
{
    const auto tree = load_tree(tree_file);
    const auto index = hsh::index_from_json(slurp(index_file));
    if (auto err = hsh::check_index(tree, index))
        throw std::invalid_argument(*err);
    const auto point = hsh::point_from_json(slurp(point_file));
    if (auto err = hsh::check_point(tree, point))
        throw std::invalid_argument(*err);
    const auto v = hsh::evaluate(tree, index, point);
    std::cout << fmt17(v.real()) << " " << fmt17(v.imag()) << "\n";
    return exit_ok;
}

int cmd_table(const std::string& tree_file, int jmax, int order,
              const std::string& points_file, const std::string& format)
{
    const auto tree = load_tree(tree_file);
    if (jmax < 0 || jmax > hsh::max_rank)
        throw std::invalid_argument("table: jmax must lie in [0, " + std::to_string(hsh::max_rank) + "]");

    std::vector<hsh::HyperPoint> points;
    if (!points_file.empty()) {
        points = hsh::points_from_json(slurp(points_file));
        for (const auto& p : points)
            if (auto err = hsh::check_point(tree, p))
                throw std::invalid_argument(*err);
    } else {
        const hsh::QuadratureGrid grid(tree, order);
        points.reserve(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            points.push_back(grid.point_at(i));
    }

    std::vector<hsh::HshIndex> indices;
    long expected_rows = 0;
    for (int j = 0; j <= jmax; ++j) {
        auto batch = hsh::enumerate_indices(tree, j);
        expected_rows += static_cast<long>(batch.size()) * static_cast<long>(points.size());
        if (static_cast<long>(batch.size()) != hsh::degeneracy(tree, j))
            throw std::logic_error("table: enumeration does not match the degeneracy count");
        indices.insert(indices.end(), batch.begin(), batch.end());
    }

    std::vector<std::string> icols, pcols;
    index_columns(tree, "", icols);
    point_columns(tree, "", pcols);

    const bool as_json = format == "json";
    long rows = 0;
    if (as_json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& idx : indices)
            for (const auto& p : points) {
                std::vector<int> iv;
                std::vector<double> pv;
                index_values(idx, iv);
                point_values(p, pv);
                nlohmann::json row;
                for (std::size_t c = 0; c < icols.size(); ++c)
                    row[icols[c]] = iv[c];
                for (std::size_t c = 0; c < pcols.size(); ++c)
                    row[pcols[c]] = pv[c];
                const auto v = hsh::evaluate(tree, idx, p);
                row["re"] = v.real();
                row["im"] = v.imag();
                out.push_back(std::move(row));
                ++rows;
            }
        std::cout << out.dump(2) << "\n";
    } else {
        for (std::size_t c = 0; c < icols.size(); ++c)
            std::cout << icols[c] << ",";
        for (std::size_t c = 0; c < pcols.size(); ++c)
            std::cout << pcols[c] << ",";
        std::cout << "re,im\n";
        for (const auto& idx : indices)
            for (const auto& p : points) {
                std::vector<int> iv;
                std::vector<double> pv;
                index_values(idx, iv);
                point_values(p, pv);
                for (int v : iv)
                    std::cout << v << ",";
                for (double v : pv)
                    std::cout << fmt17(v) << ",";
                const auto v = hsh::evaluate(tree, idx, p);
                std::cout << fmt17(v.real()) << "," << fmt17(v.imag()) << "\n";
                ++rows;
            }
    }
    if (rows != expected_rows)
        throw std::logic_error("table: row count mismatch");
    return exit_ok;
}

int cmd_degeneracy(const std::string& tree_file, int jmax, const std::string& format)
{
    const auto tree = load_tree(tree_file);
    if (jmax < 0 || jmax > hsh::max_rank)
        throw std::invalid_argument("degeneracy: jmax must lie in [0, " + std::to_string(hsh::max_rank) + "]");
    if (format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (int j = 0; j <= jmax; ++j)
            out.push_back({{"J", j}, {"count", hsh::degeneracy(tree, j)}});
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "J,count\n";
        for (int j = 0; j <= jmax; ++j)
            std::cout << j << "," << hsh::degeneracy(tree, j) << "\n";
    }
    return exit_ok;
}

hsh::ParamTree catalog_tree(hsh::catalog::Family f)
{
    using hsh::ParamTree;
    using F = hsh::catalog::Family;
    switch (f) {
    case F::circular2: return ParamTree::leaf2();
    case F::spherical3: return ParamTree::leaf3();
    case F::hsh4_axis: return ParamTree::axis(ParamTree::leaf3());
    case F::hsh4_split:
    case F::wigner4: return ParamTree::split(ParamTree::leaf2(), ParamTree::leaf2());
    case F::hsh5: return ParamTree::split(ParamTree::leaf2(), ParamTree::leaf3());
    case F::hsh6_two3: return ParamTree::split(ParamTree::leaf3(), ParamTree::leaf3());
    case F::hsh6_three2:
        return ParamTree::split(ParamTree::leaf2(),
                                ParamTree::split(ParamTree::leaf2(), ParamTree::leaf2()));
    }
    throw std::logic_error("catalog_tree: unknown family");
}

int cmd_verify(const std::string& tree_file, const std::string& catalog_name,
               const std::string& suite, int jmax, int order, std::uint64_t seed)
{
    if (tree_file.empty() == catalog_name.empty())
        throw std::invalid_argument("verify: exactly one of --tree and --catalog is required");

    std::optional<hsh::catalog::Family> family;
    hsh::ParamTree tree = hsh::ParamTree::leaf2();
    std::string target;
    if (!catalog_name.empty()) {
        family = hsh::catalog::family_from_name(catalog_name);
        tree = catalog_tree(*family);
        target = catalog_name;
    } else {
        tree = load_tree(tree_file);
        target = hsh::tree_to_json(tree);
    }

    const bool all = suite == "all";
    if (!all && suite != "gram" && suite != "laplace" && suite != "addition"
        && suite != "zerovec" && suite != "character")
        throw std::invalid_argument("verify: unknown suite " + suite);

    constexpr int laplace_samples = 100;
    constexpr double laplace_step = 1e-3;
    constexpr int addition_pairs = 50;
    constexpr int character_pairs = 20;

    std::vector<hsh::Report> reports;
    if (suite == "gram" || all) {
        reports.push_back(family ? hsh::run_catalog_gram_suite(*family, jmax, order)
                                 : hsh::run_gram_suite(tree, jmax, order));
    }
    if (suite == "laplace" || all)
        reports.push_back(hsh::run_laplace_suite(tree, jmax, laplace_samples, laplace_step, seed));
    if (suite == "addition" || all) {
        if (tree.dim() < 3) {
            if (!all)
                throw std::invalid_argument("verify: the addition suite needs dimension >= 3");
        } else {
            reports.push_back(hsh::run_addition_suite(tree, jmax, addition_pairs, seed));
        }
    }
    if (suite == "zerovec" || all)
        reports.push_back(hsh::run_zerovec_suite(tree, jmax, order, seed));
    if (suite == "character" || all) {
        const bool is_wigner = family && *family == hsh::catalog::Family::wigner4;
        if (is_wigner)
            reports.push_back(hsh::run_character_suite(jmax, character_pairs, seed));
        else if (!all)
            throw std::invalid_argument("verify: the character suite needs --catalog wigner4");
    }

    bool pass = true;
    nlohmann::json out;
    out["target"] = target;
    out["reports"] = nlohmann::json::array();
    for (auto& rep : reports) {
        rep.target = target;
        out["reports"].push_back(nlohmann::json::parse(hsh::report_to_json(rep)));
        pass = pass && rep.pass();
    }
    out["pass"] = pass;
    std::cout << out.dump(2) << "\n";
    return pass ? exit_ok : exit_verify_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hyperspherical harmonics for recursive hypersphere parametrizations"};
    app.require_subcommand(1);

    std::string tree_file, index_file, point_file, points_file, catalog_name;
    std::string suite = "all", format = "csv";
    int jmax = 4, order = 32;
    std::uint64_t seed = 1;

    auto* eval = app.add_subcommand("eval", "Evaluate one harmonic at one point");
    eval->add_option("--tree", tree_file, "Tree JSON file")->required();
    eval->add_option("--index", index_file, "Index JSON file")->required();
    eval->add_option("--point", point_file, "Point JSON file")->required();

    auto* table = app.add_subcommand("table", "Tabulate all harmonics of rank <= jmax");
    table->add_option("--tree", tree_file, "Tree JSON file")->required();
    table->add_option("--jmax", jmax, "Largest rank")->required();
    table->add_option("--order", order, "Quadrature grid order used for the point set");
    table->add_option("--points", points_file, "JSON array of points (overrides --order)");
    table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* verify = app.add_subcommand("verify", "Run verification suites, emit a JSON report");
    verify->add_option("--tree", tree_file, "Tree JSON file");
    verify->add_option("--catalog", catalog_name, "Catalog family name")
        ->check(CLI::IsMember(hsh::catalog::family_names()));
    verify->add_option("--suite", suite, "gram|laplace|addition|zerovec|character|all")
        ->check(CLI::IsMember({"gram", "laplace", "addition", "zerovec", "character", "all"}));
    verify->add_option("--jmax", jmax, "Largest rank checked");
    verify->add_option("--order", order, "Quadrature order");
    verify->add_option("--seed", seed, "Random seed for sampled checks");

    auto* degen = app.add_subcommand("degeneracy", "Print rank degeneracies");
    degen->add_option("--tree", tree_file, "Tree JSON file")->required();
    degen->add_option("--jmax", jmax, "Largest rank")->required();
    degen->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input_error;
    }

    try {
        if (eval->parsed())
            return cmd_eval(tree_file, index_file, point_file);
        if (table->parsed())
            return cmd_table(tree_file, jmax, order, points_file, format);
        if (verify->parsed())
            return cmd_verify(tree_file, catalog_name, suite, jmax, order, seed);
        if (degen->parsed())
            return cmd_degeneracy(tree_file, jmax, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}
