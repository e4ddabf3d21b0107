#include "hsh/json_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace hsh {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what)
{
    throw std::invalid_argument(path + ": " + what);
}

json parse_text(const std::string& text, const char* what)
{
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw std::invalid_argument(std::string(what) + ": malformed JSON");
    return j;
}

int get_int(const json& j, const char* key, const std::string& path)
{
    if (!j.contains(key) || !j[key].is_number_integer())
        fail(path, std::string("expected integer field \"") + key + "\"");
    return j[key].get<int>();
}

double get_num(const json& j, const char* key, const std::string& path)
{
    if (!j.contains(key) || !j[key].is_number())
        fail(path, std::string("expected numeric field \"") + key + "\"");
    return j[key].get<double>();
}

ParamTree tree_from(const json& j, const std::string& path)
{
    if (!j.is_object() || j.size() != 1)
        fail(path, "a tree node is an object with exactly one of leaf2/leaf3/split/axis");
    if (j.contains("leaf2"))
        return ParamTree::leaf2();
    if (j.contains("leaf3"))
        return ParamTree::leaf3();
    if (j.contains("split")) {
        const json& s = j["split"];
        if (!s.is_object() || !s.contains("left") || !s.contains("right"))
            fail(path, "split needs \"left\" and \"right\" subtrees");
        auto left = tree_from(s["left"], path + ".left");
        auto right = tree_from(s["right"], path + ".right");
        return ParamTree::split(std::move(left), std::move(right));
    }
    if (j.contains("axis"))
        return ParamTree::axis(tree_from(j["axis"], path + ".child"));
    fail(path, "unknown tree node kind");
}

json tree_to(const ParamTree& t)
{
    switch (t.kind()) {
    case NodeKind::leaf2:
        return json{{"leaf2", nullptr}};
    case NodeKind::leaf3:
        return json{{"leaf3", nullptr}};
    case NodeKind::split:
        return json{{"split", {{"left", tree_to(t.left())}, {"right", tree_to(t.right())}}}};
    case NodeKind::axis:
        return json{{"axis", tree_to(t.child())}};
    }
    throw std::logic_error("tree_to: unknown node kind");
}

HshIndex index_from(const json& j, const std::string& path)
{
    if (!j.is_object())
        fail(path, "an index node must be an object");
    if (j.contains("left") || j.contains("right")) {
        if (!j.contains("left") || !j.contains("right"))
            fail(path, "split index needs both \"left\" and \"right\"");
        const int rank = get_int(j, "J", path);
        auto left = index_from(j["left"], path + ".left");
        auto right = index_from(j["right"], path + ".right");
        return HshIndex::split(rank, std::move(left), std::move(right));
    }
    if (j.contains("child")) {
        const int rank = get_int(j, "J", path);
        return HshIndex::axis(rank, index_from(j["child"], path + ".child"));
    }
    if (j.contains("l"))
        return HshIndex::leaf3(get_int(j, "l", path), get_int(j, "m", path));
    if (j.contains("m"))
        return HshIndex::leaf2(get_int(j, "m", path));
    fail(path, "unknown index node kind");
}

json index_to(const HshIndex& idx)
{
    switch (idx.kind) {
    case NodeKind::leaf2:
        return json{{"m", idx.m}};
    case NodeKind::leaf3:
        return json{{"l", idx.rank}, {"m", idx.m}};
    case NodeKind::split:
        return json{{"J", idx.rank},
                    {"left", index_to(idx.children[0])},
                    {"right", index_to(idx.children[1])}};
    case NodeKind::axis:
        return json{{"J", idx.rank}, {"child", index_to(idx.children[0])}};
    }
    throw std::logic_error("index_to: unknown node kind");
}

HyperPoint point_from(const json& j, const std::string& path)
{
    if (!j.is_object())
        fail(path, "a point node must be an object");
    if (j.contains("left") || j.contains("right")) {
        if (!j.contains("left") || !j.contains("right"))
            fail(path, "split point needs both \"left\" and \"right\"");
        const double theta = get_num(j, "theta", path);
        auto left = point_from(j["left"], path + ".left");
        auto right = point_from(j["right"], path + ".right");
        return HyperPoint::split(theta, std::move(left), std::move(right));
    }
    if (j.contains("child"))
        return HyperPoint::axis(get_num(j, "theta", path), point_from(j["child"], path + ".child"));
    if (j.contains("theta"))
        return HyperPoint::leaf3(get_num(j, "theta", path), get_num(j, "phi", path));
    if (j.contains("phi"))
        return HyperPoint::leaf2(get_num(j, "phi", path));
    fail(path, "unknown point node kind");
}

json point_to(const HyperPoint& p)
{
    switch (p.kind) {
    case NodeKind::leaf2:
        return json{{"phi", p.phi}};
    case NodeKind::leaf3:
        return json{{"theta", p.theta}, {"phi", p.phi}};
    case NodeKind::split:
        return json{{"theta", p.theta},
                    {"left", point_to(p.children[0])},
                    {"right", point_to(p.children[1])}};
    case NodeKind::axis:
        return json{{"theta", p.theta}, {"child", point_to(p.children[0])}};
    }
    throw std::logic_error("point_to: unknown node kind");
}

} // namespace

ParamTree tree_from_json(const std::string& text)
{
    auto tree = tree_from(parse_text(text, "tree"), "root");
    if (auto err = validate_tree(tree))
        throw std::invalid_argument(*err);
    return tree;
}

std::string tree_to_json(const ParamTree& tree)
{
    return tree_to(tree).dump();
}

HshIndex index_from_json(const std::string& text)
{
    return index_from(parse_text(text, "index"), "root");
}

std::string index_to_json(const HshIndex& index)
{
    return index_to(index).dump();
}

HyperPoint point_from_json(const std::string& text)
{
    return point_from(parse_text(text, "point"), "root");
}

std::string point_to_json(const HyperPoint& point)
{
    return point_to(point).dump();
}

std::vector<HyperPoint> points_from_json(const std::string& text)
{
    const json j = parse_text(text, "points");
    if (!j.is_array())
        throw std::invalid_argument("points: expected a JSON array of point documents");
    std::vector<HyperPoint> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(point_from(j[i], "points[" + std::to_string(i) + "]"));
    return out;
}

std::string report_to_json(const Report& report)
{
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name},
                          {"detail", c.detail},
                          {"measured", c.measured},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
    json constants = json::array();
    for (const auto& c : report.constants)
        constants.push_back({{"name", c.name}, {"value", c.value}});
    const json j{{"suite", report.suite},
                 {"target", report.target},
                 {"jmax", report.max_rank},
                 {"order", report.order},
                 {"seed", report.seed},
                 {"checks", checks},
                 {"constants", constants},
                 {"pass", report.pass()}};
    return j.dump(2);
}

} // namespace hsh
