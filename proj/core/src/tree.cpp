#include "hsh/tree.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hsh/coefficients.hpp"

namespace hsh {

struct ParamTree::Node {
    NodeKind kind;
    int dim;
    std::shared_ptr<const Node> a; // left or child
    std::shared_ptr<const Node> b; // right
};

ParamTree ParamTree::leaf2()
{
    return ParamTree(std::make_shared<Node>(Node{NodeKind::leaf2, 2, nullptr, nullptr}));
}

ParamTree ParamTree::leaf3()
{
    return ParamTree(std::make_shared<Node>(Node{NodeKind::leaf3, 3, nullptr, nullptr}));
}

ParamTree ParamTree::split(ParamTree left, ParamTree right)
{
    const int d = left.dim() + right.dim();
    return ParamTree(std::make_shared<Node>(Node{NodeKind::split, d, left.node_, right.node_}));
}

ParamTree ParamTree::axis(ParamTree child)
{
    return ParamTree(std::make_shared<Node>(Node{NodeKind::axis, child.dim() + 1, child.node_, nullptr}));
}

NodeKind ParamTree::kind() const { return node_->kind; }
int ParamTree::dim() const { return node_->dim; }
ParamTree ParamTree::left() const { return ParamTree(node_->a); }
ParamTree ParamTree::right() const { return ParamTree(node_->b); }
ParamTree ParamTree::child() const { return ParamTree(node_->a); }

bool ParamTree::operator==(const ParamTree& other) const
{
    if (node_ == other.node_)
        return true;
    if (node_->kind != other.node_->kind || node_->dim != other.node_->dim)
        return false;
    switch (node_->kind) {
    case NodeKind::leaf2:
    case NodeKind::leaf3:
        return true;
    case NodeKind::axis:
        return child() == other.child();
    case NodeKind::split:
        return left() == other.left() && right() == other.right();
    }
    return false;
}

HshIndex HshIndex::leaf2(int m) { return HshIndex{NodeKind::leaf2, std::abs(m), m, {}}; }
HshIndex HshIndex::leaf3(int l, int m) { return HshIndex{NodeKind::leaf3, l, m, {}}; }

HshIndex HshIndex::split(int rank, HshIndex left, HshIndex right)
{
    HshIndex idx{NodeKind::split, rank, 0, {}};
    idx.children.push_back(std::move(left));
    idx.children.push_back(std::move(right));
    return idx;
}

HshIndex HshIndex::axis(int rank, HshIndex child)
{
    HshIndex idx{NodeKind::axis, rank, 0, {}};
    idx.children.push_back(std::move(child));
    return idx;
}

HyperPoint HyperPoint::leaf2(double phi) { return HyperPoint{NodeKind::leaf2, 0.0, phi, {}}; }
HyperPoint HyperPoint::leaf3(double theta, double phi) { return HyperPoint{NodeKind::leaf3, theta, phi, {}}; }

HyperPoint HyperPoint::split(double theta, HyperPoint left, HyperPoint right)
{
    HyperPoint p{NodeKind::split, theta, 0.0, {}};
    p.children.push_back(std::move(left));
    p.children.push_back(std::move(right));
    return p;
}

HyperPoint HyperPoint::axis(double theta, HyperPoint child)
{
    HyperPoint p{NodeKind::axis, theta, 0.0, {}};
    p.children.push_back(std::move(child));
    return p;
}

namespace {

std::string child_path(const std::string& path, const char* edge)
{
    return path + "." + edge;
}

std::optional<std::string> validate_node(const ParamTree& t, const std::string& path)
{
    switch (t.kind()) {
    case NodeKind::leaf2:
        if (t.dim() != 2)
            return path + ": leaf2 must have dim 2";
        return std::nullopt;
    case NodeKind::leaf3:
        if (t.dim() != 3)
            return path + ": leaf3 must have dim 3";
        return std::nullopt;
    case NodeKind::split: {
        if (t.left().dim() < 2)
            return child_path(path, "left") + ": split subvector needs dim >= 2";
        if (t.right().dim() < 2)
            return child_path(path, "right") + ": split subvector needs dim >= 2";
        if (t.dim() != t.left().dim() + t.right().dim())
            return path + ": split dim mismatch";
        if (auto err = validate_node(t.left(), child_path(path, "left")))
            return err;
        return validate_node(t.right(), child_path(path, "right"));
    }
    case NodeKind::axis:
        if (t.dim() != t.child().dim() + 1)
            return path + ": axis dim mismatch";
        return validate_node(t.child(), child_path(path, "child"));
    }
    return path + ": unknown node kind";
}

std::optional<std::string> check_index_node(const ParamTree& t, const HshIndex& idx,
                                            const std::string& path)
{
    if (idx.rank < 0)
        return path + ": rank must be non-negative";
    if (idx.rank > max_rank)
        return path + ": rank " + std::to_string(idx.rank) + " exceeds the supported cap "
             + std::to_string(max_rank);
    if (idx.kind != t.kind())
        return path + ": index node kind does not match the tree";
    switch (t.kind()) {
    case NodeKind::leaf2:
        if (idx.rank != std::abs(idx.m))
            return path + ": leaf2 rank must equal |m|";
        return std::nullopt;
    case NodeKind::leaf3:
        if (std::abs(idx.m) > idx.rank)
            return path + ": leaf3 needs |m| <= l";
        return std::nullopt;
    case NodeKind::split:
        if (idx.children.size() != 2)
            return path + ": split index needs two children";
        if (auto err = check_index_node(t.left(), idx.children[0], child_path(path, "left")))
            return err;
        return check_index_node(t.right(), idx.children[1], child_path(path, "right"));
    case NodeKind::axis:
        if (idx.children.size() != 1)
            return path + ": axis index needs one child";
        if (idx.children[0].rank > idx.rank)
            return path + ": axis rank must be >= child rank";
        return check_index_node(t.child(), idx.children[0], child_path(path, "child"));
    }
    return path + ": unknown node kind";
}

bool angle_in(double x, double lo, double hi) { return x >= lo && x <= hi; }

std::optional<std::string> check_point_node(const ParamTree& t, const HyperPoint& p,
                                            const std::string& path)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (p.kind != t.kind())
        return path + ": point node kind does not match the tree";
    switch (t.kind()) {
    case NodeKind::leaf2:
        if (!angle_in(p.phi, 0.0, two_pi))
            return path + ": phi must lie in [0, 2pi)";
        return std::nullopt;
    case NodeKind::leaf3:
        if (!angle_in(p.theta, 0.0, std::numbers::pi))
            return path + ": theta must lie in [0, pi]";
        if (!angle_in(p.phi, 0.0, two_pi))
            return path + ": phi must lie in [0, 2pi)";
        return std::nullopt;
    case NodeKind::split:
        if (p.children.size() != 2)
            return path + ": split point needs two children";
        if (!angle_in(p.theta, 0.0, 0.5 * std::numbers::pi))
            return path + ": split theta must lie in [0, pi/2]";
        if (auto err = check_point_node(t.left(), p.children[0], child_path(path, "left")))
            return err;
        return check_point_node(t.right(), p.children[1], child_path(path, "right"));
    case NodeKind::axis:
        if (p.children.size() != 1)
            return path + ": axis point needs one child";
        if (!angle_in(p.theta, 0.0, std::numbers::pi))
            return path + ": axis theta must lie in [0, pi]";
        return check_point_node(t.child(), p.children[0], child_path(path, "child"));
    }
    return path + ": unknown node kind";
}

void embed_into(const ParamTree& t, const HyperPoint& p, double scale, std::vector<double>& out)
{
    if (p.kind != t.kind())
        throw std::invalid_argument("embed: point shape does not match the tree");
    switch (t.kind()) {
    case NodeKind::leaf2:
        out.push_back(scale * std::cos(p.phi));
        out.push_back(scale * std::sin(p.phi));
        return;
    case NodeKind::leaf3:
        out.push_back(scale * std::cos(p.theta));
        out.push_back(scale * std::sin(p.theta) * std::cos(p.phi));
        out.push_back(scale * std::sin(p.theta) * std::sin(p.phi));
        return;
    case NodeKind::split:
        embed_into(t.left(), p.children[0], scale * std::cos(p.theta), out);
        embed_into(t.right(), p.children[1], scale * std::sin(p.theta), out);
        return;
    case NodeKind::axis:
        out.push_back(scale * std::cos(p.theta));
        embed_into(t.child(), p.children[0], scale * std::sin(p.theta), out);
        return;
    }
}

double block_norm(std::span<const double> x)
{
    double s = 0.0;
    for (double v : x)
        s += v * v;
    return std::sqrt(s);
}

double wrap_phi(double phi)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (phi < 0.0)
        phi += two_pi;
    if (phi >= two_pi)
        phi -= two_pi;
    return phi;
}

HyperPoint point_from_block(const ParamTree& t, std::span<const double> x)
{
    switch (t.kind()) {
    case NodeKind::leaf2:
        return HyperPoint::leaf2(wrap_phi(std::atan2(x[1], x[0])));
    case NodeKind::leaf3: {
        const double rho = std::hypot(x[1], x[2]);
        return HyperPoint::leaf3(std::atan2(rho, x[0]),
                                 rho == 0.0 ? 0.0 : wrap_phi(std::atan2(x[2], x[1])));
    }
    case NodeKind::split: {
        const int kl = t.left().dim();
        auto xl = x.subspan(0, kl);
        auto xr = x.subspan(kl);
        const double rl = block_norm(xl), rr = block_norm(xr);
        return HyperPoint::split(std::atan2(rr, rl),
                                 point_from_block(t.left(), xl),
                                 point_from_block(t.right(), xr));
    }
    case NodeKind::axis: {
        auto xc = x.subspan(1);
        return HyperPoint::axis(std::atan2(block_norm(xc), x[0]),
                                point_from_block(t.child(), xc));
    }
    }
    throw std::logic_error("point_from_block: unknown node kind");
}

void enumerate_node(const ParamTree& t, int rank, std::vector<HshIndex>& out)
{
    switch (t.kind()) {
    case NodeKind::leaf2:
        if (rank == 0) {
            out.push_back(HshIndex::leaf2(0));
        } else {
            out.push_back(HshIndex::leaf2(-rank));
            out.push_back(HshIndex::leaf2(rank));
        }
        return;
    case NodeKind::leaf3:
        for (int m = -rank; m <= rank; ++m)
            out.push_back(HshIndex::leaf3(rank, m));
        return;
    case NodeKind::split:
        for (int ll = 0; ll <= rank; ++ll) {
            std::vector<HshIndex> lefts;
            enumerate_node(t.left(), ll, lefts);
            for (int lr = (rank - ll) % 2; lr <= rank - ll; lr += 2) {
                std::vector<HshIndex> rights;
                enumerate_node(t.right(), lr, rights);
                for (const auto& a : lefts)
                    for (const auto& b : rights)
                        out.push_back(HshIndex::split(rank, a, b));
            }
        }
        return;
    case NodeKind::axis:
        for (int l = 0; l <= rank; ++l) {
            std::vector<HshIndex> childs;
            enumerate_node(t.child(), l, childs);
            for (auto& c : childs)
                out.push_back(HshIndex::axis(rank, std::move(c)));
        }
        return;
    }
}

long count_node(const ParamTree& t, int rank)
{
    switch (t.kind()) {
    case NodeKind::leaf2:
        return rank == 0 ? 1 : 2;
    case NodeKind::leaf3:
        return 2L * rank + 1;
    case NodeKind::split: {
        long total = 0;
        for (int ll = 0; ll <= rank; ++ll)
            for (int lr = (rank - ll) % 2; lr <= rank - ll; lr += 2)
                total += count_node(t.left(), ll) * count_node(t.right(), lr);
        return total;
    }
    case NodeKind::axis: {
        long total = 0;
        for (int l = 0; l <= rank; ++l)
            total += count_node(t.child(), l);
        return total;
    }
    }
    return 0;
}

std::complex<double> evaluate_node(const ParamTree& t, const HshIndex& idx, const HyperPoint& p)
{
    constexpr double inv_sqrt_2pi = 0.39894228040143267794;
    if (idx.kind != t.kind() || p.kind != t.kind())
        throw std::invalid_argument("evaluate: index or point shape does not match the tree");
    switch (t.kind()) {
    case NodeKind::leaf2:
        return std::polar(inv_sqrt_2pi, idx.m * p.phi);
    case NodeKind::leaf3: {
        const double w = axis_weight({3, idx.rank, std::abs(idx.m)}, p.theta);
        return std::polar(inv_sqrt_2pi * w, idx.m * p.phi);
    }
    case NodeKind::split: {
        const SplitSignature sig{t.dim(), t.left().dim(), idx.rank,
                                 idx.children[0].rank, idx.children[1].rank};
        const double w = split_weight(sig, p.theta);
        if (w == 0.0)
            return {0.0, 0.0};
        return w * evaluate_node(t.left(), idx.children[0], p.children[0])
                 * evaluate_node(t.right(), idx.children[1], p.children[1]);
    }
    case NodeKind::axis: {
        const double w = axis_weight({t.dim(), idx.rank, idx.children[0].rank}, p.theta);
        return w * evaluate_node(t.child(), idx.children[0], p.children[0]);
    }
    }
    throw std::logic_error("evaluate: unknown node kind");
}

} // namespace

std::optional<std::string> validate_tree(const ParamTree& tree)
{
    return validate_node(tree, "root");
}

std::optional<std::string> check_index(const ParamTree& tree, const HshIndex& index)
{
    return check_index_node(tree, index, "root");
}

std::optional<std::string> check_point(const ParamTree& tree, const HyperPoint& point)
{
    return check_point_node(tree, point, "root");
}

std::vector<double> embed(const ParamTree& tree, const HyperPoint& point)
{
    std::vector<double> out;
    out.reserve(tree.dim());
    embed_into(tree, point, 1.0, out);
    return out;
}

HyperPoint point_from_cartesian(const ParamTree& tree, std::span<const double> x)
{
    if (static_cast<int>(x.size()) != tree.dim())
        throw std::invalid_argument("point_from_cartesian: vector length does not match tree dim");
    return point_from_block(tree, x);
}

std::vector<HshIndex> enumerate_indices(const ParamTree& tree, int rank)
{
    if (rank < 0)
        throw std::domain_error("enumerate_indices: rank must be non-negative");
    if (rank > max_rank)
        throw std::domain_error("enumerate_indices: rank exceeds the supported cap");
    std::vector<HshIndex> out;
    enumerate_node(tree, rank, out);
    return out;
}

long degeneracy(const ParamTree& tree, int rank)
{
    if (rank < 0)
        throw std::domain_error("degeneracy: rank must be non-negative");
    return count_node(tree, rank);
}

std::complex<double> evaluate(const ParamTree& tree, const HshIndex& index, const HyperPoint& point)
{
    if (auto err = check_index(tree, index))
        throw std::invalid_argument("evaluate: " + *err);
    return evaluate_node(tree, index, point);
}

} // namespace hsh
