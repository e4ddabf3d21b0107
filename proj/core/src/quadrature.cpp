#include "hsh/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hsh {

namespace {
constexpr double pi = std::numbers::pi;
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n)
{
    if (n < 1)
        throw std::domain_error("gauss_legendre: need at least one node");
    std::vector<double> x(n), w(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 1; k <= n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-15)
                break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
    return {std::move(x), std::move(w)};
}

double GridAxis::weight_sum() const
{
    double s = 0.0;
    for (double v : weights)
        s += v;
    return s;
}

GridAxis make_split_axis(int dim, int kappa, int order, double scale)
{
    auto [x, w] = gauss_legendre(order);
    GridAxis axis;
    axis.nodes.resize(order);
    axis.weights.resize(order);
    for (int i = 0; i < order; ++i) {
        const double theta = 0.25 * pi * (x[i] + 1.0);
        axis.nodes[i] = theta;
        axis.weights[i] = scale * w[i] * 0.25 * pi
                        * std::pow(std::cos(theta), kappa - 1)
                        * std::pow(std::sin(theta), dim - kappa - 1);
    }
    return axis;
}

GridAxis make_axis_theta_axis(int dim, int order)
{
    auto [x, w] = gauss_legendre(order);
    GridAxis axis;
    axis.nodes.resize(order);
    axis.weights.resize(order);
    for (int i = 0; i < order; ++i) {
        const double theta = 0.5 * pi * (x[i] + 1.0);
        axis.nodes[i] = theta;
        axis.weights[i] = w[i] * 0.5 * pi * std::pow(std::sin(theta), dim - 2);
    }
    return axis;
}

GridAxis make_polar_axis(int order)
{
    auto [x, w] = gauss_legendre(order);
    GridAxis axis;
    axis.nodes.resize(order);
    axis.weights = w; // measure sin(theta) d theta = d cos(theta)
    for (int i = 0; i < order; ++i)
        axis.nodes[i] = std::acos(x[i]);
    return axis;
}

GridAxis make_azimuth_axis(int count)
{
    if (count < 1)
        throw std::domain_error("make_azimuth_axis: need at least one node");
    GridAxis axis;
    axis.nodes.resize(count);
    axis.weights.assign(count, 2.0 * pi / count);
    for (int i = 0; i < count; ++i)
        axis.nodes[i] = 2.0 * pi * i / count;
    return axis;
}

namespace {

void build_axes(const ParamTree& t, int order, std::vector<GridAxis>& out)
{
    switch (t.kind()) {
    case NodeKind::leaf2:
        out.push_back(make_azimuth_axis(order));
        return;
    case NodeKind::leaf3:
        out.push_back(make_polar_axis(order));
        out.push_back(make_azimuth_axis(order));
        return;
    case NodeKind::split:
        out.push_back(make_split_axis(t.dim(), t.left().dim(), order));
        build_axes(t.left(), order, out);
        build_axes(t.right(), order, out);
        return;
    case NodeKind::axis:
        out.push_back(make_axis_theta_axis(t.dim(), order));
        build_axes(t.child(), order, out);
        return;
    }
}

HyperPoint assemble_point(const ParamTree& t, const std::vector<GridAxis>& axes,
                          const std::vector<std::size_t>& digits, std::size_t& cursor)
{
    switch (t.kind()) {
    case NodeKind::leaf2: {
        const double phi = axes[cursor].nodes[digits[cursor]];
        ++cursor;
        return HyperPoint::leaf2(phi);
    }
    case NodeKind::leaf3: {
        const double theta = axes[cursor].nodes[digits[cursor]];
        ++cursor;
        const double phi = axes[cursor].nodes[digits[cursor]];
        ++cursor;
        return HyperPoint::leaf3(theta, phi);
    }
    case NodeKind::split: {
        const double theta = axes[cursor].nodes[digits[cursor]];
        ++cursor;
        auto left = assemble_point(t.left(), axes, digits, cursor);
        auto right = assemble_point(t.right(), axes, digits, cursor);
        return HyperPoint::split(theta, std::move(left), std::move(right));
    }
    case NodeKind::axis: {
        const double theta = axes[cursor].nodes[digits[cursor]];
        ++cursor;
        return HyperPoint::axis(theta, assemble_point(t.child(), axes, digits, cursor));
    }
    }
    throw std::logic_error("assemble_point: unknown node kind");
}

} // namespace

QuadratureGrid::QuadratureGrid(ParamTree tree, int order)
    : tree_(std::move(tree))
{
    if (order < 1)
        throw std::domain_error("QuadratureGrid: order must be >= 1");
    build_axes(tree_, order, axes_);
    size_ = 1;
    for (const auto& a : axes_)
        size_ *= a.nodes.size();
}

double QuadratureGrid::total_weight() const
{
    double p = 1.0;
    for (const auto& a : axes_)
        p *= a.weight_sum();
    return p;
}

void QuadratureGrid::decompose(std::size_t flat, std::vector<std::size_t>& digits) const
{
    digits.resize(axes_.size());
    for (std::size_t a = axes_.size(); a-- > 0;) {
        const std::size_t n = axes_[a].nodes.size();
        digits[a] = flat % n;
        flat /= n;
    }
}

HyperPoint QuadratureGrid::point_from_digits(const std::vector<std::size_t>& digits) const
{
    std::size_t cursor = 0;
    return assemble_point(tree_, axes_, digits, cursor);
}

HyperPoint QuadratureGrid::point_at(std::size_t flat) const
{
    std::vector<std::size_t> digits;
    decompose(flat, digits);
    return point_from_digits(digits);
}

double QuadratureGrid::weight_from_digits(const std::vector<std::size_t>& digits) const
{
    double w = 1.0;
    for (std::size_t a = 0; a < axes_.size(); ++a)
        w *= axes_[a].weights[digits[a]];
    return w;
}

double QuadratureGrid::weight_at(std::size_t flat) const
{
    std::vector<std::size_t> digits;
    decompose(flat, digits);
    return weight_from_digits(digits);
}

QuadratureGrid build_grid(const ParamTree& tree, int order)
{
    return QuadratureGrid(tree, order);
}

} // namespace hsh
