#ifndef HSH_QUADRATURE_HPP
#define HSH_QUADRATURE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "hsh/tree.hpp"

namespace hsh {

/// Gauss-Legendre nodes and weights on [-1, 1], Newton iteration on the
/// Legendre recurrence; accurate to machine precision for n up to several
/// hundred.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

/// One tensor-grid direction: nodes in the angle variable, weights carrying
/// the one-dimensional measure factor of that angle.
struct GridAxis {
    std::vector<double> nodes;
    std::vector<double> weights;
    double weight_sum() const;
};

GridAxis make_split_axis(int dim, int kappa, int order, double scale = 1.0);
GridAxis make_axis_theta_axis(int dim, int order);
GridAxis make_polar_axis(int order);
GridAxis make_azimuth_axis(int count);

/// Tensor quadrature grid realizing the surface measure of a tree: one axis
/// per hyperangle in depth-first order. The total weight equals the area of
/// the unit hypersphere S^{d-1}.
class QuadratureGrid {
public:
    QuadratureGrid(ParamTree tree, int order);

    const ParamTree& tree() const { return tree_; }
    const std::vector<GridAxis>& axes() const { return axes_; }
    std::size_t size() const { return size_; }
    double total_weight() const;

    /// Per-axis node ids of a flat grid position, last axis fastest.
    void decompose(std::size_t flat, std::vector<std::size_t>& digits) const;
    HyperPoint point_at(std::size_t flat) const;
    HyperPoint point_from_digits(const std::vector<std::size_t>& digits) const;
    double weight_at(std::size_t flat) const;
    double weight_from_digits(const std::vector<std::size_t>& digits) const;

private:
    ParamTree tree_;
    std::vector<GridAxis> axes_;
    std::size_t size_;
};

QuadratureGrid build_grid(const ParamTree& tree, int order);

} // namespace hsh

#endif
