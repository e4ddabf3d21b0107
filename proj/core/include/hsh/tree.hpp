#ifndef HSH_TREE_HPP
#define HSH_TREE_HPP

#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hsh {

/// Ranks above this are refused: the log-space constants are validated up to
/// here and silent precision loss beyond is not acceptable.
inline constexpr int max_rank = 40;

enum class NodeKind { leaf2, leaf3, split, axis };

/// Recursive description of how the d-dimensional unit vector is cut into
/// subvectors: a leaf2 is a planar unit vector (polar angle), a leaf3 a
/// spatial unit vector (spherical angles), a split joins two subvectors
/// through one hyperangle, an axis joins one coordinate axis to a subvector.
/// Immutable; copies share structure.
class ParamTree {
public:
    static ParamTree leaf2();
    static ParamTree leaf3();
    static ParamTree split(ParamTree left, ParamTree right);
    static ParamTree axis(ParamTree child);

    NodeKind kind() const;
    int dim() const;
    ParamTree left() const;
    ParamTree right() const;
    ParamTree child() const;

    bool operator==(const ParamTree& other) const;

private:
    struct Node;
    explicit ParamTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Tree-shaped multi-index of one harmonic: a rank at every node, magnetic
/// indices at the leaves. leaf2 carries a signed m (rank |m|), leaf3 carries
/// (l, m), split carries (J, left, right), axis carries (J, child).
struct HshIndex {
    NodeKind kind = NodeKind::leaf2;
    int rank = 0;
    int m = 0;
    std::vector<HshIndex> children;

    static HshIndex leaf2(int m);
    static HshIndex leaf3(int l, int m);
    static HshIndex split(int rank, HshIndex left, HshIndex right);
    static HshIndex axis(int rank, HshIndex child);

    bool operator==(const HshIndex&) const = default;
};

/// Tree-shaped angle assignment: one hyperangle per internal node plus the
/// leaf angles.
struct HyperPoint {
    NodeKind kind = NodeKind::leaf2;
    double theta = 0.0;
    double phi = 0.0;
    std::vector<HyperPoint> children;

    static HyperPoint leaf2(double phi);
    static HyperPoint leaf3(double theta, double phi);
    static HyperPoint split(double theta, HyperPoint left, HyperPoint right);
    static HyperPoint axis(double theta, HyperPoint child);

    bool operator==(const HyperPoint&) const = default;
};

/// nullopt when all structural invariants hold, otherwise a description of
/// the first violation including the node path.
std::optional<std::string> validate_tree(const ParamTree& tree);

/// Structural check of an index against a tree: node kinds, |m| <= l, axis
/// rank ordering, rank cap. Indices that merely fail a lambda selection rule
/// are accepted (they evaluate to exactly zero).
std::optional<std::string> check_index(const ParamTree& tree, const HshIndex& index);

/// Structural check of a point against a tree, including angle ranges.
std::optional<std::string> check_point(const ParamTree& tree, const HyperPoint& point);

/// Cartesian embedding of a point; always a unit vector.
std::vector<double> embed(const ParamTree& tree, const HyperPoint& point);

/// Chart inversion of embed for an arbitrary nonzero vector (the radial part
/// is dropped). At chart singularities the undetermined angles are set to 0.
HyperPoint point_from_cartesian(const ParamTree& tree, std::span<const double> x);

/// All indices of the given rank valid for the tree, in-depth-first
/// lexicographic order. Deterministic.
std::vector<HshIndex> enumerate_indices(const ParamTree& tree, int rank);

/// Number of indices of the given rank; a tree-shape invariant for fixed
/// dimension.
long degeneracy(const ParamTree& tree, int rank);

/// Value of one orthonormal harmonic at one point, assembled recursively as
/// the product of node weight functions and leaf harmonics.
std::complex<double> evaluate(const ParamTree& tree, const HshIndex& index, const HyperPoint& point);

} // namespace hsh

#endif
