#ifndef HSH_VERIFY_HPP
#define HSH_VERIFY_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hsh/catalog.hpp"
#include "hsh/quadrature.hpp"
#include "hsh/tree.hpp"

namespace hsh {

/// Surface area of the unit hypersphere S^{d-1}.
double sphere_area(int dim);

struct GramStats {
    std::size_t size = 0;
    std::vector<std::complex<double>> matrix; // row-major size x size
    double max_offdiag = 0.0;
    double max_diag_dev = 0.0;
};

/// Pairwise inner products of all harmonics of rank <= max_rank over the
/// grid. The tensor structure of both the basis and the grid is exploited;
/// the result is identical to the full node-by-node sum.
GramStats gram_matrix(const ParamTree& tree, int max_rank, const QuadratureGrid& grid);

/// Same for a catalog family under its own measure, each member scaled by
/// its expected norm, so the expected result is again the identity.
GramStats catalog_gram(catalog::Family family, int max_rank, int order);

struct LaplaceSample {
    double residual = 0.0;
    bool chart_singular = false;
};

/// Relative residual of the central-difference Laplacian of
/// F(x) = |x|^rank Y(x/|x|) at the embedding of the point: |sum of stencil
/// terms| / sum of |stencil terms|. Points with |sin theta| (or |cos theta|
/// at a split) below 1e-6 at any node are flagged for resampling instead.
LaplaceSample laplace_residual(const ParamTree& tree, const HshIndex& index,
                               const HyperPoint& point, double step);

struct AdditionCheck {
    std::complex<double> sum;        // sum over the rank-J basis of conj(Y(A)) Y(B)
    std::complex<double> ratio;      // sum / C^{d/2-1}_J(cos omega)
    double cos_omega = 0.0;
    double gegenbauer_value = 0.0;
};

AdditionCheck addition_theorem_check(const ParamTree& tree, int rank,
                                     const HyperPoint& a, const HyperPoint& b);

/// Real unit vectors b_left (dim kappa) and b_right (dim d - kappa); the
/// complex vector (b_left, i b_right) has exactly zero square.
struct ZeroLengthSeed {
    std::vector<double> left;
    std::vector<double> right;

    static ZeroLengthSeed random(int left_dim, int right_dim, std::mt19937_64& rng);
};

/// Relative L2 residual of (a.x)^rank minus its projection onto the rank-J
/// orthonormal basis, over the grid measure. The expansion is exact, so the
/// residual is quadrature noise.
double zero_vector_check(const ParamTree& tree, int rank, const ZeroLengthSeed& seed,
                         const QuadratureGrid& grid);

/// Finite-difference Laplacian residual of (a.x)^rank at a Cartesian point,
/// normalized like laplace_residual.
double zero_vector_laplace_residual(const ZeroLengthSeed& seed, int rank,
                                    std::span<const double> x, double step);

struct CharacterCheck {
    std::complex<double> sum;
    double expected = 0.0;
    double cos_omega = 0.0;
};

/// Sum over all projections of conj(wigner4(A)) wigner4(B) against the group
/// character sin((2j+1) omega)/sin omega at the angle between the embedded
/// 4D unit vectors. Angles are (phi1, beta, phi2).
CharacterCheck character_check(int two_j, const std::array<double, 3>& a,
                               const std::array<double, 3>& b);

/// Uniform random angles per node, for property tests and sampling suites.
HyperPoint random_point(const ParamTree& tree, std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Suite runners, shared by the command line tool and the acceptance tests.

struct CheckRecord {
    std::string name;
    std::string detail;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct MeasuredConstant {
    std::string name;
    double value = 0.0;
};

struct Report {
    std::string suite;
    std::string target;
    int max_rank = 0;
    int order = 0;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;
    std::vector<MeasuredConstant> constants;

    bool pass() const;
};

Report run_gram_suite(const ParamTree& tree, int max_rank, int order);
Report run_catalog_gram_suite(catalog::Family family, int max_rank, int order);
Report run_laplace_suite(const ParamTree& tree, int max_rank, int samples, double step,
                         std::uint64_t seed);
Report run_addition_suite(const ParamTree& tree, int max_rank, int pairs, std::uint64_t seed);
Report run_zerovec_suite(const ParamTree& tree, int max_rank, int order, std::uint64_t seed);
Report run_character_suite(int max_two_j, int pairs, std::uint64_t seed);

} // namespace hsh

#endif
