#ifndef HSH_COEFFICIENTS_HPP
#define HSH_COEFFICIENTS_HPP

#include <complex>

namespace hsh {

/// Identifies one hyperangular weight function at a binary split of a
/// d-dimensional space into subspaces of dimension left_dim and
/// total_dim - left_dim. left_rank / right_rank are the harmonic ranks
/// carried by the two subspaces, rank the total.
struct SplitSignature {
    int total_dim;  // d >= 4
    int left_dim;   // 2 <= kappa <= d - 2
    int rank;       // J >= 0
    int left_rank;  // l >= 0
    int right_rank; // l' >= 0

    /// Node degree lambda = (J - l - l')/2. The weight function vanishes
    /// identically unless this is a non-negative integer.
    bool selection_rule_ok() const
    {
        const int t = rank - left_rank - right_rank;
        return t >= 0 && t % 2 == 0;
    }
    int node_degree() const { return (rank - left_rank - right_rank) / 2; }
};

/// Split of a D-dimensional space into one axis plus a (D-1)-dimensional
/// subspace carrying rank child_rank.
struct AxisSignature {
    int total_dim;  // D >= 3
    int rank;       // J >= 0
    int child_rank; // 0 <= l <= J
};

/// Coefficient of the Gegenbauer polynomial C^{dim/2-1}_degree in the
/// expansion of (b.r)^power for unit vectors b, r of dimension dim.
/// Zero when power and degree have different parities. dim == 2 uses the
/// Chebyshev limit of the Gegenbauer family (the circular-harmonic case).
double monomial_gegenbauer_coefficient(int dim, int power, int degree);

/// Split-node weight function obtained directly as the binomial sum over
/// the two subspace expansions. Exactly zero when the selection rule fails.
std::complex<double> split_kernel_sum(const SplitSignature& sig, double theta);

/// The same function in closed form: constant times
/// cos^l sin^l' P^(a,b)_lambda(cos 2 theta). Matches split_kernel_sum.
std::complex<double> split_kernel_closed(const SplitSignature& sig, double theta);

/// Axis-node weight function as the binomial sum over the child expansion,
/// for a space of total dimension total_dim >= 3.
std::complex<double> axis_kernel_sum(int total_dim, int rank, int child_rank, double theta);

/// Closed form of the axis-node weight: constant times
/// sin^l C^{l+(D-2)/2}_{J-l}(cos theta). Matches axis_kernel_sum.
std::complex<double> axis_kernel_closed(int total_dim, int rank, int child_rank, double theta);

/// Normalization constant making split_weight orthonormal under the measure
/// cos^{kappa-1} sin^{d-kappa-1} d theta on [0, pi/2]. Strictly positive.
/// The selection rule must hold.
double split_norm(const SplitSignature& sig);

/// Orthonormal split-node weight. Exactly zero when the selection rule fails.
double split_weight(const SplitSignature& sig, double theta);

/// Normalization constant making axis_weight orthonormal under the measure
/// sin^{D-2} d theta on [0, pi]. Strictly positive.
double axis_norm(const AxisSignature& sig);

/// Orthonormal axis-node weight, sin^l C^{l+(D-2)/2}_{J-l}(cos theta) scaled
/// by axis_norm.
double axis_weight(const AxisSignature& sig, double theta);

namespace detail {
/// base^n with 0^0 = 1 and exact zero for zero base, positive n.
double pow_nonneg(double base, int n);
/// i^k for any integer k.
std::complex<double> unit_imag_pow(int k);
/// Exact for n <= 56.
double binomial(int n, int k);
} // namespace detail

} // namespace hsh

#endif
